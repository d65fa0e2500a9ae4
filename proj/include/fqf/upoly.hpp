#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fqf {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_str(const Rational& r);  // "num/den", "n" when den = 1
Rational parse_rational(const std::string& s);

// q^e for possibly negative e, as an exact rational.
Rational q_pow(long q, long e);

// Polynomial in the formal variable u = q^{-s} with exact rational
// coefficients, constant term first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UPoly constant(const Rational& r);
  static UPoly one() { return constant(1); }
  // c * u^k
  static UPoly monomial(const Rational& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& g) const;
  UPoly operator-(const UPoly& g) const;
  UPoly operator*(const UPoly& g) const;
  UPoly operator*(const Rational& r) const;
  bool operator==(const UPoly& g) const { return c_ == g.c_; }

  Rational eval(const Rational& u) const;
  UPoly substitute_u_squared() const;  // f(u) -> f(u^2)
  UPoly substitute_neg_u() const;      // f(u) -> f(-u)

  // Exact division; throws if the remainder is nonzero.
  UPoly divide_exact(const UPoly& g) const;

  std::vector<std::string> to_strings() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace fqf
