#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fqf/fp.hpp"

namespace fqf {

// Degree of the zero polynomial. A sentinel, not a value to do arithmetic
// with: deg(f*g) = deg f + deg g is only stated for nonzero operands.
inline constexpr int kZeroDeg = -1;

// Dense univariate polynomial over F_q, coefficients lowest degree first.
// The leading coefficient of a nonzero polynomial is always nonzero.
class Poly {
 public:
  Poly() : q_(3) {}
  explicit Poly(int q) : q_(q) {}
  Poly(int q, std::vector<int> coeffs);

  static Poly zero(int q) { return Poly(q); }
  static Poly constant(int q, long long c);
  static Poly one(int q) { return constant(q, 1); }
  static Poly t(int q) { return Poly(q, {0, 1}); }
  // c * t^k
  static Poly monomial(int q, long long c, int k);

  int q() const { return q_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int lc() const;
  int coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  const std::vector<int>& coeffs() const { return c_; }

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly operator-() const;
  Poly operator*(int c) const;
  bool operator==(const Poly& g) const { return q_ == g.q_ && c_ == g.c_; }
  bool operator!=(const Poly& g) const { return !(*this == g); }
  // Lexicographic on (deg, coefficient vector); a total order used for
  // deterministic container keys, not a mathematical order.
  bool operator<(const Poly& g) const;

  // Quotient and remainder with deg rem < deg g. Throws on g = 0.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  Poly operator/(const Poly& g) const { return divmod(g).first; }
  Poly operator%(const Poly& g) const { return divmod(g).second; }
  bool divides(const Poly& f) const { return !is_zero() && (f % *this).is_zero(); }

  Poly monic() const;
  Poly derivative() const;
  int eval(int x) const;
  Poly pow(int e) const;

  std::string to_string() const;         // "t^3+2*t+1"
  std::string to_coeff_list() const;     // "1,2,0,1" lowest degree first
  static Poly parse(const std::string& s, int q);

 private:
  void normalize();
  void check(const Poly& g) const;

  int q_;
  std::vector<int> c_;
};

Poly gcd(const Poly& f, const Poly& g);  // monic (or zero)
// g, u, v with u*f + v*g = g.cd, gcd monic.
struct ExtendedGcd { Poly g, u, v; };
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

// b^e mod m
Poly pow_mod(const Poly& b, long long e, const Poly& m);

// Enumeration of polynomials of degree exactly k, in lexicographic order of
// the coefficient vector with the constant coefficient varying fastest.
// for_each_monic visits q^k monic polynomials; for_each_of_degree visits
// (q-1)q^k polynomials with arbitrary nonzero leading coefficient.
void for_each_monic(int q, int k, const std::function<void(const Poly&)>& fn);
void for_each_of_degree(int q, int k, const std::function<void(const Poly&)>& fn);
std::vector<Poly> enumerate_monic(int q, int k);
std::vector<Poly> enumerate_of_degree(int q, int k);

}  // namespace fqf
