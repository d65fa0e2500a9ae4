#include "fqf/upoly.hpp"

#include <stdexcept>

namespace fqf {

std::string rational_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

Rational q_pow(long q, long e) {
  Rational r(1);
  if (e >= 0) {
    mpz_ui_pow_ui(r.get_num_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(r.get_den_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(-e));
  }
  r.canonicalize();
  return r;
}

UPoly UPoly::constant(const Rational& r) {
  UPoly f;
  if (r != 0) f.c_ = {r};
  return f;
}

UPoly UPoly::monomial(const Rational& c, int k) {
  UPoly f;
  if (c != 0) {
    f.c_.assign(k + 1, Rational(0));
    f.c_[k] = c;
  }
  return f;
}

void UPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

UPoly UPoly::operator+(const UPoly& g) const {
  std::vector<Rational> r(std::max(c_.size(), g.c_.size()), Rational(0));
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& g) const {
  std::vector<Rational> r(std::max(c_.size(), g.c_.size()), Rational(0));
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& g) const {
  if (is_zero() || g.is_zero()) return UPoly();
  std::vector<Rational> r(c_.size() + g.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j)
      r[i + j] += c_[i] * g.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& u) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * u + c_[i];
  return acc;
}

UPoly UPoly::substitute_u_squared() const {
  if (is_zero()) return UPoly();
  std::vector<Rational> r(2 * c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::substitute_neg_u() const {
  std::vector<Rational> r(c_);
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return UPoly(std::move(r));
}

UPoly UPoly::divide_exact(const UPoly& g) const {
  if (g.is_zero()) throw std::domain_error("UPoly::divide_exact: division by zero");
  std::vector<Rational> rem(c_);
  if (degree() < g.degree()) {
    if (!is_zero()) throw std::domain_error("UPoly::divide_exact: inexact division");
    return UPoly();
  }
  std::vector<Rational> quot(c_.size() - g.c_.size() + 1, Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= g.degree(); --k) {
    Rational c = rem[k] / g.c_.back();
    int shift = k - g.degree();
    quot[shift] = c;
    for (size_t i = 0; i < g.c_.size(); ++i) rem[shift + i] -= c * g.c_[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("UPoly::divide_exact: inexact division");
  return UPoly(std::move(quot));
}

std::vector<std::string> UPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(rational_str(c));
  return out;
}

}  // namespace fqf
