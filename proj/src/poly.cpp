#include "fqf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fqf {

Poly::Poly(int q, std::vector<int> coeffs) : q_(q), c_(std::move(coeffs)) {
  if (!is_odd_prime(q)) throw std::invalid_argument("Poly: q must be an odd prime");
  for (auto& v : c_) v = fp_norm(v, q_);
  normalize();
}

Poly Poly::constant(int q, long long c) {
  Poly f(q);
  int v = fp_norm(c, q);
  if (v != 0) f.c_ = {v};
  return f;
}

Poly Poly::monomial(int q, long long c, int k) {
  Poly f(q);
  int v = fp_norm(c, q);
  if (v != 0) {
    f.c_.assign(k + 1, 0);
    f.c_[k] = v;
  }
  return f;
}

int Poly::lc() const {
  if (is_zero()) throw std::domain_error("lc: zero polynomial");
  return c_.back();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check(const Poly& g) const {
  if (q_ != g.q_) throw std::invalid_argument("Poly: modulus mismatch");
}

Poly Poly::operator+(const Poly& g) const {
  check(g);
  Poly r(q_);
  r.c_.resize(std::max(c_.size(), g.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = fp_add(coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)), q_);
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& g) const {
  check(g);
  Poly r(q_);
  r.c_.resize(std::max(c_.size(), g.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = fp_sub(coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)), q_);
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r(q_);
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = fp_neg(c_[i], q_);
  return r;
}

Poly Poly::operator*(const Poly& g) const {
  check(g);
  if (is_zero() || g.is_zero()) return zero(q_);
  Poly r(q_);
  r.c_.assign(c_.size() + g.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < g.c_.size(); ++j)
      r.c_[i + j] = fp_norm(r.c_[i + j] + static_cast<long long>(c_[i]) * g.c_[j], q_);
  }
  return r;
}

Poly Poly::operator*(int c) const {
  c = fp_norm(c, q_);
  if (c == 0) return zero(q_);
  Poly r(q_);
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = fp_mul(c_[i], c, q_);
  return r;
}

bool Poly::operator<(const Poly& g) const {
  if (deg() != g.deg()) return deg() < g.deg();
  for (int i = deg(); i >= 0; --i)
    if (coeff(i) != g.coeff(i)) return coeff(i) < g.coeff(i);
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  check(g);
  if (g.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  Poly quot(q_), rem = *this;
  if (deg() < g.deg()) return {quot, rem};
  quot.c_.assign(deg() - g.deg() + 1, 0);
  int inv_lc = fp_inv(g.lc(), q_);
  for (int k = rem.deg(); k >= g.deg() && !rem.is_zero(); k = rem.deg()) {
    int c = fp_mul(rem.c_.back(), inv_lc, q_);
    int shift = k - g.deg();
    quot.c_[shift] = c;
    for (int i = 0; i <= g.deg(); ++i)
      rem.c_[shift + i] = fp_norm(rem.c_[shift + i] - static_cast<long long>(c) * g.c_[i], q_);
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  return *this * fp_inv(lc(), q_);
}

Poly Poly::derivative() const {
  Poly r(q_);
  if (deg() < 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = fp_norm(static_cast<long long>(c_[i]) * static_cast<long long>(i), q_);
  r.normalize();
  return r;
}

int Poly::eval(int x) const {
  x = fp_norm(x, q_);
  int r = 0;
  for (int i = deg(); i >= 0; --i) r = fp_norm(static_cast<long long>(r) * x + c_[i], q_);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Poly r = one(q_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
  int q = f.q();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::one(q), s1 = Poly::zero(q);
  Poly t0 = Poly::zero(q), t1 = Poly::one(q);
  while (!r1.is_zero()) {
    auto [qt, rem] = r0.divmod(r1);
    r0 = r1; r1 = rem;
    Poly s2 = s0 - qt * s1; s0 = s1; s1 = s2;
    Poly t2 = t0 - qt * t1; t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  int inv = fp_inv(r0.lc(), q);
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow_mod(const Poly& b, long long e, const Poly& m) {
  if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
  Poly r = Poly::one(b.q()) % m, base = b % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

namespace {

void for_each_with_leading(int q, int k, int lc_lo, int lc_hi,
                           const std::function<void(const Poly&)>& fn) {
  std::vector<int> c(k + 1, 0);
  for (int lead = lc_lo; lead <= lc_hi; ++lead) {
    c[k] = lead;
    std::fill(c.begin(), c.begin() + k, 0);
    while (true) {
      fn(Poly(q, c));
      int i = 0;
      while (i < k && c[i] == q - 1) c[i++] = 0;
      if (i == k) break;
      ++c[i];
    }
  }
}

}  // namespace

void for_each_monic(int q, int k, const std::function<void(const Poly&)>& fn) {
  if (k < 0) throw std::invalid_argument("for_each_monic: negative degree");
  for_each_with_leading(q, k, 1, 1, fn);
}

void for_each_of_degree(int q, int k, const std::function<void(const Poly&)>& fn) {
  if (k < 0) throw std::invalid_argument("for_each_of_degree: negative degree");
  for_each_with_leading(q, k, 1, q - 1, fn);
}

std::vector<Poly> enumerate_monic(int q, int k) {
  std::vector<Poly> out;
  for_each_monic(q, k, [&](const Poly& f) { out.push_back(f); });
  return out;
}

std::vector<Poly> enumerate_of_degree(int q, int k) {
  std::vector<Poly> out;
  for_each_of_degree(q, k, [&](const Poly& f) { out.push_back(f); });
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    int c = c_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string Poly::to_coeff_list() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  return os.str();
}

namespace {

// Parse one monomial of the form  c | t | t^k | c*t | c*t^k | -...
struct MonomialParser {
  const std::string& s;
  size_t pos = 0;
  int q;

  void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("Poly::parse: expected integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }

  Poly parse_monomial() {
    skip_ws();
    long long c = 1;
    int k = 0;
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = parse_int();
      have_coeff = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') { ++pos; skip_ws(); }
    }
    if (pos < s.size() && (s[pos] == 't' || s[pos] == 'T')) {
      ++pos;
      k = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = static_cast<int>(parse_int());
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("Poly::parse: malformed term in '" + s + "'");
    }
    return Poly::monomial(q, c, k);
  }
};

}  // namespace

Poly Poly::parse(const std::string& s, int q) {
  if (s.find(',') != std::string::npos) {
    // coefficient-list form, lowest degree first
    std::vector<int> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
      c.push_back(fp_norm(std::stoll(tok), q));
    return Poly(q, c);
  }
  MonomialParser mp{s, 0, q};
  mp.skip_ws();
  if (mp.pos >= s.size()) throw std::invalid_argument("Poly::parse: empty input");
  Poly acc = Poly::zero(q);
  int sign = 1;
  if (s[mp.pos] == '-') { sign = -1; ++mp.pos; }
  else if (s[mp.pos] == '+') { ++mp.pos; }
  while (true) {
    Poly m = mp.parse_monomial();
    acc = sign < 0 ? acc - m : acc + m;
    mp.skip_ws();
    if (mp.pos >= s.size()) break;
    if (s[mp.pos] == '+') { sign = 1; ++mp.pos; }
    else if (s[mp.pos] == '-') { sign = -1; ++mp.pos; }
    else throw std::invalid_argument("Poly::parse: unexpected character in '" + s + "'");
  }
  return acc;
}

}  // namespace fqf
