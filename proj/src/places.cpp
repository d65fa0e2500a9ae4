#include "fqf/places.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "fqf/factor.hpp"
#include "fqf/jacobi.hpp"

namespace fqf {

int valuation(const Poly& f, const Place& v) {
  if (f.is_zero()) throw std::domain_error("valuation: zero polynomial");
  if (v.infinite) return -f.deg();
  int n = 0;
  Poly r = f;
  while ((r % v.p).is_zero()) {
    r = r / v.p;
    ++n;
  }
  return n;
}

int hilbert_symbol(const Poly& a, const Poly& b, const Place& v) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("hilbert_symbol: arguments must be nonzero");
  const int q = a.q();
  if (v.infinite) {
    const int da = a.deg(), db = b.deg();
    int s = 1;
    if ((da & 1) && (db & 1)) s *= fp_legendre(q - 1, q);
    if (db & 1) s *= fp_legendre(a.lc(), q);
    if (da & 1) s *= fp_legendre(b.lc(), q);
    return s;
  }
  // tame symbol: a = p^alpha u, b = p^beta v0
  Poly u = a, v0 = b;
  int alpha = 0, beta = 0;
  while ((u % v.p).is_zero()) { u = u / v.p; ++alpha; }
  while ((v0 % v.p).is_zero()) { v0 = v0 / v.p; ++beta; }
  int s = 1;
  if ((alpha & 1) && (beta & 1)) s *= jacobi(Poly::constant(q, q - 1), v.p);
  if (beta & 1) s *= jacobi(u, v.p);
  if (alpha & 1) s *= jacobi(v0, v.p);
  return s;
}

namespace {

std::optional<Vec3> jacobi_minors(const Mat3& G) {
  Poly d1 = G.at(0, 0);
  Poly d2 = G.at(0, 0) * G.at(1, 1) - G.at(0, 1) * G.at(1, 0);
  if (d1.is_zero() || d2.is_zero()) return std::nullopt;
  Poly d3 = G.det();
  return Vec3{d1, d1 * d2, d2 * d3};
}

}  // namespace

Vec3 diagonalize(const Mat3& G) {
  if (!G.is_symmetric()) throw std::invalid_argument("diagonalize: matrix is not symmetric");
  if (G.det().is_zero()) throw std::invalid_argument("diagonalize: degenerate form");
  const int q = G.q();
  // <d1, d1 d2, d2 d3> once the leading minors are nonzero; perturb the basis
  // by deterministic elementary transforms until they are
  Mat3 T = Mat3::identity(q);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto rnd = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>(state >> 33);
  };
  for (int attempt = 0; attempt < 256; ++attempt) {
    if (auto d = jacobi_minors(G.congruent(T))) return *d;
    int i = rnd() % 3;
    int j = rnd() % 3;
    if (i == j) j = (j + 1) % 3;
    Mat3 E = Mat3::identity(q);
    E.at(i, j) = Poly::monomial(q, 1 + rnd() % (q - 1), rnd() % 2);
    T = T * E;
  }
  throw std::logic_error("diagonalize: no basis with nonzero leading minors found");
}

int hasse_invariant(const Mat3& G, const Place& v) {
  Vec3 d = diagonalize(G);
  int s = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) s *= hilbert_symbol(d[i], d[j], v);
  return s;
}

bool is_isotropic(const Mat3& G, const Place& v) {
  const int q = G.q();
  Poly neg_det = -G.det();
  return hasse_invariant(G, v) ==
         hilbert_symbol(Poly::constant(q, q - 1), neg_det, v);
}

bool is_definite(const Mat3& G) {
  return !is_isotropic(G, Place::at_infinity(G.q()));
}

bool is_square_at_infinity(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_square_at_infinity: zero polynomial");
  return f.deg() % 2 == 0 && fp_legendre(f.lc(), f.q()) == 1;
}

GenusSymbol genus_symbol(const Mat3& G) {
  if (!G.is_symmetric()) throw std::invalid_argument("genus_symbol: matrix is not symmetric");
  const int q = G.q();
  Poly det = G.det();
  if (det.is_zero()) throw std::invalid_argument("genus_symbol: degenerate form");
  if (!is_squarefree(det))
    throw std::invalid_argument("genus_symbol: determinant must be squarefree");
  GenusSymbol sym;
  sym.q = q;
  sym.det_monic = det.monic();
  sym.unit_class = fp_legendre(det.lc(), q);
  sym.delta = det.deg();
  sym.definite = is_definite(G);
  sym.D0 = Poly::one(q);
  sym.D1 = Poly::one(q);
  for (const auto& [p, e] : factor(det)) {
    (void)e;
    bool iso = is_isotropic(G, Place::finite(p));
    sym.local.emplace_back(p, iso);
    (iso ? sym.D0 : sym.D1) = (iso ? sym.D0 : sym.D1) * p;
    ++sym.r;
  }
  return sym;
}

bool representable_at_infinity(const Poly& a, const Poly& D) {
  return !is_square_at_infinity(-(a * D));
}

bool admissible_representation_target(const Poly& a, const Poly& D) {
  return !a.is_zero() && a.is_monic() && is_squarefree(a) &&
         gcd(a, D).is_one() && representable_at_infinity(a, D);
}

}  // namespace fqf
