#include "fqf/picard.hpp"

#include <stdexcept>
#include <vector>

#include "fqf/factor.hpp"
#include "fqf/zeta.hpp"

namespace fqf {

namespace {

// Module a*A + (b + c*w)*A in the order A[w], w^2 = m, in Hermite form:
// c | a, c | b, and a*c | b^2 - m*c^2.
struct Ideal {
  Poly a, b, c;
};

// All elements of the ideal are u*a + v*(b + c*w); the ideal norm is a*c up
// to a unit.

struct Ctx {
  Poly m;
  int q;

  // Hermite form of the module spanned by (x_i + y_i * w)
  Ideal hnf(const std::vector<std::pair<Poly, Poly>>& gens) const {
    // one combined generator carries the gcd of the w-parts
    Poly c = Poly::zero(q);
    Poly bx = Poly::zero(q);
    for (const auto& [x, y] : gens) {
      if (y.is_zero()) continue;
      if (c.is_zero()) { c = y; bx = x; continue; }
      auto eg = extended_gcd(c, y);
      bx = eg.u * bx + eg.v * x;
      c = eg.g;
    }
    if (c.is_zero()) throw std::logic_error("picard: degenerate module");
    int lead = c.lc();
    if (lead != 1) { int inv = fp_inv(lead, q); c = c * inv; bx = bx * inv; }
    // eliminating the w-part of each generator leaves pure-A elements
    Poly g0 = Poly::zero(q);
    for (const auto& [x, y] : gens)
      g0 = gcd(g0, x - (y / c) * bx);
    if (g0.is_zero()) throw std::logic_error("picard: degenerate module");
    bx = bx % g0;
    return {g0, bx, c};
  }

  Ideal mul(const Ideal& I, const Ideal& J) const {
    // generators of I*J over A
    std::vector<std::pair<Poly, Poly>> gens;
    gens.emplace_back(I.a * J.a, Poly::zero(q));
    gens.emplace_back(I.a * J.b, I.a * J.c);
    gens.emplace_back(J.a * I.b, J.a * I.c);
    gens.emplace_back(I.b * J.b + m * (I.c * J.c), I.b * J.c + J.b * I.c);
    return hnf(std::move(gens));
  }

  Ideal conj(const Ideal& I) const { return {I.a, (-I.b) % I.a, I.c}; }

  // Exact principality test: H is principal iff it contains an element whose
  // norm degree equals deg N(H) = deg(a * c). Definiteness makes
  // deg(x^2 - m y^2) = max(2 deg x, deg m + 2 deg y), so the search space is
  // a finite box.
  bool principal(const Ideal& H) const {
    const int T = H.a.deg() + H.c.deg();
    if (H.a.deg() == H.c.deg()) return true;  // H = c * (whole order)
    const int vmax = (T - m.deg()) / 2 - H.c.deg();
    if (vmax < 0) return false;
    const int wmax = T / 2 - H.a.deg();  // slack on top of the reduced x-part
    bool found = false;
    auto try_v = [&](const Poly& v) {
      if (found || v.is_zero()) return;
      Poly base = -(v * H.b) % H.a;  // x-part modulo a
      std::vector<Poly> slacks = {Poly::zero(q)};
      for (int dw = 0; dw <= wmax && !found; ++dw)
        for_each_of_degree(q, dw, [&](const Poly& w) { slacks.push_back(w); });
      Poly mv2 = m * v * v * (H.c * H.c);
      for (const Poly& w : slacks) {
        Poly x = base + w * H.a;
        Poly n = x * x - mv2;
        if (n.deg() == T) { found = true; return; }
      }
    };
    for (int dv = 0; dv <= vmax && !found; ++dv)
      for_each_of_degree(q, dv, [&](const Poly& v) { if (!found) try_v(v); });
    return found;
  }
};

}  // namespace

long long picard_oracle(const Poly& m, int max_deg) {
  if (m.deg() < 1) throw std::domain_error("picard_oracle: deg m must be >= 1");
  if (m.deg() > max_deg)
    throw std::domain_error("picard_oracle: deg m exceeds the configured bound");
  if (!is_imaginary(m))
    throw std::domain_error("picard_oracle: m is a square in K_inf (real case)");
  const int q = m.q();
  Ctx ctx{m, q};

  // candidate primitive invertible ideals with deg a <= floor(deg m / 2)
  std::vector<Ideal> classes;
  const int bound = m.deg() / 2;
  for (int da = 0; da <= bound; ++da) {
    for_each_monic(q, da, [&](const Poly& a) {
      auto consider = [&](const Poly& b) {
        if (!((b * b - m) % a).is_zero()) return;
        Poly c2 = (b * b - m) / a;
        // invertible over A[sqrt(m)] iff the associated form is primitive
        if (!gcd(gcd(a, b * 2), c2).is_one()) return;
        Ideal I{a, b, Poly::one(q)};
        for (const Ideal& R : classes)
          if (ctx.principal(ctx.mul(I, ctx.conj(R)))) return;
        classes.push_back(I);
      };
      if (da == 0) { consider(Poly::zero(q)); return; }
      consider(Poly::zero(q));
      for (int db = 0; db < da; ++db)
        for_each_of_degree(q, db, consider);
    });
  }
  return static_cast<long long>(classes.size());
}

}  // namespace fqf
