#include "fqf/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fqf {

namespace {

std::mutex g_table_mutex;
std::map<std::pair<int, int>, std::vector<Poly>> g_irred;  // (q, d) -> list

bool trial_irreducible(const Poly& f) {
  // f monic, deg >= 1; divide by irreducibles of degree <= deg/2
  int d = f.deg();
  for (int e = 1; 2 * e <= d; ++e)
    for (const Poly& p : irreducibles(f.q(), e))
      if (p.divides(f)) return false;
  return true;
}

}  // namespace

const std::vector<Poly>& irreducibles(int q, int d) {
  if (d < 1) throw std::invalid_argument("irreducibles: degree must be >= 1");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  // build lower degrees first so trial division has what it needs
  for (int e = 1; e <= d; ++e) {
    auto key = std::make_pair(q, e);
    if (g_irred.count(key)) continue;
    std::vector<Poly> list;
    for_each_monic(q, e, [&](const Poly& f) {
      int dd = f.deg();
      bool irred = true;
      for (int k = 1; 2 * k <= dd && irred; ++k)
        for (const Poly& p : g_irred[{q, k}])
          if (p.divides(f)) { irred = false; break; }
      if (irred) list.push_back(f);
    });
    g_irred[key] = std::move(list);
  }
  return g_irred[{q, d}];
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f.monic();
  for (int d = 1; 2 * d <= rest.deg(); ++d) {
    for (const Poly& p : irreducibles(f.q(), d)) {
      if (!p.divides(rest)) continue;
      int e = 0;
      while (p.divides(rest)) { rest = rest / p; ++e; }
      out.emplace_back(p, e);
      if (rest.deg() < 2 * d) break;
    }
  }
  if (rest.deg() > 0) out.emplace_back(rest, 1);  // leftover cofactor is irreducible
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_irreducible: zero polynomial");
  if (f.deg() < 1) return false;
  return trial_irreducible(f.monic());
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
  if (f.deg() == 0) return true;
  // gcd(f, f') = 1 detects squarefreeness in characteristic p as long as no
  // p-th power factor hides in f; trial factorization keeps this honest.
  for (const auto& [p, e] : factor(f))
    if (e > 1) return false;
  return true;
}

int mobius(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("mobius: zero polynomial");
  if (!f.is_monic()) throw std::invalid_argument("mobius: input must be monic");
  if (f.deg() == 0) return 1;
  auto fac = factor(f);
  for (const auto& [p, e] : fac)
    if (e > 1) return 0;
  return fac.size() % 2 == 0 ? 1 : -1;
}

SquarefreeSplit squarefree_split(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_split: zero polynomial");
  Poly sf = Poly::constant(f.q(), f.lc());
  Poly cond = Poly::one(f.q());
  for (const auto& [p, e] : factor(f)) {
    if (e % 2 == 1) sf = sf * p;
    for (int i = 0; i < e / 2; ++i) cond = cond * p;
  }
  return {sf, cond};
}

std::vector<Poly> monic_divisors(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("monic_divisors: zero polynomial");
  std::vector<Poly> divs = {Poly::one(f.q())};
  for (const auto& [p, e] : factor(f)) {
    std::vector<Poly> next;
    Poly pk = Poly::one(f.q());
    for (int k = 0; k <= e; ++k) {
      for (const Poly& d : divs) next.push_back(d * pk);
      pk = pk * p;
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace fqf
