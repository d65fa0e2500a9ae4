#include "fqf/genus.hpp"

#include <deque>
#include <stdexcept>

#include "fqf/factor.hpp"
#include "fqf/fp.hpp"

namespace fqf {

Rational ClassList::mass() const {
  Rational m(0);
  for (long long n : so_orders) {
    Rational term(1, static_cast<unsigned long>(n));
    term.canonicalize();
    m += term;
  }
  m.canonicalize();
  return m;
}

namespace {

bool same_class(const ReducedLattice& a, const ReducedLattice& b) {
  return isometry(a, b).has_value();
}

// det must be D up to the square of a unit (D monic)
bool det_in_class(const Poly& det, const Poly& D) {
  return det.monic() == D && fp_legendre(det.lc(), det.q()) == 1;
}

void all_polys_up_to(int q, int maxdeg, std::vector<Poly>& out) {
  out.clear();
  out.push_back(Poly::zero(q));
  for (int d = 0; d <= maxdeg; ++d)
    for_each_of_degree(q, d, [&](const Poly& f) { out.push_back(f); });
}

// Visit every Gram matrix in reduced shape (deg diag = mu_i ascending,
// 2 deg B_ij < mu_i + mu_j) with minima summing to deg D.
void for_each_reduced_gram(int q, int delta, const std::function<void(const Mat3&)>& fn) {
  for (int m1 = 0; 3 * m1 <= delta; ++m1)
    for (int m2 = m1; m1 + 2 * m2 <= delta; ++m2) {
      const int m3 = delta - m1 - m2;
      std::vector<Poly> d1, d2, d3, b01, b02, b12;
      d1.clear();
      for_each_of_degree(q, m1, [&](const Poly& f) { d1.push_back(f); });
      for_each_of_degree(q, m2, [&](const Poly& f) { d2.push_back(f); });
      for_each_of_degree(q, m3, [&](const Poly& f) { d3.push_back(f); });
      all_polys_up_to(q, (m1 + m2 - 1) / 2, b01);
      all_polys_up_to(q, (m1 + m3 - 1) / 2, b02);
      all_polys_up_to(q, (m2 + m3 - 1) / 2, b12);
      Mat3 G = Mat3::zero(q);
      for (const Poly& g11 : d1)
        for (const Poly& g22 : d2)
          for (const Poly& g33 : d3)
            for (const Poly& x01 : b01)
              for (const Poly& x02 : b02)
                for (const Poly& x12 : b12) {
                  G.at(0, 0) = g11;
                  G.at(1, 1) = g22;
                  G.at(2, 2) = g33;
                  G.at(0, 1) = G.at(1, 0) = x01;
                  G.at(0, 2) = G.at(2, 0) = x02;
                  G.at(1, 2) = G.at(2, 1) = x12;
                  fn(G);
                }
    }
}

void check_discriminant(const Poly& D) {
  if (D.deg() < 1) throw std::invalid_argument("genus: D must be non-constant");
  if (!D.is_monic()) throw std::invalid_argument("genus: D must be monic");
  if (!is_squarefree(D)) throw std::invalid_argument("genus: D must be squarefree");
}

}  // namespace

ReducedLattice seed_lattice(int q, const Poly& D) {
  check_discriminant(D);
  const int eps = fp_nonsquare(q);
  Mat3 Q0 = Mat3::diagonal(Poly::constant(q, 1), Poly::constant(q, -eps), D * (-eps));
  if (is_definite(Q0)) return reduce(Q0);
  // template not definite (even-degree D can defeat it): bounded search
  ReducedLattice found;
  bool ok = false;
  for_each_reduced_gram(q, D.deg(), [&](const Mat3& G) {
    if (ok) return;
    Poly det = G.det();
    if (det.is_zero() || !det_in_class(det, D)) return;
    if (!is_definite(G)) return;
    found = reduce(G);
    ok = true;
  });
  if (!ok)
    throw std::runtime_error("seed_lattice: no definite lattice of determinant " +
                             D.to_string() + " within the reduced search space");
  return found;
}

ClassList exhaustive_classes(int q, const Poly& D, int max_delta) {
  check_discriminant(D);
  if (D.deg() > max_delta)
    throw std::invalid_argument("exhaustive_classes: deg D exceeds the configured bound");
  ReducedLattice seed = seed_lattice(q, D);
  ClassList out;
  out.symbol = genus_symbol(seed.gram);
  for_each_reduced_gram(q, D.deg(), [&](const Mat3& G) {
    Poly det = G.det();
    if (det.is_zero() || !det_in_class(det, D)) return;
    if (!is_definite(G)) return;
    if (!(genus_symbol(G) == out.symbol)) return;
    ReducedLattice L = reduce(G);
    for (const ReducedLattice& rep : out.reps)
      if (same_class(L, rep)) return;
    out.reps.push_back(L);
    out.so_orders.push_back(so_order(L));
  });
  return out;
}

namespace {

// Column-style Hermite reduction: basis of the A-module spanned by the given
// columns (must have rank 3).
std::array<Vec3, 3> hnf_columns(std::vector<Vec3> cols, int q) {
  const int n = static_cast<int>(cols.size());
  for (int row = 0; row < 3; ++row) {
    int pivot = -1;
    for (int j = row; j < n; ++j) {
      if (cols[j][row].is_zero()) continue;
      if (pivot < 0) {
        pivot = j;
        continue;
      }
      // fold column j into the pivot column
      auto eg = extended_gcd(cols[pivot][row], cols[j][row]);
      Poly aj = cols[pivot][row] / eg.g;
      Poly ak = cols[j][row] / eg.g;
      Vec3 np, nj;
      for (int r = 0; r < 3; ++r) {
        np[r] = eg.u * cols[pivot][r] + eg.v * cols[j][r];
        nj[r] = ak * cols[pivot][r] - aj * cols[j][r];
      }
      cols[pivot] = np;
      cols[j] = nj;
    }
    if (pivot < 0) throw std::logic_error("hnf_columns: rank deficient input");
    std::swap(cols[row], cols[pivot]);
    (void)q;
  }
  return {cols[0], cols[1], cols[2]};
}

}  // namespace

ReducedLattice neighbor(const ReducedLattice& L, const Poly& p, const Vec3& x) {
  const int q = L.q();
  if (!p.is_monic() || !is_irreducible(p))
    throw std::invalid_argument("neighbor: p must be monic irreducible");
  if (!gcd(p, L.det).is_one())
    throw std::invalid_argument("neighbor: p must not divide det L");
  const Mat3& G = L.gram;
  Poly qx = quadratic_value(G, x);
  if (!(qx % p).is_zero())
    throw std::invalid_argument("neighbor: Q(x) is not divisible by p");
  if ((content(x) % p).is_zero())
    throw std::invalid_argument("neighbor: x must be nonzero mod p");

  const Poly p2 = p * p;
  // Hensel step: x' = x + lambda p e_j with 2 B(x, lambda e_j) = -Q(x)/p mod p
  Vec3 bx = G * x;  // (G x)_j = B(x, e_j)
  int j0 = -1;
  for (int j = 0; j < 3; ++j)
    if (!(bx[j] % p).is_zero()) { j0 = j; break; }
  if (j0 < 0) throw std::logic_error("neighbor: B(x, -) vanishes mod p");
  Poly target = ((-(qx / p)) * fp_inv(2, q)) % p;
  auto eg = extended_gcd(bx[j0] % p, p);  // eg.u * bx[j0] = 1 mod p
  Poly lambda = (target * eg.u) % p;
  Vec3 xp = x;
  xp[j0] = xp[j0] + lambda * p;
  for (int j = 0; j < 3; ++j) xp[j] = xp[j] % p2;
  if ((content(xp) % p).is_zero())
    // the lift left the line; keep x' correct mod p^2 but primitive
    throw std::logic_error("neighbor: lift lost primitivity");

  // p L' is spanned by p {y : B(x', y) = 0 mod p} and x'
  Vec3 bw = G * xp;
  int j1 = -1;
  for (int j = 0; j < 3; ++j)
    if (!(bw[j] % p).is_zero()) { j1 = j; break; }
  if (j1 < 0) throw std::logic_error("neighbor: B(x', -) vanishes mod p");
  auto eg1 = extended_gcd(bw[j1] % p, p);
  std::vector<Vec3> gens;
  for (int j = 0; j < 3; ++j) {
    if (j == j1) continue;
    Poly c = ((bw[j] % p) * eg1.u) % p;
    Vec3 v{Poly::zero(q), Poly::zero(q), Poly::zero(q)};
    v[j] = p;
    v[j1] = v[j1] - c * p;
    gens.push_back(v);
  }
  Vec3 vj1{Poly::zero(q), Poly::zero(q), Poly::zero(q)};
  vj1[j1] = p2;
  gens.push_back(vj1);
  gens.push_back(xp);
  auto basis = hnf_columns(std::move(gens), q);

  Mat3 H = Mat3::zero(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly v = bilinear_value(G, basis[i], basis[j]);
      auto [quo, rem] = v.divmod(p2);
      if (!rem.is_zero()) throw std::logic_error("neighbor: Gram not divisible by p^2");
      H.at(i, j) = quo;
    }
  // the Hermite basis change has unit determinant u, so det H = u^2 det G;
  // rescale the first basis vector to remove the unit square
  Poly dh = H.det();
  if (dh.deg() != L.det.deg()) throw std::logic_error("neighbor: determinant changed");
  int s = fp_mul(dh.lc(), fp_inv(L.det.lc(), q), q);
  int c = 0;
  for (int cand = 1; cand < q; ++cand)
    if (fp_mul(cand, cand, q) == s) { c = cand; break; }
  if (c == 0) throw std::logic_error("neighbor: determinant changed");
  int cinv = fp_inv(c, q);
  H.at(0, 0) = H.at(0, 0) * fp_mul(cinv, cinv, q);
  for (int j = 1; j < 3; ++j) {
    H.at(0, j) = H.at(0, j) * cinv;
    H.at(j, 0) = H.at(j, 0) * cinv;
  }
  ReducedLattice R = reduce(H);
  if (R.det != L.det) throw std::logic_error("neighbor: determinant changed");
  return R;
}

std::vector<ReducedLattice> all_neighbors(const ReducedLattice& L, const Poly& p) {
  const int q = L.q();
  std::vector<Poly> residues;
  residues.push_back(Poly::zero(q));
  for (int d = 0; d < p.deg(); ++d)
    for_each_of_degree(q, d, [&](const Poly& f) { residues.push_back(f); });

  std::vector<Vec3> lines;  // projective representatives mod p
  for (const Poly& s : residues)
    for (const Poly& r : residues) lines.push_back({Poly::one(q), s, r});
  for (const Poly& r : residues) lines.push_back({Poly::zero(q), Poly::one(q), r});
  lines.push_back({Poly::zero(q), Poly::zero(q), Poly::one(q)});

  std::vector<ReducedLattice> out;
  for (const Vec3& x : lines)
    if ((quadratic_value(L.gram, x) % p).is_zero()) out.push_back(neighbor(L, p, x));
  return out;
}

ClassList neighbor_closure(const ReducedLattice& seed, std::vector<Poly> primes,
                           const std::optional<Rational>& expected_mass) {
  const int q = seed.q();
  Poly D = seed.det.monic();
  if (primes.empty()) {
    for (int d = 1; d <= 3 && primes.size() < 3; ++d)
      for (const Poly& p : irreducibles(q, d)) {
        if (!gcd(p, D).is_one()) continue;
        primes.push_back(p);
        if (primes.size() >= 3) break;
      }
  }
  ClassList out;
  out.symbol = genus_symbol(seed.gram);
  out.reps.push_back(seed);
  out.so_orders.push_back(so_order(seed));
  Rational mass = out.mass();
  auto complete = [&] { return expected_mass && mass == *expected_mass; };

  std::deque<size_t> frontier{0};
  while (!frontier.empty() && !complete()) {
    size_t i = frontier.front();
    frontier.pop_front();
    for (const Poly& p : primes) {
      for (ReducedLattice& nb : all_neighbors(out.reps[i], p)) {
        if (!(genus_symbol(nb.gram) == out.symbol))
          throw std::logic_error("neighbor_closure: genus symbol changed");
        bool known = false;
        for (const ReducedLattice& rep : out.reps)
          if (same_class(nb, rep)) { known = true; break; }
        if (known) continue;
        out.reps.push_back(nb);
        long long n = so_order(nb);
        out.so_orders.push_back(n);
        Rational term(1, static_cast<unsigned long>(n));
        term.canonicalize();
        mass += term;
        frontier.push_back(out.reps.size() - 1);
        if (complete()) break;
      }
      if (complete()) break;
    }
  }
  if (expected_mass && mass != *expected_mass)
    throw std::runtime_error("neighbor_closure: accumulated mass does not match the certificate");
  return out;
}

Rational siegel_lhs(const ClassList& classes, const Poly& a) {
  Rational acc(0);
  for (size_t i = 0; i < classes.reps.size(); ++i) {
    Rational term(static_cast<long>(representation_count(classes.reps[i], a, true)),
                  static_cast<unsigned long>(classes.so_orders[i]));
    term.canonicalize();
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

std::pair<int, int> classify_decomposable(const ClassList& classes) {
  const Poly& D = classes.symbol.det_monic;
  if (D.deg() % 2 == 0 || !is_irreducible(D))
    throw std::domain_error(
        "classify_decomposable: requires irreducible determinant of odd degree");
  int dec = 0;
  for (const ReducedLattice& L : classes.reps)
    if (represents_unit(L)) ++dec;
  return {dec, static_cast<int>(classes.reps.size()) - dec};
}

}  // namespace fqf
