#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fqf/factor.hpp"
#include "fqf/formulas.hpp"
#include "fqf/genus.hpp"
#include "fqf/lattice.hpp"
#include "fqf/places.hpp"
#include "fqf/poly.hpp"

using namespace fqf;

TEST_CASE("seed lattices have the requested determinant class and are definite") {
  for (int q : {3, 5}) {
    for (const Poly& D : {Poly::t(q), Poly(q, {0, 1, 1}), Poly(q, {2, 2, 0, 1})}) {
      if (q == 5 && D.deg() == 3) continue;  // wrong field for this sample
      ReducedLattice L = seed_lattice(q, D);
      CHECK(is_definite(L.gram));
      CHECK(L.det.monic() == D.monic());
      GenusSymbol sym = genus_symbol(L.gram);
      CHECK(sym.det_monic == D.monic());
    }
  }
}

TEST_CASE("neighbors stay in the genus and preserve the determinant exactly") {
  const int q = 3;
  Poly D(q, {2, 2, 0, 1});
  ReducedLattice L = seed_lattice(q, D);
  GenusSymbol sym = genus_symbol(L.gram);
  for (const Poly& p : {Poly::t(q), Poly(q, {1, 1}), Poly(q, {2, 1})}) {
    auto nbs = all_neighbors(L, p);
    long long lines = 0;
    // count isotropic lines of the conic mod p directly
    long long qd = 1;
    for (int i = 0; i < p.deg(); ++i) qd *= q;
    CHECK(static_cast<long long>(nbs.size()) <= qd + 1);
    for (const ReducedLattice& N : nbs) {
      CHECK(N.det == L.det);
      CHECK(genus_symbol(N.gram) == sym);
      ++lines;
    }
    CHECK(lines == static_cast<long long>(nbs.size()));
  }
}

TEST_CASE("neighbor closure and exhaustive search give the same classes") {
  const int q = 3;
  for (const Poly& D : {Poly::t(q), Poly(q, {0, 1, 1})}) {
    ClassList ex = exhaustive_classes(q, D);
    ReducedLattice seed = seed_lattice(q, D);
    ClassList nb = neighbor_closure(seed, {}, ex.mass());
    CHECK(nb.reps.size() == ex.reps.size());
    CHECK(nb.mass() == ex.mass());
    // match classes one-to-one by isometry
    std::set<size_t> used;
    for (const ReducedLattice& L : nb.reps) {
      bool found = false;
      for (size_t j = 0; j < ex.reps.size() && !found; ++j) {
        if (used.count(j)) continue;
        if (isometry(L, ex.reps[j]).has_value()) {
          used.insert(j);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("closure without a certificate also terminates on the full genus") {
  const int q = 3;
  Poly D = Poly::t(q);
  ClassList cl = neighbor_closure(seed_lattice(q, D));
  CHECK(cl.mass() == mass_irreducible(q, 1));
}

TEST_CASE("a wrong mass certificate is a hard error") {
  const int q = 3;
  ReducedLattice seed = seed_lattice(q, Poly::t(q));
  CHECK_THROWS(neighbor_closure(seed, {}, Rational(7, 8)));
}

TEST_CASE("weighted representation sums are exact rationals") {
  const int q = 3;
  ClassList cl = exhaustive_classes(q, Poly::t(q));
  Rational s = siegel_lhs(cl, Poly::one(q));
  CHECK(s > 0);
  Rational sum(0);
  for (size_t i = 0; i < cl.reps.size(); ++i) {
    sum += Rational(static_cast<long>(representation_count(cl.reps[i], Poly::one(q)))) /
           Rational(static_cast<long>(cl.so_orders[i]));
  }
  CHECK(s == sum);
}

TEST_CASE("decomposable classification in the irreducible odd-degree case") {
  const int q = 3;
  ClassList cl = exhaustive_classes(q, Poly(q, {2, 2, 0, 1}));
  auto [hdec, hind] = classify_decomposable(cl);
  CHECK(hdec + hind == static_cast<int>(cl.reps.size()));
  for (size_t i = 0; i < cl.reps.size(); ++i)
    CHECK((cl.reps[i].mu[0] == 0) == (represents_unit(cl.reps[i])));
}
