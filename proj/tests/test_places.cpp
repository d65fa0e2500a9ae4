#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fqf/factor.hpp"
#include "fqf/fp.hpp"
#include "fqf/mat3.hpp"
#include "fqf/places.hpp"
#include "fqf/poly.hpp"

using namespace fqf;

namespace {

std::vector<Place> relevant_places(const Poly& a, const Poly& b) {
  std::vector<Place> out;
  std::set<Poly> seen;
  for (const Poly& f : {a, b})
    for (const auto& [p, e] : factor(f)) {
      (void)e;
      if (seen.insert(p).second) out.push_back(Place::finite(p));
    }
  out.push_back(Place::at_infinity(a.q()));
  return out;
}

}  // namespace

TEST_CASE("Hilbert symbol: squares, symmetry, bimultiplicativity") {
  const int q = 3;
  Poly p(q, {1, 1});
  Place v = Place::finite(p);
  Place w = Place::at_infinity(q);
  std::vector<Poly> sample = {Poly::one(q), Poly::constant(q, 2), Poly::t(q),
                              Poly(q, {1, 1}), Poly(q, {2, 0, 1}), Poly(q, {0, 2})};
  for (const Place& place : {v, w}) {
    for (const Poly& a : sample) {
      CHECK(hilbert_symbol(a, a * a, place) == 1);  // second slot a square
      for (const Poly& b : sample) {
        CHECK(hilbert_symbol(a, b, place) == hilbert_symbol(b, a, place));
        for (const Poly& c : sample)
          CHECK(hilbert_symbol(a * b, c, place) ==
                hilbert_symbol(a, c, place) * hilbert_symbol(b, c, place));
      }
    }
  }
}

TEST_CASE("product formula over all relevant places") {
  for (int q : {3, 5}) {
    std::vector<Poly> sample = {Poly::constant(q, 2), Poly::t(q), Poly(q, {1, 1}),
                                Poly(q, {2, 1}), Poly(q, {1, 0, 1}), Poly(q, {0, 0, 1})};
    for (const Poly& a : sample)
      for (const Poly& b : sample) {
        int prod = 1;
        for (const Place& v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
      }
  }
}

TEST_CASE("diagonalization preserves the form up to squares") {
  const int q = 3;
  Mat3 G = Mat3::zero(q);
  G.at(0, 0) = Poly::one(q);
  G.at(1, 1) = Poly(q, {0, 2});
  G.at(2, 2) = Poly(q, {1, 0, 1});
  G.at(0, 1) = G.at(1, 0) = Poly(q, {1});
  G.at(1, 2) = G.at(2, 1) = Poly::t(q);
  Vec3 d = diagonalize(G);
  // determinants agree modulo squares: det G * d1 d2 d3 is a square in K
  Poly prod = G.det() * d[0] * d[1] * d[2];
  auto fac = factor(prod.monic());
  for (const auto& [p, e] : fac) CHECK(e % 2 == 0);
  CHECK(fp_legendre(prod.lc(), q) == 1);
}

TEST_CASE("Hasse invariant does not depend on the basis") {
  const int q = 3;
  Mat3 G = Mat3::diagonal(Poly::one(q), Poly::constant(q, 2), Poly(q, {0, 2}));
  Mat3 T = Mat3::identity(q);
  T.at(0, 1) = Poly(q, {1, 2});
  T.at(0, 2) = Poly::t(q);
  T.at(1, 2) = Poly::constant(q, 2);
  Mat3 H = G.congruent(T);
  for (const Place& v :
       {Place::finite(Poly::t(q)), Place::finite(Poly(q, {1, 1})), Place::at_infinity(q)}) {
    CHECK(hasse_invariant(G, v) == hasse_invariant(H, v));
    CHECK(is_isotropic(G, v) == is_isotropic(H, v));
  }
}

TEST_CASE("definiteness at infinity") {
  const int q = 3;
  int eps = fp_nonsquare(q);
  Poly t = Poly::t(q);
  Mat3 definite = Mat3::diagonal(Poly::one(q), Poly::constant(q, -eps),
                                 Poly::constant(q, -eps) * t);
  CHECK(is_definite(definite));
  Mat3 isotropic = Mat3::diagonal(Poly::one(q), Poly::constant(q, -1), t);
  CHECK_FALSE(is_definite(isotropic));  // x^2 - y^2 has a zero everywhere
}

TEST_CASE("square recognition in the completed field") {
  const int q = 5;
  CHECK(is_square_at_infinity(Poly(q, {1, 0, 1})));        // even degree, lc 1
  CHECK_FALSE(is_square_at_infinity(Poly(q, {0, 0, 2})));  // lc 2 not a square mod 5
  CHECK_FALSE(is_square_at_infinity(Poly::t(q)));          // odd degree
}

TEST_CASE("genus invariants of the standard diagonal lattice") {
  const int q = 3;
  int eps = fp_nonsquare(q);
  Poly D(q, {2, 2, 0, 1});
  Mat3 G = Mat3::diagonal(Poly::one(q), Poly::constant(q, -eps),
                          Poly::constant(q, -eps) * D);
  GenusSymbol sym = genus_symbol(G);
  CHECK(sym.det_monic == D);
  CHECK(sym.delta == 3);
  CHECK(sym.r == 1);
  CHECK(sym.D0 * sym.D1 == D);
  CHECK(sym.definite);
  for (const auto& [p, iso] : sym.local)
    CHECK(iso == is_isotropic(G, Place::finite(p)));
}

TEST_CASE("admissible representation targets") {
  const int q = 3;
  Poly D = Poly::t(q);
  CHECK(admissible_representation_target(Poly::one(q), D));
  CHECK_FALSE(admissible_representation_target(Poly::t(q), D));  // not coprime
  CHECK_FALSE(admissible_representation_target(Poly(q, {0, 0, 1}), D));  // t^2
}
