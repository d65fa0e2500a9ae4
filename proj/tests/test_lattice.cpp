#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fqf/fp.hpp"
#include "fqf/genus.hpp"
#include "fqf/lattice.hpp"
#include "fqf/places.hpp"
#include "fqf/poly.hpp"

using namespace fqf;

namespace {

Mat3 standard_diagonal(int q, const Poly& D) {
  int eps = fp_nonsquare(q);
  return Mat3::diagonal(Poly::one(q), Poly::constant(q, -eps),
                        Poly::constant(q, -eps) * D);
}

// deterministic unimodular scrambler
Mat3 scrambler(int q, int variant) {
  Mat3 T = Mat3::identity(q);
  T.at(0, 1) = Poly(q, {1 + variant % (q - 1), 1});
  T.at(0, 2) = Poly(q, {0, 0, 1});
  T.at(1, 2) = Poly(q, {2 % q, variant % q});
  Mat3 S = Mat3::identity(q);
  S.at(2, 0) = Poly(q, {1, variant % q, 1});
  return T * S;
}

}  // namespace

TEST_CASE("reduction reaches successive-minima form and is basis-independent") {
  for (int q : {3, 5}) {
    for (const Poly& D :
         {Poly::t(q), Poly(q, {2, 2, 0, 1}), Poly(q, {(q + 2) % q, 1}) * Poly::t(q)}) {
      Mat3 G = standard_diagonal(q, D);
      if (!is_definite(G)) continue;
      ReducedLattice base = reduce(G);
      CHECK(base.mu[0] <= base.mu[1]);
      CHECK(base.mu[1] <= base.mu[2]);
      CHECK(base.mu[0] + base.mu[1] + base.mu[2] == base.det.deg());
      CHECK(G.congruent(base.transform) == base.gram);
      for (int variant = 0; variant < 4; ++variant) {
        Mat3 H = G.congruent(scrambler(q, variant));
        ReducedLattice L = reduce(H);
        CHECK(L.mu == base.mu);
        CHECK(L.det == base.det);
        CHECK(H.congruent(L.transform) == L.gram);
        // reducing an already reduced Gram is the identity on minima
        ReducedLattice again = reduce(L.gram);
        CHECK(again.mu == L.mu);
      }
    }
  }
}

TEST_CASE("coefficient counts: closed form equals brute enumeration") {
  const int q = 3;
  for (const Poly& D : {Poly::t(q), Poly(q, {2, 2, 0, 1})}) {
    ReducedLattice L = reduce(standard_diagonal(q, D));
    const int kmax = L.delta() + 4;
    std::vector<long long> count(kmax + 1, 0);
    long long below = 0;
    for_each_short_vector(L, kmax, [&](const Vec3& v, const Poly& qv) {
      CHECK(quadratic_value(L.gram, v) == qv);
      if (qv.deg() >= 0)
        ++count[qv.deg()];
      else
        ++below;  // impossible: definite forms vanish only at 0
    });
    CHECK(below == 0);
    Integer total = 1;  // the zero vector
    for (int k = 0; k <= kmax; ++k) {
      CHECK(epstein_alpha(L, k) == static_cast<long>(count[k]));
      total += static_cast<long>(count[k]);
      CHECK(short_vector_space_size(L, k) == total);
    }
  }
}

TEST_CASE("fast histogram equals the generic enumeration") {
  const int q = 5;
  ReducedLattice L = reduce(standard_diagonal(q, Poly::t(q)));
  auto hist = epstein_alpha_histogram(L, 5);
  std::vector<long long> direct(6, 0);
  for_each_short_vector(L, 5, [&](const Vec3&, const Poly& qv) { ++direct[qv.deg()]; });
  CHECK(hist == direct);
}

TEST_CASE("representations solve the equation and are primitive") {
  const int q = 3;
  ReducedLattice L = reduce(standard_diagonal(q, Poly(q, {2, 2, 0, 1})));
  for (const Poly& a : {Poly::one(q), Poly(q, {1, 1}), Poly(q, {2, 0, 1})}) {
    auto sols = representations(L, a, true);
    std::set<Vec3> unique(sols.begin(), sols.end());
    CHECK(unique.size() == sols.size());
    long long all = 0;
    for_each_short_vector(L, a.deg(), [&](const Vec3& v, const Poly& qv) {
      if (qv == a && is_primitive(v)) ++all;
    });
    CHECK(static_cast<long long>(sols.size()) == all);
    for (const Vec3& v : sols) {
      CHECK(quadratic_value(L.gram, v) == a);
      CHECK(is_primitive(v));
    }
  }
}

TEST_CASE("rotation group: closure, inverses, and the diagonal order 2(q+1)") {
  for (int q : {3, 5}) {
    ReducedLattice L = reduce(standard_diagonal(q, Poly::t(q)));
    auto auts = automorphisms(L);
    CHECK(static_cast<long long>(auts.size()) == so_order(L));
    CHECK(so_order(L) == 2 * (q + 1));
    std::set<Mat3> group(auts.begin(), auts.end());
    CHECK(group.count(Mat3::identity(q)) == 1);
    for (const Mat3& S : auts) {
      CHECK(L.gram.congruent(S) == L.gram);
      CHECK(S.det() == Poly::one(q));
      for (const Mat3& T : auts) CHECK(group.count(S * T) == 1);
    }
  }
}

TEST_CASE("isometry recovers a scrambled basis and rejects distinct minima") {
  const int q = 3;
  Poly D(q, {2, 2, 0, 1});
  Mat3 G = standard_diagonal(q, D);
  ReducedLattice L1 = reduce(G);
  ReducedLattice L2 = reduce(G.congruent(scrambler(q, 2)));
  auto T = isometry(L1, L2);
  REQUIRE(T.has_value());
  CHECK(L1.gram.congruent(*T) == L2.gram);
  // different determinant degree: trivially non-isometric
  ReducedLattice M = reduce(standard_diagonal(q, Poly::t(q)));
  CHECK_FALSE(isometry(L1, M).has_value());
}

TEST_CASE("unit representation detects the split-off rank-1 summand") {
  const int q = 3;
  ReducedLattice L = reduce(standard_diagonal(q, Poly::t(q)));
  CHECK(represents_unit(L));
  CHECK(L.mu[0] == 0);
}
