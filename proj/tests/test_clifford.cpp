#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqf/clifford.hpp"
#include "fqf/lattice.hpp"
#include "fqf/mat3.hpp"
#include "fqf/poly.hpp"

using namespace fqf;

namespace {

Mat3 sample_gram(int q, int variant) {
  Mat3 G = Mat3::zero(q);
  G.at(0, 0) = Poly(q, {1, variant % q});
  G.at(1, 1) = Poly(q, {2 % q, 1});
  G.at(2, 2) = Poly(q, {1, 0, 1});
  G.at(0, 1) = G.at(1, 0) = Poly::constant(q, variant % q);
  G.at(0, 2) = G.at(2, 0) = Poly(q, {0, (variant + 1) % q});
  G.at(1, 2) = G.at(2, 1) = Poly::constant(q, 1);
  return G;
}

CliffordElement unit(const EvenCliffordOrder& ord, int a) {
  CliffordElement e = ord.zero();
  e.c[a] = Poly::one(ord.q());
  return e;
}

}  // namespace

TEST_CASE("multiplication is associative and unital on the basis") {
  for (int q : {3, 5}) {
    for (int variant = 0; variant < 3; ++variant) {
      EvenCliffordOrder ord(sample_gram(q, variant));
      for (int a = 0; a < 4; ++a) {
        CHECK(ord.multiply(unit(ord, 0), unit(ord, a)).c == unit(ord, a).c);
        CHECK(ord.multiply(unit(ord, a), unit(ord, 0)).c == unit(ord, a).c);
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) {
            auto lhs = ord.multiply(ord.multiply(unit(ord, a), unit(ord, b)), unit(ord, c));
            auto rhs = ord.multiply(unit(ord, a), ord.multiply(unit(ord, b), unit(ord, c)));
            CHECK(lhs.c == rhs.c);
          }
      }
    }
  }
}

TEST_CASE("conjugation is an anti-automorphism fixing the center") {
  const int q = 3;
  EvenCliffordOrder ord(sample_gram(q, 1));
  for (int a = 0; a < 4; ++a) {
    CHECK(ord.conjugate(ord.conjugate(unit(ord, a))).c == unit(ord, a).c);
    for (int b = 0; b < 4; ++b) {
      auto lhs = ord.conjugate(ord.multiply(unit(ord, a), unit(ord, b)));
      auto rhs = ord.multiply(ord.conjugate(unit(ord, b)), ord.conjugate(unit(ord, a)));
      CHECK(lhs.c == rhs.c);
    }
  }
  CHECK(ord.conjugate(ord.scalar(Poly::t(q))).c == ord.scalar(Poly::t(q)).c);
}

TEST_CASE("norm is multiplicative") {
  const int q = 5;
  EvenCliffordOrder ord(sample_gram(q, 2));
  CliffordElement x = ord.zero();
  x.c = {Poly(q, {1, 1}), Poly::constant(q, 2), Poly::t(q), Poly::one(q)};
  CliffordElement y = ord.zero();
  y.c = {Poly::constant(q, 3), Poly(q, {0, 1}), Poly::one(q), Poly(q, {2, 2})};
  CHECK(ord.norm(ord.multiply(x, y)) == ord.norm(x) * ord.norm(y));
  CHECK(ord.trace(x) == x.c[0] * 2 + ord.conjugate(x).c[0] - x.c[0]);
}

TEST_CASE("diagonal forms give the classical quaternion norm Gram") {
  const int q = 3;
  Poly q1(q, {1, 1}), q2 = Poly::constant(q, 2), q3 = Poly(q, {0, 1});
  EvenCliffordOrder ord(Mat3::diagonal(q1, q2, q3));
  const Mat4& N = ord.norm_gram();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) CHECK(N[a][b].is_zero());
  CHECK(N[0][0] == Poly::one(q));
  CHECK(N[1][1] == q1 * q2);
  CHECK(N[2][2] == q1 * q3);
  CHECK(N[3][3] == q2 * q3);
}

TEST_CASE("trace-form determinant is the square of the lattice determinant") {
  for (int q : {3, 5})
    for (int variant = 0; variant < 4; ++variant) {
      Mat3 G = sample_gram(q, variant);
      EvenCliffordOrder ord(G);
      CHECK(ord.norm_gram_det() == G.det() * G.det());
    }
}

TEST_CASE("trace-zero elements square to minus their norm") {
  const int q = 3;
  Mat3 G = sample_gram(q, 0);
  EvenCliffordOrder ord(G);
  for (int a = 0; a < 3; ++a) {
    CliffordElement v = ord.zero();
    v.c[a + 1] = Poly::one(q);
    v.c[0] = -G.at(a == 2 ? 1 : 0, a == 0 ? 1 : 2);
    CHECK(ord.trace(v).is_zero());
    CliffordElement sq = ord.multiply(v, v);
    for (int k = 1; k < 4; ++k) CHECK(sq.c[k].is_zero());
    CHECK(sq.c[0] == -ord.norm(v));
  }
}

TEST_CASE("primitive square-root search") {
  const int q = 3;
  // definite diagonal lattice <1, -eps, -eps t> with eps = 2
  Mat3 G = Mat3::diagonal(Poly::one(q), Poly::constant(q, -2),
                          Poly::constant(q, -2) * Poly::t(q));
  EvenCliffordOrder ord(G);
  // v = e2 e3 is trace-zero (G23 = 0) and squares to -Q2 Q3 = -(- 2)(-2 t)
  CliffordElement v = ord.zero();
  v.c[3] = Poly::one(q);
  Poly target = ord.multiply(v, v).c[0];
  SqrtSearch s = primitive_sqrt_search(ord, target);
  CHECK(s.status == SqrtStatus::found);
  REQUIRE(s.element.has_value());
  CliffordElement lam = *s.element;
  CHECK(ord.trace(lam).is_zero());
  CHECK(ord.multiply(lam, lam).c[0] == target);
  // a value no trace-zero element can square to: positive square degree
  // with square leading coefficient makes -target a nonsquare norm
  SqrtSearch none = primitive_sqrt_search(ord, Poly::one(q));
  CHECK(none.status == SqrtStatus::absent);
  SqrtSearch unk = primitive_sqrt_search(ord, Poly::monomial(q, 1, 30));
  CHECK(unk.status == SqrtStatus::unknown);
}
