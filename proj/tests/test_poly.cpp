#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqf/poly.hpp"

using namespace fqf;

TEST_CASE("parse and print round-trip") {
  for (int q : {3, 5}) {
    for (int d = 0; d <= 3; ++d) {
      for_each_of_degree(q, d, [&](const Poly& f) {
        CHECK(Poly::parse(f.to_string(), q) == f);
      });
    }
  }
  CHECK(Poly::parse("t^3+2*t+1", 3) == Poly(3, {1, 2, 0, 1}));
  CHECK(Poly::parse("0", 5).is_zero());
  CHECK_THROWS(Poly::parse("t^", 3));
  CHECK_THROWS(Poly::parse("x+1", 3));
}

TEST_CASE("division with remainder") {
  const int q = 3;
  for (const Poly& f : enumerate_of_degree(q, 4)) {
    for (const Poly& g : enumerate_of_degree(q, 2)) {
      auto [quo, rem] = f.divmod(g);
      CHECK(f == quo * g + rem);
      CHECK(rem.deg() < g.deg());
    }
  }
}

TEST_CASE("gcd and extended gcd") {
  const int q = 5;
  for (const Poly& f : enumerate_monic(q, 2)) {
    for (const Poly& g : enumerate_monic(q, 2)) {
      Poly d = gcd(f, g);
      CHECK(d.divides(f));
      CHECK(d.divides(g));
      CHECK(d.lc() == 1);
      ExtendedGcd eg = extended_gcd(f, g);
      CHECK(eg.g == d);
      CHECK(eg.u * f + eg.v * g == d);
    }
  }
}

TEST_CASE("modular exponentiation matches repeated multiplication") {
  const int q = 3;
  Poly m(q, {1, 0, 1, 1});
  Poly b(q, {2, 1});
  Poly acc = Poly::one(q);
  for (int e = 0; e <= 20; ++e) {
    CHECK(pow_mod(b, e, m) == acc);
    acc = (acc * b) % m;
  }
}

TEST_CASE("degree enumeration sizes") {
  for (int q : {3, 5}) {
    for (int d = 0; d <= 3; ++d) {
      long long monic = 0, all = 0;
      for_each_monic(q, d, [&](const Poly& f) {
        CHECK(f.deg() == d);
        CHECK(f.lc() == 1);
        ++monic;
      });
      for_each_of_degree(q, d, [&](const Poly& f) {
        CHECK(f.deg() == d);
        ++all;
      });
      long long qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      CHECK(monic == qd);
      CHECK(all == (q - 1) * qd);
    }
  }
}

TEST_CASE("monic normalization") {
  Poly f(5, {2, 0, 3});
  Poly m = f.monic();
  CHECK(m.lc() == 1);
  CHECK(m * f.lc() == f);
}
