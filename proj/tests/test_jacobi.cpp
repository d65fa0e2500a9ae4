#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqf/factor.hpp"
#include "fqf/fp.hpp"
#include "fqf/jacobi.hpp"
#include "fqf/poly.hpp"

using namespace fqf;

namespace {

// Euler criterion: (b/p) = b^((|p|-1)/2) mod p for irreducible p.
int legendre_oracle(const Poly& b, const Poly& p) {
  Poly r = b % p;
  if (r.is_zero()) return 0;
  long long size = 1;
  for (int i = 0; i < p.deg(); ++i) size *= p.q();
  Poly e = pow_mod(r, (size - 1) / 2, p);
  if (e == Poly::one(p.q())) return 1;
  if (e == Poly::constant(p.q(), -1)) return -1;
  REQUIRE(false);
  return 0;
}

int jacobi_oracle(const Poly& b, const Poly& a) {
  int s = 1;
  for (const auto& [p, e] : factor(a))
    for (int i = 0; i < e && s != 0; ++i) s *= legendre_oracle(b, p);
  return s;
}

}  // namespace

TEST_CASE("quadratic symbol matches the Euler-criterion oracle") {
  for (int q : {3, 5}) {
    for (int da = 1; da <= 3; ++da) {
      for (const Poly& a : enumerate_monic(q, da)) {
        for (int db = 0; db <= 3; ++db) {
          for (const Poly& b : enumerate_of_degree(q, db)) {
            CHECK(jacobi(b, a) == jacobi_oracle(b, a));
          }
        }
      }
    }
  }
}

TEST_CASE("complete multiplicativity in the numerator") {
  const int q = 3;
  Poly a(q, {1, 1, 1});
  for (const Poly& b1 : enumerate_of_degree(q, 2))
    for (const Poly& b2 : enumerate_of_degree(q, 1))
      CHECK(jacobi(b1 * b2, a) == jacobi(b1, a) * jacobi(b2, a));
}

TEST_CASE("reciprocity for monic coprime arguments") {
  // (b/a)(a/b) = (-1)^{(q-1)/2 * deg a * deg b}
  for (int q : {3, 5}) {
    const int eps = ((q - 1) / 2) % 2 ? -1 : 1;
    for (const Poly& a : enumerate_monic(q, 2)) {
      for (const Poly& b : enumerate_monic(q, 3)) {
        if (gcd(a, b).deg() != 0) continue;
        int sign = (a.deg() * b.deg()) % 2 ? eps : 1;
        CHECK(jacobi(b, a) * jacobi(a, b) == sign);
      }
    }
  }
}

TEST_CASE("constant numerators reduce to the base-field symbol") {
  for (int q : {3, 5}) {
    for (int c = 1; c < q; ++c) {
      for (const Poly& a : enumerate_monic(q, 3)) {
        int want = 1;
        for (int i = 0; i < a.deg(); ++i) want *= fp_legendre(c, q);
        CHECK(jacobi(Poly::constant(q, c), a) == want);
      }
    }
  }
}
