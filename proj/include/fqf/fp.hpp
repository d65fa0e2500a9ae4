#pragma once

#include <cstdint>
#include <stdexcept>

namespace fqf {

// Arithmetic in the prime field F_q, q an odd prime. Residues live in [0, q).
// Kept as free functions on int; the Fp wrapper exists for code that wants a
// typed element.

inline int fp_norm(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

inline int fp_add(int a, int b, int q) { int s = a + b; return s >= q ? s - q : s; }
inline int fp_sub(int a, int b, int q) { int s = a - b; return s < 0 ? s + q : s; }
inline int fp_mul(int a, int b, int q) { return static_cast<int>((static_cast<long long>(a) * b) % q); }
inline int fp_neg(int a, int q) { return a == 0 ? 0 : q - a; }

inline int fp_pow(int a, long long e, int q) {
  int r = 1;
  int base = fp_norm(a, q);
  while (e > 0) {
    if (e & 1) r = fp_mul(r, base, q);
    base = fp_mul(base, base, q);
    e >>= 1;
  }
  return r;
}

inline int fp_inv(int a, int q) {
  if (a % q == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, q - 2, q);
}

// Legendre symbol of a nonzero residue: +1 for squares, -1 for nonsquares, 0 for 0.
inline int fp_legendre(int a, int q) {
  a = fp_norm(a, q);
  if (a == 0) return 0;
  int e = fp_pow(a, (q - 1) / 2, q);
  return e == 1 ? 1 : -1;
}

// Smallest nonsquare residue of F_q (exists since q is odd).
inline int fp_nonsquare(int q) {
  for (int c = 2; c < q; ++c)
    if (fp_legendre(c, q) == -1) return c;
  throw std::logic_error("fp_nonsquare: no nonsquare found (q must be an odd prime >= 3)");
}

inline bool is_odd_prime(int q) {
  if (q < 3 || q % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

struct Fp {
  int value = 0;
  int q = 3;

  Fp() = default;
  Fp(long long v, int modulus) : value(fp_norm(v, modulus)), q(modulus) {
    if (!is_odd_prime(modulus)) throw std::invalid_argument("Fp: modulus must be an odd prime");
  }

  Fp operator+(const Fp& o) const { check(o); return raw(fp_add(value, o.value, q), q); }
  Fp operator-(const Fp& o) const { check(o); return raw(fp_sub(value, o.value, q), q); }
  Fp operator*(const Fp& o) const { check(o); return raw(fp_mul(value, o.value, q), q); }
  Fp operator-() const { return raw(fp_neg(value, q), q); }
  Fp inv() const { return raw(fp_inv(value, q), q); }
  bool operator==(const Fp& o) const { return q == o.q && value == o.value; }
  bool is_zero() const { return value == 0; }

  static Fp raw(int v, int q) { Fp f; f.value = v; f.q = q; return f; }

 private:
  void check(const Fp& o) const {
    if (q != o.q) throw std::invalid_argument("Fp: modulus mismatch");
  }
};

}  // namespace fqf
