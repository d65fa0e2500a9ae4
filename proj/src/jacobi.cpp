#include "fqf/jacobi.hpp"

#include <stdexcept>

namespace fqf {

namespace {

constexpr int kMaxCoeffs = 512;

// in-place remainder of f (length nf) by monic g (length ng), base-q ints
inline int reduce_mod(int* f, int nf, const int* g, int ng, int q) {
  while (nf >= ng) {
    int c = f[nf - 1];
    if (c != 0) {
      int shift = nf - ng;
      for (int i = 0; i < ng; ++i) {
        long long v = f[shift + i] - static_cast<long long>(c) * g[i];
        f[shift + i] = fp_norm(v, q);
      }
    }
    --nf;
    while (nf > 0 && f[nf - 1] == 0) --nf;
    if (nf == 0) return 0;
  }
  return nf;
}

}  // namespace

int jacobi(const Poly& b, const Poly& a) {
  if (a.is_zero() || !a.is_monic())
    throw std::invalid_argument("jacobi: lower argument must be monic and nonzero");
  if (b.q() != a.q()) throw std::invalid_argument("jacobi: modulus mismatch");
  const int q = a.q();
  if (a.deg() + 1 > kMaxCoeffs || b.deg() + 1 > kMaxCoeffs)
    throw std::invalid_argument("jacobi: degree exceeds internal limit");

  int A[kMaxCoeffs], B[kMaxCoeffs];
  int na = a.deg() + 1;
  for (int i = 0; i < na; ++i) A[i] = a.coeff(i);
  int nb = 0;
  if (!b.is_zero()) {
    nb = b.deg() + 1;
    for (int i = 0; i < nb; ++i) B[i] = b.coeff(i);
  }

  const bool eps_odd = ((q - 1) / 2) % 2 == 1;  // reciprocity sign is nontrivial iff q = 3 (mod 4)
  int s = 1;
  int* pa = A; int* pb = B;
  while (true) {
    if (na == 1) return s;  // a = 1
    nb = reduce_mod(pb, nb, pa, na, q);
    if (nb == 0) return 0;
    int beta = pb[nb - 1];
    if (beta != 1) {
      int inv = fp_inv(beta, q);
      for (int i = 0; i < nb; ++i) pb[i] = fp_mul(pb[i], inv, q);
    }
    const int deg_a = na - 1, deg_b = nb - 1;
    if (deg_a % 2 == 1 && fp_legendre(beta, q) == -1) s = -s;
    if (eps_odd && deg_a % 2 == 1 && deg_b % 2 == 1) s = -s;
    std::swap(pa, pb);
    std::swap(na, nb);
  }
}

}  // namespace fqf
