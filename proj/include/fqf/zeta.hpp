#pragma once

#include <vector>

#include "fqf/poly.hpp"
#include "fqf/upoly.hpp"

namespace fqf {

// Splitting behaviour of the infinite place in K(sqrt(m)).
enum class InfinityType { ramified, inert, split };

InfinityType infinity_type(const Poly& m);
// "imaginary" = not split at infinity, i.e. m is not a square in K_inf.
bool is_imaginary(const Poly& m);

struct QuadraticOrderDescriptor {
  Poly m;                 // the order is A[sqrt(m)]
  Poly squarefree_part;   // m0 with m = m0 * conductor^2, m0 squarefree
  Poly conductor;         // monic
  InfinityType type;
};
QuadraticOrderDescriptor describe_order(const Poly& m);

// M_d(s) = prod_{p | d} (1 - |p|^{-s}), exact. Sum form kept alongside as an
// independent route; the two must agree.
Rational m_d(const Poly& d, long s);
Rational m_d_divisor_sum(const Poly& d, long s);
UPoly m_d_upoly(const Poly& d);  // M*_d(u) = prod (1 - u^{deg p})

// zeta_A(s) = 1/(1 - q^{1-s}); scalar form needs s >= 2.
Rational zeta_A(int q, long s);

// c_k(chi_b) = sum over monic a of degree k of (b/a).
long long l_coefficient(const Poly& b, int k);

// L*(u, chi_b) = sum_k c_k(chi_b) u^k; a polynomial of degree <= deg b - 1
// when b is not a perfect square (enforced).
UPoly l_polynomial(const Poly& b);

// Numerator L_E(u) of the zeta function of E = K(sqrt(b)), for squarefree b:
// L*(u, chi_b) with the infinite-place Euler factor divided out
// (1 ramified, 1+u inert, 1-u split). Division is exact or it throws.
UPoly l_curve_numerator(const Poly& b);

// h(m) = |Pic(A[sqrt(m))]| via L-values plus the conductor formula.
// Requires m imaginary, deg m >= 1. Always a positive integer; a non-integer
// intermediate throws.
Integer class_number(const Poly& m);

// Psi_D(k,l): pairs of monic (x, y), deg x = k, deg y = l, coprime to each
// other and to D. Enumeration oracle and generating-function fast path.
long long psi_count(const Poly& D, int k, int l);
long long psi_count_fast(const Poly& D, int k, int l);
// table[k][l] for k <= kmax, l <= lmax via the generating identity
std::vector<std::vector<Integer>> psi_table(const Poly& D, int kmax, int lmax);

// sum over all m of degree l (any leading coefficient) coprime to D of
// L(1, chi_{Dm}), exact.
Rational sum_l_values(const Poly& D, int l);
// sum over the same m of c_k(chi_{Dm})
Integer sum_c_k(const Poly& D, int l, int k);

}  // namespace fqf
