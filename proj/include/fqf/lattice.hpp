#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "fqf/mat3.hpp"
#include "fqf/poly.hpp"
#include "fqf/upoly.hpp"

namespace fqf {

// A definite ternary A-lattice in successive-minima form: mu[0] <= mu[1] <=
// mu[2], deg gram[i][i] = mu[i], and mu[0]+mu[1]+mu[2] = deg det. In such a
// basis deg Q(sum c_i e_i) = max_i (2 deg c_i + mu_i), which turns every
// degree-bounded vector search into a finite coefficient box.
struct ReducedLattice {
  Mat3 gram;
  Mat3 transform;  // unimodular T with T^t G_input T = gram
  std::array<int, 3> mu{};
  Poly det;

  int q() const { return gram.q(); }
  int delta() const { return det.deg(); }
};

// Reduction = sort by norm degree + polynomial size-reduction, iterated to a
// fixed point. Throws unless the input is symmetric and definite.
ReducedLattice reduce(const Mat3& G);

Poly content(const Vec3& v);
bool is_primitive(const Vec3& v);

// |L_k| = |{x : deg Q(x) <= k}| (zero vector included), from the coordinate
// degree bounds of the reduced basis.
Integer short_vector_space_size(const ReducedLattice& L, int k);

// alpha_k = |{x != 0 : deg Q(x) = k}| = |L_k| - |L_{k-1}|.
Integer epstein_alpha(const ReducedLattice& L, int k);

// Visits every nonzero x with deg Q(x) <= kmax exactly once, passing
// (coords, Q(x)). Coordinates are relative to the reduced basis.
void for_each_short_vector(const ReducedLattice& L, int kmax,
                           const std::function<void(const Vec3&, const Poly&)>& fn);

enum class Twist { none, chi_d, psi, phi_psi };

// Coefficients 0..kmax of Z*_L(u, twist) by exhaustive enumeration:
//   none    c_k = alpha_k
//   chi_d   c_k = #{x : deg Q(x) = k, Q(x) = 0 mod d}
//   psi     c_k = #{x : gcd(Q(x), D) = 1}
//   phi_psi c_k = #{x : gcd(Q(x), D) = 1 and x primitive}  (= beta_k)
// D is the monic determinant; d must divide D (chi_d only).
std::vector<long long> twisted_zeta_coefficients(const ReducedLattice& L, int kmax,
                                                 Twist twist,
                                                 const Poly& d = Poly());

// beta_k for k = 0..kmax (phi_psi coefficients, fast path).
std::vector<long long> epstein_beta_histogram(const ReducedLattice& L, int kmax);
// alpha_k for k = 0..kmax by enumeration (oracle for the closed form).
std::vector<long long> epstein_alpha_histogram(const ReducedLattice& L, int kmax);

// Solutions of Q(x) = a, primitive ones only by default. R(L, a).
std::vector<Vec3> representations(const ReducedLattice& L, const Poly& a,
                                  bool primitive_only = true);
long long representation_count(const ReducedLattice& L, const Poly& a,
                               bool primitive_only = true);

// Unimodular T with T^t G1 T = G2 (det +-1), if the lattices are isometric.
std::optional<Mat3> isometry(const ReducedLattice& L1, const ReducedLattice& L2);

// The full special orthogonal group SO(L) = {T : T^t G T = G, det T = 1},
// finite because L is definite.
std::vector<Mat3> automorphisms(const ReducedLattice& L);
long long so_order(const ReducedLattice& L);

// A definite lattice splits off an orthogonal rank-1 summand iff it
// represents a unit, i.e. iff mu[0] = 0.
bool represents_unit(const ReducedLattice& L);

}  // namespace fqf
