#pragma once

#include <vector>

#include "fqf/mat3.hpp"
#include "fqf/poly.hpp"

namespace fqf {

// A place of K = F_q(t): either a monic irreducible of A = F_q[t] or the
// degree valuation at infinity (uniformizer 1/t).
struct Place {
  bool infinite = false;
  Poly p;  // meaningful only for finite places

  static Place at_infinity(int q) { return {true, Poly::zero(q)}; }
  static Place finite(const Poly& prime) { return {false, prime}; }
  int q() const { return p.q(); }
};

int valuation(const Poly& f, const Place& v);  // v_inf(f) = -deg f

// Hilbert symbol (a, b)_v for nonzero a, b; all residue characteristics are
// odd, so the tame formula applies at every place.
int hilbert_symbol(const Poly& a, const Poly& b, const Place& v);

// Diagonal representative <a1, a2, a3> of the form x^t G x over K, entries in
// A up to square factors (Jacobi's minor formula, with deterministic
// unimodular perturbations when a leading minor vanishes). Requires G
// symmetric with det != 0.
Vec3 diagonalize(const Mat3& G);

// Hasse invariant prod_{i<j} (a_i, a_j)_v of the diagonalized form. Depends
// only on the form over K_v, not on the chosen diagonalization.
int hasse_invariant(const Mat3& G, const Place& v);

// A nondegenerate ternary form over K_v is isotropic iff its Hasse invariant
// equals (-1, -det)_v.
bool is_isotropic(const Mat3& G, const Place& v);

// Definite = anisotropic over K_inf. (Only definite forms have finite
// automorphism groups and a reduction theory here.)
bool is_definite(const Mat3& G);

// Square in K_inf = F_q((1/t)) iff even degree and square leading coefficient.
bool is_square_at_infinity(const Poly& f);

// Genus invariants of an A-lattice with squarefree discriminant: the monic
// determinant D, the unit class of det G, the isotropy bit at each p | D, and
// definiteness. The split D = D0 * D1 collects the primes where the form is
// isotropic (D0) resp. anisotropic (D1) over K_p.
struct GenusSymbol {
  int q = 3;
  Poly det_monic;  // D, monic squarefree
  int unit_class = 1;  // Legendre symbol of lc(det G)
  int delta = 0;       // deg D
  std::vector<std::pair<Poly, bool>> local;  // (p, isotropic over K_p)
  bool definite = false;
  Poly D0, D1;
  int r = 0;  // number of prime divisors of D

  bool operator==(const GenusSymbol& o) const {
    return q == o.q && det_monic == o.det_monic && unit_class == o.unit_class &&
           local == o.local && definite == o.definite;
  }
};

GenusSymbol genus_symbol(const Mat3& G);  // throws unless det is squarefree

// The genus with discriminant D represents a (coprime to D, squarefree)
// only if -aD is a non-square in K_inf; this keeps the rank-2 complement
// definite. "Admissible" bundles the standing hypotheses on a itself.
bool representable_at_infinity(const Poly& a, const Poly& D);
bool admissible_representation_target(const Poly& a, const Poly& D);

}  // namespace fqf
