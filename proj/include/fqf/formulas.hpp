#pragma once

#include "fqf/places.hpp"
#include "fqf/poly.hpp"
#include "fqf/upoly.hpp"

namespace fqf {

// Mass of the genus, in the two algebraically equivalent closed forms.
Rational mass_theorem_form(int q, const Poly& D, const Poly& D0, int r);
Rational mass_derivation_form(int q, const Poly& D, const Poly& D0, const Poly& D1, int r);
// Computes both from the genus symbol, asserts they agree, returns the value.
Rational mass_formula(const GenusSymbol& sym);
// Specialization for irreducible D: (q^delta - 1) / (2 (q^2 - 1)).
Rational mass_irreducible(int q, int delta);

// h, h_dec, h_ind for D irreducible of odd degree, via the mass formula and
// the decomposable-class count (L_{-D}(1) + L_{-D}(-1)) / 2, where L_{-D} is
// the numerator of the zeta function of y^2 = -D.
struct ExactClassNumbers {
  Integer h, h_dec, h_ind;
};
ExactClassNumbers exact_class_numbers(int q, const Poly& D);

// Limit constants of beta_{delta+2m}(L)/q^{3m} (even shift) and
// beta_{delta+2m+1}(L)/q^{3m} (odd shift).
Rational beta_limit(const GenusSymbol& sym, bool odd_shift);

// lim q^{-l} sum over deg m = l, (m, D) = 1 of L(1, chi_{Dm}).
Rational l_average_limit(int q, const Poly& D);
// The same limit normalized by the number of m: M_D(2) zeta(2) / (M_D(3) zeta(3)).
Rational l_average_normalized(int q, const Poly& D);
// lim q^{-3l} sum over deg m = delta + 2l + 1, (m, D) = 1 of h(mD).
Rational classno_average_limit(int q, const Poly& D);

}  // namespace fqf
