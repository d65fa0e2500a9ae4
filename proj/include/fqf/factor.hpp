#pragma once

#include <utility>
#include <vector>

#include "fqf/poly.hpp"

namespace fqf {

// Monic irreducibles over F_q of degree exactly d, cached per (q, d).
// Thread-safe; the cache is grown under a mutex.
const std::vector<Poly>& irreducibles(int q, int d);

// Factorization by trial division against the irreducible table, adequate for
// the desk-scale degrees this library targets. The returned factors are monic
// irreducible, paired with exponents; multiplying them together and scaling by
// lc(f) reproduces f. Throws on f = 0.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

// (-1)^{#prime factors} for squarefree f, 0 otherwise. Requires f monic.
int mobius(const Poly& f);

// f = f0 * cond^2 with f0 squarefree (f0 carries the leading unit, cond monic).
struct SquarefreeSplit { Poly squarefree; Poly conductor; };
SquarefreeSplit squarefree_split(const Poly& f);

// Monic divisors of f (all of them, in deterministic order).
std::vector<Poly> monic_divisors(const Poly& f);

}  // namespace fqf
