#pragma once

#include "fqf/poly.hpp"

namespace fqf {

// Jacobi symbol (b/a) in F_q[t], a monic nonzero, via quadratic reciprocity
// with Euclidean reduction. Returns 0 iff gcd(a, b) != 1. Multiplicative in
// both arguments.
int jacobi(const Poly& b, const Poly& a);

}  // namespace fqf
