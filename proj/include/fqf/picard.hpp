#pragma once

#include "fqf/poly.hpp"

namespace fqf {

// |Pic(A[sqrt(m)])| by brute force, independent of the L-value route:
// enumerate primitive invertible ideals (a, b+w), w^2 = m, with deg a up to
// floor(deg m / 2) (reduction theory bound for definite binary forms), and
// partition them by the exact principality test on I * conj(J). Requires m
// imaginary with 1 <= deg m <= max_deg (explicit failure otherwise).
long long picard_oracle(const Poly& m, int max_deg = 6);

}  // namespace fqf
