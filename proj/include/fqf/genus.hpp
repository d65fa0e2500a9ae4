#pragma once

#include <optional>
#include <vector>

#include "fqf/lattice.hpp"
#include "fqf/places.hpp"
#include "fqf/upoly.hpp"

namespace fqf {

// Complete set of isometry class representatives of one genus.
struct ClassList {
  std::vector<ReducedLattice> reps;
  std::vector<long long> so_orders;  // n_i = |SO(L_i)|
  GenusSymbol symbol;

  Rational mass() const;  // sum 1/n_i
};

// One definite lattice of determinant D (up to a square unit): the diagonal
// template <1, -eps, -eps D> when it is definite, otherwise a bounded search
// over reduced Gram candidates. Throws if the search space is exhausted.
ReducedLattice seed_lattice(int q, const Poly& D);

// Every isometry class of the genus of seed_lattice(q, D), by enumerating all
// reduced Gram matrices with minima summing to deg D. Complete by
// construction; intended as the formula-independent oracle for small deg D.
ClassList exhaustive_classes(int q, const Poly& D, int max_delta = 4);

// Kneser p-neighbor of L at the isotropic-mod-p vector x (p coprime to det).
ReducedLattice neighbor(const ReducedLattice& L, const Poly& p, const Vec3& x);

// All p-neighbors: one per isotropic line of the conic Q = 0 mod p
// (|p| + 1 of them).
std::vector<ReducedLattice> all_neighbors(const ReducedLattice& L, const Poly& p);

// Breadth-first closure of the neighbor step over the given primes (default:
// the smallest irreducibles coprime to det). If expected_mass is given the
// accumulated mass must reach it exactly -- the completeness certificate --
// and a mismatch after the frontier empties is a hard error.
ClassList neighbor_closure(const ReducedLattice& seed,
                           std::vector<Poly> primes = {},
                           const std::optional<Rational>& expected_mass = std::nullopt);

// sum_i R(L_i, a) / n_i as an exact rational.
Rational siegel_lhs(const ClassList& classes, const Poly& a);

// (h_dec, h_ind): classes that split off a rank-1 summand vs. the rest.
// Restricted to the case the classification is proved for: D irreducible of
// odd degree, where decomposable <=> represents a unit <=> mu_1 = 0.
std::pair<int, int> classify_decomposable(const ClassList& classes);

}  // namespace fqf
