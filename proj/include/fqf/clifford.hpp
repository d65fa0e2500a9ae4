#pragma once

#include <array>
#include <optional>

#include "fqf/mat3.hpp"
#include "fqf/poly.hpp"

namespace fqf {

// Element of the even Clifford order in the basis {1, e1e2, e1e3, e2e3}.
struct CliffordElement {
  std::array<Poly, 4> c;
};

using Mat4 = std::array<std::array<Poly, 4>, 4>;

Poly det4(const Mat4& m);

// C_0(L) for an integral ternary lattice L: the A-algebra generated by the
// products e_i e_j, with relations e_i e_j + e_j e_i = 2 B(e_i, e_j) and
// e_i^2 = Q(e_i). A quaternion order; its reduced norm is x conj(x).
class EvenCliffordOrder {
 public:
  explicit EvenCliffordOrder(const Mat3& gram);

  const Mat3& lattice_gram() const { return gram_; }
  int q() const { return gram_.q(); }

  CliffordElement zero() const;
  CliffordElement scalar(const Poly& s) const;
  // product of basis elements (0 = 1, 1 = e1e2, 2 = e1e3, 3 = e2e3)
  const CliffordElement& basis_product(int a, int b) const { return table_[a][b]; }

  CliffordElement multiply(const CliffordElement& x, const CliffordElement& y) const;
  CliffordElement add(const CliffordElement& x, const CliffordElement& y) const;
  CliffordElement conjugate(const CliffordElement& x) const;  // canonical involution
  Poly trace(const CliffordElement& x) const;                 // x + conj(x), a scalar
  Poly norm(const CliffordElement& x) const;                  // x conj(x), a scalar

  // Gram of the trace form <x, y> = (1/2) Tr(x conj(y)) on the basis.
  const Mat4& norm_gram() const { return norm_gram_; }
  Poly norm_gram_det() const { return det4(norm_gram_); }

  // Gram of the norm form restricted to the trace-zero submodule, in the
  // basis v_a = e_ij - B(e_i, e_j).
  const Mat3& trace_zero_gram() const { return trace_zero_gram_; }

 private:
  Mat3 gram_;
  std::array<std::array<CliffordElement, 4>, 4> table_;
  Mat4 norm_gram_;
  Mat3 trace_zero_gram_;
};

enum class SqrtStatus { found, absent, unknown };

struct SqrtSearch {
  SqrtStatus status;
  std::optional<CliffordElement> element;  // primitive, trace zero, squares to target
};

// Primitive trace-zero lambda in the order with lambda^2 = target. The
// trace-zero norm form is definite, so the search over its reduced basis is
// exhaustive up to degree_cap; targets beyond the cap report unknown.
SqrtSearch primitive_sqrt_search(const EvenCliffordOrder& order, const Poly& target,
                                 int degree_cap = 24);

}  // namespace fqf
