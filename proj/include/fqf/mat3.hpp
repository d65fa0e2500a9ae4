#pragma once

#include <array>

#include "fqf/poly.hpp"

namespace fqf {

using Vec3 = std::array<Poly, 3>;

// 3x3 matrix over F_q[t]. Used both for Gram matrices (symmetric) and basis
// transforms.
struct Mat3 {
  std::array<std::array<Poly, 3>, 3> m;

  static Mat3 zero(int q) {
    Mat3 r;
    for (auto& row : r.m) row.fill(Poly::zero(q));
    return r;
  }
  static Mat3 identity(int q) {
    Mat3 r = zero(q);
    for (int i = 0; i < 3; ++i) r.m[i][i] = Poly::one(q);
    return r;
  }
  static Mat3 diagonal(const Poly& a, const Poly& b, const Poly& c) {
    Mat3 r = zero(a.q());
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    return r;
  }

  int q() const { return m[0][0].q(); }
  const Poly& at(int i, int j) const { return m[i][j]; }
  Poly& at(int i, int j) { return m[i][j]; }

  bool operator==(const Mat3& o) const { return m == o.m; }
  bool operator<(const Mat3& o) const { return m < o.m; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r = zero(q());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] = r.m[i][j] + m[i][k] * o.m[k][j];
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    Vec3 r{Poly::zero(q()), Poly::zero(q()), Poly::zero(q())};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) r[i] = r[i] + m[i][k] * v[k];
    return r;
  }

  Mat3 transpose() const {
    Mat3 r = zero(q());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  Poly det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  bool is_symmetric() const {
    return m[0][1] == m[1][0] && m[0][2] == m[2][0] && m[1][2] == m[2][1];
  }

  // T^t * G * T for G = *this
  Mat3 congruent(const Mat3& T) const { return T.transpose() * (*this) * T; }
};

// Q(v) = v^t G v for a symmetric Gram matrix G.
inline Poly quadratic_value(const Mat3& G, const Vec3& v) {
  Poly acc = Poly::zero(G.q());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc = acc + G.m[i][j] * v[i] * v[j];
  return acc;
}

// B(v, w) = v^t G w; with Q(x) = x^t G x this is the full bilinear form, so
// B(v, v) = Q(v) and Q(v + w) = Q(v) + Q(w) + 2 B(v, w).
inline Poly bilinear_value(const Mat3& G, const Vec3& v, const Vec3& w) {
  Poly acc = Poly::zero(G.q());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc = acc + G.m[i][j] * v[i] * w[j];
  return acc;
}

}  // namespace fqf
