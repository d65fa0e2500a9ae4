#include "fqf/lattice.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "fqf/factor.hpp"
#include "fqf/places.hpp"

namespace fqf {

namespace {

bool postconditions_hold(const Mat3& H, int delta) {
  int mu[3];
  for (int i = 0; i < 3; ++i) mu[i] = H.at(i, i).deg();
  if (mu[0] > mu[1] || mu[1] > mu[2]) return false;
  if (mu[0] + mu[1] + mu[2] != delta) return false;
  // strict size bound: 2 deg B_ij < mu_i + mu_j makes the diagonal dominate
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!H.at(i, j).is_zero() && 2 * H.at(i, j).deg() >= mu[i] + mu[j]) return false;
  return true;
}

}  // namespace

ReducedLattice reduce(const Mat3& G) {
  if (!G.is_symmetric()) throw std::invalid_argument("reduce: Gram matrix is not symmetric");
  Poly det = G.det();
  if (det.is_zero()) throw std::invalid_argument("reduce: degenerate form");
  if (!is_definite(G)) throw std::invalid_argument("reduce: form is not definite");
  const int q = G.q();
  Mat3 U = Mat3::identity(q);
  Mat3 H = G;

  for (int iter = 0; iter < 10000; ++iter) {
    // sort the basis by norm degree
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < 2; ++i)
        if (H.at(i, i).deg() > H.at(i + 1, i + 1).deg()) {
          for (int r = 0; r < 3; ++r) std::swap(U.at(r, i), U.at(r, i + 1));
          H = G.congruent(U);
          moved = true;
        }
    }
    // size-reduction pass: e_j -= (B_ij div Q_ii) e_i
    bool changed = false;
    for (int i = 0; i < 3 && !changed; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int old = H.at(j, j).deg();
        Poly c = H.at(i, j) / H.at(i, i);
        if (c.is_zero()) continue;
        for (int r = 0; r < 3; ++r) U.at(r, j) = U.at(r, j) - c * U.at(r, i);
        H = G.congruent(U);
        if (H.at(j, j).deg() < old) { changed = true; break; }  // re-sort
      }
    if (!changed && postconditions_hold(H, det.deg())) {
      ReducedLattice L;
      L.gram = H;
      L.transform = U;
      L.det = det;
      for (int i = 0; i < 3; ++i) L.mu[i] = H.at(i, i).deg();
      return L;
    }
  }
  throw std::logic_error("reduce: failed to converge");
}

Poly content(const Vec3& v) { return gcd(gcd(v[0], v[1]), v[2]); }

bool is_primitive(const Vec3& v) {
  Poly c = content(v);
  return !c.is_zero() && c.deg() == 0;
}

Integer short_vector_space_size(const ReducedLattice& L, int k) {
  long e = 0;
  for (int i = 0; i < 3; ++i)
    if (k >= L.mu[i]) e += (k - L.mu[i]) / 2 + 1;
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(L.q()),
                static_cast<unsigned long>(e));
  return r;
}

Integer epstein_alpha(const ReducedLattice& L, int k) {
  if (k < 0) throw std::invalid_argument("epstein_alpha: negative degree");
  Integer prev = k == 0 ? Integer(1) : short_vector_space_size(L, k - 1);
  return short_vector_space_size(L, k) - prev;
}

namespace {

void all_polys_up_to(int q, int maxdeg, std::vector<Poly>& out) {
  out.clear();
  out.push_back(Poly::zero(q));
  for (int d = 0; d <= maxdeg; ++d)
    for_each_of_degree(q, d, [&](const Poly& f) { out.push_back(f); });
}

}  // namespace

void for_each_short_vector(const ReducedLattice& L, int kmax,
                           const std::function<void(const Vec3&, const Poly&)>& fn) {
  const int q = L.q();
  std::array<std::vector<Poly>, 3> range;
  for (int i = 0; i < 3; ++i)
    all_polys_up_to(q, kmax >= L.mu[i] ? (kmax - L.mu[i]) / 2 : -1, range[i]);
  const Mat3& G = L.gram;
  for (const Poly& c2 : range[2]) {
    Poly t22 = G.at(2, 2) * c2 * c2;
    for (const Poly& c1 : range[1]) {
      Poly partial = t22 + G.at(1, 1) * c1 * c1 + G.at(1, 2) * (c1 * c2) * 2;
      Poly lin = G.at(0, 1) * c1 + G.at(0, 2) * c2;  // B(e_0, c1 e_1 + c2 e_2)
      for (const Poly& c0 : range[0]) {
        if (c0.is_zero() && c1.is_zero() && c2.is_zero()) continue;
        Poly qv = partial + G.at(0, 0) * c0 * c0 + lin * c0 * 2;
        fn(Vec3{c0, c1, c2}, qv);
      }
    }
  }
}

namespace {

// dense int-coefficient helpers for the hot enumeration path
constexpr int kCap = 96;

int arr_deg(const int* a, int n) {
  for (int i = n - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

// out[0..la+lb-2] += s * (a conv b); arrays of logical lengths la, lb
void arr_addconv(int* out, const int* a, int la, const int* b, int lb, int s, int q) {
  for (int i = 0; i < la; ++i) {
    if (!a[i]) continue;
    long long ai = static_cast<long long>(a[i]) * s;
    for (int j = 0; j < lb; ++j)
      if (b[j]) out[i + j] = static_cast<int>(((out[i + j] + ai * b[j]) % q + q) % q);
  }
}

// r = a mod p in place of r (r preloaded with a); lp = deg p + 1, p monic not required
void arr_mod(int* r, int lr, const int* p, int dp, int q) {
  int lead_inv = 0;
  for (int i = lr - 1; i >= dp; --i) {
    if (!r[i]) continue;
    if (!lead_inv) lead_inv = fp_inv(p[dp], q);
    int c = fp_mul(r[i], lead_inv, q);
    for (int j = 0; j <= dp; ++j)
      r[i - dp + j] = fp_sub(r[i - dp + j], fp_mul(c, p[j], q), q);
  }
}

int arr_gcd_deg(const int* a0, int la, const int* b0, int lb, int q) {
  int a[kCap], b[kCap];
  std::memcpy(a, a0, sizeof(int) * la);
  std::memcpy(b, b0, sizeof(int) * lb);
  int da = arr_deg(a, la), db = arr_deg(b, lb);
  int* x = a;
  int* y = b;
  while (db >= 0) {
    arr_mod(x, da + 1, y, db, q);
    da = arr_deg(x, da + 1);
    std::swap(x, y);
    std::swap(da, db);
  }
  return da;  // -1 iff both zero
}

struct TwistCtx {
  Twist twist;
  std::vector<std::vector<int>> primes;  // coefficient arrays of p | D (psi) or p | d (chi_d)
  std::vector<Poly> prime_polys;
  int q;
};

template <class Fn>
void fast_enumerate(const ReducedLattice& L, int kmax, Fn&& fn) {
  const int q = L.q();
  int n[3];
  for (int i = 0; i < 3; ++i)
    n[i] = kmax >= L.mu[i] ? (kmax - L.mu[i]) / 2 + 1 : 0;
  if (kmax + 1 > kCap || 2 * (n[0] + n[1] + n[2]) > kCap)
    throw std::invalid_argument("fast_enumerate: degree bound too large");
  int g[3][3][kCap];
  int gl[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& c = L.gram.at(i, j).coeffs();
      gl[i][j] = static_cast<int>(c.size());
      std::memset(g[i][j], 0, sizeof(g[i][j]));
      std::copy(c.begin(), c.end(), g[i][j]);
    }

  int c1[kCap] = {0}, c2[kCap] = {0};
  const int l1 = std::max(n[1], 1), l2 = std::max(n[2], 1);
  bool more2 = true;
  while (more2) {
    // A = Q(c1 e_1 + c2 e_2), Lf = B(e_0, c1 e_1 + c2 e_2)
    int A[kCap] = {0}, Lf[kCap] = {0};
    {
      int sq1[kCap] = {0}, sq2[kCap] = {0}, cr[kCap] = {0};
      arr_addconv(sq1, c1, l1, c1, l1, 1, q);
      arr_addconv(sq2, c2, l2, c2, l2, 1, q);
      arr_addconv(cr, c1, l1, c2, l2, 2, q);
      arr_addconv(A, sq1, 2 * l1 - 1, g[1][1], gl[1][1], 1, q);
      arr_addconv(A, sq2, 2 * l2 - 1, g[2][2], gl[2][2], 1, q);
      arr_addconv(A, cr, l1 + l2 - 1, g[1][2], gl[1][2], 1, q);
    }
    arr_addconv(Lf, c1, l1, g[0][1], gl[0][1], 1, q);
    arr_addconv(Lf, c2, l2, g[0][2], gl[0][2], 1, q);
    const int lA = kmax + 1, lLf = kmax + 1;

    bool tail_zero = arr_deg(c1, l1) < 0 && arr_deg(c2, l2) < 0;
    int gcd23_deg = tail_zero ? -1 : arr_gcd_deg(c1, l1, c2, l2, q);
    int g23[kCap] = {0};
    if (gcd23_deg > 0) {
      // need the actual gcd for the per-vector primitivity test
      int a[kCap], b[kCap];
      std::memcpy(a, c1, sizeof(a));
      std::memcpy(b, c2, sizeof(b));
      int da = arr_deg(a, l1), db = arr_deg(b, l2);
      int* x = a;
      int* y = b;
      while (db >= 0) {
        arr_mod(x, da + 1, y, db, q);
        da = arr_deg(x, da + 1);
        std::swap(x, y);
        std::swap(da, db);
      }
      std::memcpy(g23, x, sizeof(g23));
    }

    int c0[kCap] = {0};
    const int l0 = std::max(n[0], 1);
    bool more0 = true;
    while (more0) {
      int d0 = arr_deg(c0, l0);
      if (!(tail_zero && d0 < 0)) {
        int Q[kCap] = {0};
        std::memcpy(Q, A, sizeof(Q));
        int sq0[kCap] = {0};
        arr_addconv(sq0, c0, l0, c0, l0, 1, q);
        arr_addconv(Q, sq0, 2 * l0 - 1, g[0][0], gl[0][0], 1, q);
        arr_addconv(Q, c0, l0, Lf, lLf, 2, q);
        int dq = arr_deg(Q, kmax + 1);
        bool prim;
        if (tail_zero)
          prim = d0 == 0;
        else if (gcd23_deg == 0)
          prim = true;
        else
          prim = d0 >= 0 && arr_gcd_deg(c0, l0, g23, gcd23_deg + 1, q) == 0;
        fn(dq, Q, kmax + 1, prim);
      }
      // odometer on c0
      more0 = false;
      for (int i = 0; i < n[0]; ++i) {
        if (++c0[i] < q) { more0 = true; break; }
        c0[i] = 0;
      }
    }
    // odometer on (c1, c2)
    more2 = false;
    for (int i = 0; i < n[1] + n[2]; ++i) {
      int* d = i < n[1] ? &c1[i] : &c2[i - n[1]];
      if (++*d < q) { more2 = true; break; }
      *d = 0;
    }
  }
}

}  // namespace

std::vector<long long> twisted_zeta_coefficients(const ReducedLattice& L, int kmax,
                                                 Twist twist, const Poly& d) {
  const int q = L.q();
  Poly D = L.det.monic();
  std::vector<Poly> primes;
  if (twist == Twist::psi || twist == Twist::phi_psi) {
    for (const auto& [p, e] : factor(D)) { (void)e; primes.push_back(p); }
  } else if (twist == Twist::chi_d) {
    if (d.is_zero() || !d.divides(D))
      throw std::invalid_argument("twisted_zeta_coefficients: d must divide det L");
    for (const auto& [p, e] : factor(d)) { (void)e; primes.push_back(p); }
  }
  std::vector<std::vector<int>> parr;
  for (const Poly& p : primes) parr.push_back(p.coeffs());

  std::vector<long long> out(kmax + 1, 0);
  fast_enumerate(L, kmax, [&](int dq, const int* Q, int lq, bool prim) {
    switch (twist) {
      case Twist::none:
        ++out[dq];
        break;
      case Twist::psi:
      case Twist::phi_psi: {
        if (twist == Twist::phi_psi && !prim) return;
        for (const auto& p : parr) {
          int r[kCap];
          std::memcpy(r, Q, sizeof(int) * lq);
          arr_mod(r, lq, p.data(), static_cast<int>(p.size()) - 1, q);
          if (arr_deg(r, static_cast<int>(p.size()) - 1) < 0) return;
        }
        ++out[dq];
        break;
      }
      case Twist::chi_d: {
        // indicator of Q(x) = 0 mod d, i.e. = 0 mod every p | d
        for (const auto& p : parr) {
          int r[kCap];
          std::memcpy(r, Q, sizeof(int) * lq);
          arr_mod(r, lq, p.data(), static_cast<int>(p.size()) - 1, q);
          if (arr_deg(r, static_cast<int>(p.size()) - 1) >= 0) return;
        }
        ++out[dq];
        break;
      }
    }
  });
  return out;
}

std::vector<long long> epstein_beta_histogram(const ReducedLattice& L, int kmax) {
  return twisted_zeta_coefficients(L, kmax, Twist::phi_psi);
}

std::vector<long long> epstein_alpha_histogram(const ReducedLattice& L, int kmax) {
  return twisted_zeta_coefficients(L, kmax, Twist::none);
}

std::vector<Vec3> representations(const ReducedLattice& L, const Poly& a,
                                  bool primitive_only) {
  if (a.is_zero()) throw std::invalid_argument("representations: a must be nonzero");
  std::vector<Vec3> out;
  for_each_short_vector(L, a.deg(), [&](const Vec3& v, const Poly& qv) {
    if (qv != a) return;
    if (primitive_only && !is_primitive(v)) return;
    out.push_back(v);
  });
  return out;
}

long long representation_count(const ReducedLattice& L, const Poly& a,
                               bool primitive_only) {
  return static_cast<long long>(representations(L, a, primitive_only).size());
}

namespace {

std::vector<Vec3> norm_candidates(const ReducedLattice& L, const Poly& target) {
  std::vector<Vec3> out;
  for_each_short_vector(L, target.deg(), [&](const Vec3& v, const Poly& qv) {
    if (qv == target) out.push_back(v);
  });
  return out;
}

// All T whose columns v_i satisfy B2(v_i, v_j) = G1(i, j); det T is then
// automatically +-1. Stops after the first hit unless collecting.
void gram_backtrack(const Mat3& G1, const ReducedLattice& L2,
                    std::vector<Mat3>* all, std::optional<Mat3>* first) {
  const int q = L2.q();
  const Mat3& G2 = L2.gram;
  auto cands0 = norm_candidates(L2, G1.at(0, 0));
  auto cands1 = norm_candidates(L2, G1.at(1, 1));
  auto cands2 = norm_candidates(L2, G1.at(2, 2));
  for (const Vec3& v0 : cands0) {
    for (const Vec3& v1 : cands1) {
      if (bilinear_value(G2, v0, v1) != G1.at(0, 1)) continue;
      for (const Vec3& v2 : cands2) {
        if (bilinear_value(G2, v0, v2) != G1.at(0, 2)) continue;
        if (bilinear_value(G2, v1, v2) != G1.at(1, 2)) continue;
        Mat3 T = Mat3::zero(q);
        for (int r = 0; r < 3; ++r) {
          T.at(r, 0) = v0[r];
          T.at(r, 1) = v1[r];
          T.at(r, 2) = v2[r];
        }
        if (first) {
          *first = T;
          return;
        }
        all->push_back(T);
      }
    }
  }
}

}  // namespace

std::optional<Mat3> isometry(const ReducedLattice& L1, const ReducedLattice& L2) {
  if (L1.mu != L2.mu) return std::nullopt;
  // determinants of isometric lattices agree up to the square of det T
  if (L1.det.monic() != L2.det.monic()) return std::nullopt;
  const int q = L1.q();
  if (fp_legendre(fp_mul(L1.det.lc(), L2.det.lc(), q), q) != 1) return std::nullopt;
  std::optional<Mat3> first;
  gram_backtrack(L1.gram, L2, nullptr, &first);
  return first;
}

std::vector<Mat3> automorphisms(const ReducedLattice& L) {
  std::vector<Mat3> all;
  gram_backtrack(L.gram, L, &all, nullptr);
  std::vector<Mat3> so;
  const Poly one = Poly::one(L.q());
  for (const Mat3& T : all)
    if (T.det() == one) so.push_back(T);
  return so;
}

long long so_order(const ReducedLattice& L) {
  return static_cast<long long>(automorphisms(L).size());
}

bool represents_unit(const ReducedLattice& L) { return L.mu[0] == 0; }

}  // namespace fqf
