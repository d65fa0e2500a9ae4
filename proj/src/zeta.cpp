#include "fqf/zeta.hpp"

#include <stdexcept>

#include "fqf/factor.hpp"
#include "fqf/jacobi.hpp"

namespace fqf {

InfinityType infinity_type(const Poly& m) {
  if (m.is_zero()) throw std::domain_error("infinity_type: zero polynomial");
  if (m.deg() % 2 == 1) return InfinityType::ramified;
  return fp_legendre(m.lc(), m.q()) == 1 ? InfinityType::split : InfinityType::inert;
}

bool is_imaginary(const Poly& m) { return infinity_type(m) != InfinityType::split; }

QuadraticOrderDescriptor describe_order(const Poly& m) {
  auto split = squarefree_split(m);
  return {m, split.squarefree, split.conductor, infinity_type(m)};
}

Rational m_d(const Poly& d, long s) {
  if (d.is_zero()) throw std::domain_error("m_d: zero polynomial");
  Rational acc(1);
  for (const auto& [p, e] : factor(d)) {
    (void)e;
    acc *= Rational(1) - q_pow(d.q(), -s * p.deg());
  }
  return acc;
}

Rational m_d_divisor_sum(const Poly& d, long s) {
  if (d.is_zero()) throw std::domain_error("m_d_divisor_sum: zero polynomial");
  Rational acc(0);
  for (const Poly& e : monic_divisors(d)) {
    int mu = mobius(e);
    if (mu == 0) continue;
    acc += Rational(mu) * q_pow(d.q(), -s * e.deg());
  }
  return acc;
}

UPoly m_d_upoly(const Poly& d) {
  if (d.is_zero()) throw std::domain_error("m_d_upoly: zero polynomial");
  UPoly acc = UPoly::one();
  for (const auto& [p, e] : factor(d)) {
    (void)e;
    acc = acc * (UPoly::one() - UPoly::monomial(1, p.deg()));
  }
  return acc;
}

Rational zeta_A(int q, long s) {
  if (s < 2) throw std::domain_error("zeta_A: scalar form requires s >= 2");
  return Rational(1) / (Rational(1) - q_pow(q, 1 - s));
}

long long l_coefficient(const Poly& b, int k) {
  if (k < 0) throw std::invalid_argument("l_coefficient: negative degree");
  long long acc = 0;
  for_each_monic(b.q(), k, [&](const Poly& a) { acc += jacobi(b, a); });
  return acc;
}

UPoly l_polynomial(const Poly& b) {
  if (b.is_zero()) throw std::domain_error("l_polynomial: zero polynomial");
  auto sf = squarefree_split(b);
  if (sf.squarefree.is_constant() && fp_legendre(b.lc(), b.q()) == 1)
    throw std::domain_error("l_polynomial: b is a perfect square; the series is not a polynomial");
  std::vector<Rational> c;
  for (int k = 0; k <= b.deg() - 1; ++k)
    c.emplace_back(static_cast<long>(l_coefficient(b, k)));
  return UPoly(std::move(c));
}

UPoly l_curve_numerator(const Poly& b) {
  if (!is_squarefree(b)) throw std::invalid_argument("l_curve_numerator: b must be squarefree");
  UPoly l = l_polynomial(b);
  switch (infinity_type(b)) {
    case InfinityType::ramified: return l;
    case InfinityType::inert:
      return l.divide_exact(UPoly({Rational(1), Rational(1)}));   // 1 + u
    case InfinityType::split:
      return l.divide_exact(UPoly({Rational(1), Rational(-1)}));  // 1 - u
  }
  throw std::logic_error("l_curve_numerator: unreachable");
}

namespace {

// h of the maximal order A[sqrt(m0)], m0 squarefree imaginary of degree >= 1
Integer class_number_maximal(const Poly& m0) {
  const int q = m0.q();
  UPoly lstar = l_polynomial(m0);
  Rational at = lstar.eval(q_pow(q, -1));
  Rational h;
  if (m0.deg() % 2 == 1) {
    // ramified at infinity: h = L*(1/q) * q^{(deg-1)/2}
    h = at * q_pow(q, (m0.deg() - 1) / 2);
  } else {
    // inert: L*(u) = (1+u) L_E(u); h = 2 * q^g * L_E(1/q), g = deg/2 - 1
    Rational le = at / (Rational(1) + q_pow(q, -1));
    h = Rational(2) * q_pow(q, m0.deg() / 2 - 1) * le;
  }
  h.canonicalize();
  if (h.get_den() != 1 || h <= 0)
    throw std::logic_error("class_number: non-integral or non-positive value for " + m0.to_string());
  return h.get_num();
}

}  // namespace

Integer class_number(const Poly& m) {
  if (m.deg() < 1) throw std::domain_error("class_number: deg m must be >= 1");
  if (!is_imaginary(m))
    throw std::domain_error("class_number: m is a square in K_inf (real case, out of scope)");
  const int q = m.q();
  auto ord = describe_order(m);
  const Poly& m0 = ord.squarefree_part;
  const Poly& f = ord.conductor;

  Rational h;
  Rational unit_index(1);
  if (m0.is_constant()) {
    // A[sqrt(eps)] = F_{q^2}[t]: h = 1, but its unit group is F_{q^2}^x
    h = 1;
    if (f.deg() >= 1) unit_index = q + 1;
  } else {
    h = Rational(class_number_maximal(m0));
  }
  if (f.deg() >= 1) {
    h *= q_pow(q, f.deg());
    for (const auto& [p, e] : factor(f)) {
      (void)e;
      h *= Rational(1) - Rational(jacobi(m0, p)) * q_pow(q, -p.deg());
    }
    h /= unit_index;
  }
  h.canonicalize();
  if (h.get_den() != 1 || h <= 0)
    throw std::logic_error("class_number: non-integral or non-positive value for " + m.to_string());
  return h.get_num();
}

long long psi_count(const Poly& D, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("psi_count: negative degree");
  const int q = D.q();
  long long acc = 0;
  for_each_monic(q, k, [&](const Poly& x) {
    if (!gcd(x, D).is_one()) return;
    for_each_monic(q, l, [&](const Poly& y) {
      if (gcd(x, y).is_one() && gcd(y, D).is_one()) ++acc;
    });
  });
  return acc;
}

std::vector<std::vector<Integer>> psi_table(const Poly& D, int kmax, int lmax) {
  const int q = D.q();
  UPoly md = m_d_upoly(D);
  const int K = kmax, L = lmax;
  auto idx = [&](int k, int l) { return k * (L + 1) + l; };
  // numerator N(u,v) = M*_D(u) M*_D(v) (1 - q u v)
  std::vector<Rational> num((K + 1) * (L + 1), Rational(0));
  for (int i = 0; i <= std::min(K, md.degree()); ++i)
    for (int j = 0; j <= std::min(L, md.degree()); ++j) {
      Rational c = md.coeff(i) * md.coeff(j);
      num[idx(i, j)] += c;
      if (i + 1 <= K && j + 1 <= L) num[idx(i + 1, j + 1)] -= Rational(q) * c;
    }
  // denominator M*_D(uv)(1-qu)(1-qv); constant term 1
  std::vector<Rational> den((K + 1) * (L + 1), Rational(0));
  for (int d = 0; d <= md.degree(); ++d) {
    if (d > K || d > L) break;
    Rational c = md.coeff(d);
    den[idx(d, d)] += c;
    if (d + 1 <= K) den[idx(d + 1, d)] -= Rational(q) * c;
    if (d + 1 <= L) den[idx(d, d + 1)] -= Rational(q) * c;
    if (d + 1 <= K && d + 1 <= L) den[idx(d + 1, d + 1)] += Rational(q) * Rational(q) * c;
  }
  // series division
  std::vector<Rational> psi((K + 1) * (L + 1), Rational(0));
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= L; ++l) {
      Rational acc = num[idx(k, l)];
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
          if (i == 0 && j == 0) continue;
          if (den[idx(i, j)] != 0) acc -= den[idx(i, j)] * psi[idx(k - i, l - j)];
        }
      psi[idx(k, l)] = acc;  // den[0][0] = 1
    }
  std::vector<std::vector<Integer>> out(K + 1, std::vector<Integer>(L + 1));
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= L; ++l) {
      Rational v = psi[idx(k, l)];
      v.canonicalize();
      if (v.get_den() != 1)
        throw std::logic_error("psi_table: non-integral series coefficient");
      out[k][l] = v.get_num();
    }
  return out;
}

long long psi_count_fast(const Poly& D, int k, int l) {
  auto table = psi_table(D, k, l);
  return static_cast<long long>(table[k][l].get_si());
}

Rational sum_l_values(const Poly& D, int l) {
  if (D.deg() < 1) throw std::invalid_argument("sum_l_values: D must be non-constant");
  if (l < 1) throw std::invalid_argument("sum_l_values: l must be >= 1");
  const int q = D.q();
  Rational acc(0);
  Rational u = q_pow(q, -1);
  for_each_of_degree(q, l, [&](const Poly& m) {
    if (!gcd(m, D).is_one()) return;
    acc += l_polynomial(D * m).eval(u);
  });
  return acc;
}

Integer sum_c_k(const Poly& D, int l, int k) {
  const int q = D.q();
  Integer acc(0);
  for_each_of_degree(q, l, [&](const Poly& m) {
    if (!gcd(m, D).is_one()) return;
    acc += static_cast<long>(l_coefficient(D * m, k));
  });
  return acc;
}

}  // namespace fqf
