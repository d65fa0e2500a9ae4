#include "fqf/formulas.hpp"

#include <stdexcept>

#include "fqf/factor.hpp"
#include "fqf/zeta.hpp"

namespace fqf {

namespace {

Rational two_pow(int r) {
  Rational v(1);
  for (int i = 0; i < r; ++i) v *= 2;
  return v;
}

}  // namespace

Rational mass_theorem_form(int q, const Poly& D, const Poly& D0, int r) {
  if (!is_squarefree(D)) throw std::invalid_argument("mass: D must be squarefree");
  Rational num = q_pow(q, D.deg()) * m_d(D, 1) * m_d(D0, 2);
  Rational den = two_pow(r) * (q_pow(q, 2) - 1) * (2 * m_d(D0, 1) - m_d(D0, 2));
  Rational v = num / den;
  v.canonicalize();
  return v;
}

Rational mass_derivation_form(int q, const Poly& D, const Poly& D0, const Poly& D1, int r) {
  if (!is_squarefree(D)) throw std::invalid_argument("mass: D must be squarefree");
  Rational num = q_pow(q, D.deg()) * m_d(D, 1) * m_d(D, 2);
  Rational den = two_pow(r) * (q_pow(q, 2) - 1) *
                 (2 * m_d(D0, 1) * m_d(D1, 2) - m_d(D, 2));
  Rational v = num / den;
  v.canonicalize();
  return v;
}

Rational mass_formula(const GenusSymbol& sym) {
  Rational a = mass_theorem_form(sym.q, sym.det_monic, sym.D0, sym.r);
  Rational b = mass_derivation_form(sym.q, sym.det_monic, sym.D0, sym.D1, sym.r);
  if (a != b) throw std::logic_error("mass_formula: the two closed forms disagree");
  return a;
}

Rational mass_irreducible(int q, int delta) {
  Rational v = (q_pow(q, delta) - 1) / (2 * (q_pow(q, 2) - 1));
  v.canonicalize();
  return v;
}

ExactClassNumbers exact_class_numbers(int q, const Poly& D) {
  if (D.deg() % 2 == 0 || !D.is_monic() || !is_irreducible(D))
    throw std::domain_error(
        "exact_class_numbers: D must be monic irreducible of odd degree");
  const int delta = D.deg();
  UPoly l = l_curve_numerator(-D);
  Rational lsum = (l.eval(1) + l.eval(-1)) / 2;
  Rational base = Rational(1) + Rational(q) * (q_pow(q, delta - 1) - 1) / (q_pow(q, 2) - 1);
  Rational h = (base + lsum) / 2;
  Rational h_ind = (base - lsum) / 2;
  h.canonicalize();
  h_ind.canonicalize();
  lsum.canonicalize();
  ExactClassNumbers out;
  auto to_int = [](const Rational& v, const char* what) {
    if (v.get_den() != 1 || v < 0)
      throw std::logic_error(std::string("exact_class_numbers: ") + what +
                             " is not a nonnegative integer");
    return Integer(v.get_num());
  };
  out.h = to_int(h, "h");
  out.h_ind = to_int(h_ind, "h_ind");
  out.h_dec = to_int(lsum, "h_dec");
  if (out.h != out.h_dec + out.h_ind)
    throw std::logic_error("exact_class_numbers: h != h_dec + h_ind");
  return out;
}

Rational beta_limit(const GenusSymbol& sym, bool odd_shift) {
  const int q = sym.q;
  Rational c = 2 * m_d(sym.D0, 1) * m_d(sym.D1, 2) - m_d(sym.det_monic, 2);
  Rational v = c / (m_d(sym.det_monic, 3) * zeta_A(q, 3));
  if (odd_shift)
    v *= (1 - q_pow(q, -2)) * q_pow(q, sym.delta + 4);
  else
    v *= (1 - q_pow(q, -1)) * q_pow(q, sym.delta + 2);
  v.canonicalize();
  return v;
}

Rational l_average_limit(int q, const Poly& D) {
  Rational v = m_d(D, 1) * m_d(D, 2) / m_d(D, 3) * q * (1 - q_pow(q, -2));
  v.canonicalize();
  return v;
}

Rational l_average_normalized(int q, const Poly& D) {
  Rational v = m_d(D, 2) * zeta_A(q, 2) / (m_d(D, 3) * zeta_A(q, 3));
  v.canonicalize();
  return v;
}

Rational classno_average_limit(int q, const Poly& D) {
  Rational v = q_pow(q, 2 * D.deg()) * (q_pow(q, 2) - 1) * m_d(D, 1) * m_d(D, 2) / m_d(D, 3);
  v.canonicalize();
  return v;
}

}  // namespace fqf
