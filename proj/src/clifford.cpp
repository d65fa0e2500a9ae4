#include "fqf/clifford.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

#include "fqf/lattice.hpp"

namespace fqf {

Poly det4(const Mat4& m) {
  // Laplace along the first row with 3x3 cofactors
  Poly acc = Poly::zero(m[0][0].q());
  for (int j = 0; j < 4; ++j) {
    if (m[0][j].is_zero()) continue;
    Mat3 sub = Mat3::zero(m[0][0].q());
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m[r][c];
      }
    }
    Poly term = m[0][j] * sub.det();
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

namespace {

const int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};  // basis slots 1..3

struct Term {
  std::vector<int> word;  // generator indices, left to right
  Poly coef;
};

// Rewrite a sum of generator words into the canonical basis using
// e_i e_i = Q(e_i) and e_i e_j = 2 B(e_i, e_j) - e_j e_i for i > j.
CliffordElement reduce_terms(std::deque<Term> pending, const Mat3& G) {
  const int q = G.q();
  CliffordElement out{{Poly::zero(q), Poly::zero(q), Poly::zero(q), Poly::zero(q)}};
  while (!pending.empty()) {
    Term t = std::move(pending.front());
    pending.pop_front();
    if (t.coef.is_zero()) continue;
    bool rewritten = false;
    for (size_t k = 0; k + 1 < t.word.size(); ++k) {
      int i = t.word[k], j = t.word[k + 1];
      if (i < j) continue;
      if (i == j) {
        Term nt;
        nt.coef = t.coef * G.at(i, i);
        nt.word = t.word;
        nt.word.erase(nt.word.begin() + k, nt.word.begin() + k + 2);
        pending.push_back(std::move(nt));
      } else {
        Term drop;  // 2 B(e_i, e_j) with the pair removed
        drop.coef = t.coef * G.at(i, j) * 2;
        drop.word = t.word;
        drop.word.erase(drop.word.begin() + k, drop.word.begin() + k + 2);
        Term swp;  // - e_j e_i
        swp.coef = -t.coef;
        swp.word = t.word;
        std::swap(swp.word[k], swp.word[k + 1]);
        pending.push_back(std::move(drop));
        pending.push_back(std::move(swp));
      }
      rewritten = true;
      break;
    }
    if (rewritten) continue;
    // strictly ascending word; even length <= 2 here
    if (t.word.empty()) {
      out.c[0] = out.c[0] + t.coef;
    } else if (t.word.size() == 2) {
      for (int a = 0; a < 3; ++a)
        if (t.word[0] == kPairs[a][0] && t.word[1] == kPairs[a][1]) {
          out.c[a + 1] = out.c[a + 1] + t.coef;
          break;
        }
    } else {
      throw std::logic_error("clifford: odd-length word in the even algebra");
    }
  }
  return out;
}

}  // namespace

EvenCliffordOrder::EvenCliffordOrder(const Mat3& gram) : gram_(gram) {
  if (!gram.is_symmetric())
    throw std::invalid_argument("EvenCliffordOrder: Gram matrix is not symmetric");
  const int q = gram.q();
  std::vector<int> words[4] = {{}, {0, 1}, {0, 2}, {1, 2}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Term t;
      t.word = words[a];
      t.word.insert(t.word.end(), words[b].begin(), words[b].end());
      t.coef = Poly::one(q);
      table_[a][b] = reduce_terms({t}, gram_);
    }
  const int inv2 = fp_inv(2, q);
  auto unit = [&](int a) {
    CliffordElement e = zero();
    e.c[a] = Poly::one(q);
    return e;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      norm_gram_[a][b] = trace(multiply(unit(a), conjugate(unit(b)))) * inv2;
  // trace-zero basis v_a = e_ij - B(e_i, e_j)
  auto tz = [&](int a) {
    CliffordElement e = zero();
    e.c[a + 1] = Poly::one(q);
    e.c[0] = -gram_.at(kPairs[a][0], kPairs[a][1]);
    return e;
  };
  trace_zero_gram_ = Mat3::zero(q);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      trace_zero_gram_.at(a, b) = trace(multiply(tz(a), conjugate(tz(b)))) * inv2;
}

CliffordElement EvenCliffordOrder::zero() const {
  const int q = gram_.q();
  return {{Poly::zero(q), Poly::zero(q), Poly::zero(q), Poly::zero(q)}};
}

CliffordElement EvenCliffordOrder::scalar(const Poly& s) const {
  CliffordElement e = zero();
  e.c[0] = s;
  return e;
}

CliffordElement EvenCliffordOrder::add(const CliffordElement& x,
                                       const CliffordElement& y) const {
  CliffordElement r = zero();
  for (int a = 0; a < 4; ++a) r.c[a] = x.c[a] + y.c[a];
  return r;
}

CliffordElement EvenCliffordOrder::multiply(const CliffordElement& x,
                                            const CliffordElement& y) const {
  CliffordElement r = zero();
  for (int a = 0; a < 4; ++a) {
    if (x.c[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      if (y.c[b].is_zero()) continue;
      Poly s = x.c[a] * y.c[b];
      for (int k = 0; k < 4; ++k) r.c[k] = r.c[k] + s * table_[a][b].c[k];
    }
  }
  return r;
}

CliffordElement EvenCliffordOrder::conjugate(const CliffordElement& x) const {
  // bar(e_i e_j) = e_j e_i = 2 B(e_i, e_j) - e_i e_j
  CliffordElement r = zero();
  r.c[0] = x.c[0];
  for (int a = 0; a < 3; ++a) {
    r.c[0] = r.c[0] + x.c[a + 1] * gram_.at(kPairs[a][0], kPairs[a][1]) * 2;
    r.c[a + 1] = -x.c[a + 1];
  }
  return r;
}

Poly EvenCliffordOrder::trace(const CliffordElement& x) const {
  CliffordElement s = add(x, conjugate(x));
  for (int a = 1; a < 4; ++a)
    if (!s.c[a].is_zero()) throw std::logic_error("clifford: trace is not scalar");
  return s.c[0];
}

Poly EvenCliffordOrder::norm(const CliffordElement& x) const {
  CliffordElement n = multiply(x, conjugate(x));
  for (int a = 1; a < 4; ++a)
    if (!n.c[a].is_zero()) throw std::logic_error("clifford: norm is not scalar");
  return n.c[0];
}

SqrtSearch primitive_sqrt_search(const EvenCliffordOrder& order, const Poly& target,
                                 int degree_cap) {
  if (target.is_zero())
    throw std::invalid_argument("primitive_sqrt_search: target must be nonzero");
  if (target.deg() > degree_cap) return {SqrtStatus::unknown, std::nullopt};
  const int q = order.q();
  // lambda trace-zero means lambda^2 = -N(lambda); search N = -target on the
  // (definite) trace-zero norm form
  ReducedLattice tz = reduce(order.trace_zero_gram());
  for (const Vec3& cr : representations(tz, -target, true)) {
    Vec3 c = tz.transform * cr;
    CliffordElement lam = order.zero();
    for (int a = 0; a < 3; ++a) {
      lam.c[a + 1] = c[a];
      lam.c[0] = lam.c[0] - c[a] * order.lattice_gram().at(kPairs[a][0], kPairs[a][1]);
    }
    CliffordElement sq = order.multiply(lam, lam);
    if (sq.c[0] != target || !sq.c[1].is_zero() || !sq.c[2].is_zero() || !sq.c[3].is_zero())
      throw std::logic_error("primitive_sqrt_search: inconsistent square");
    if (!order.trace(lam).is_zero())
      throw std::logic_error("primitive_sqrt_search: nonzero trace");
    return {SqrtStatus::found, lam};
  }
  return {SqrtStatus::absent, std::nullopt};
}

}  // namespace fqf
