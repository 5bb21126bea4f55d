#include "qsuper/falg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace qsuper {

namespace {

long inversions(const FWord& w) {
  long inv = 0;
  for (size_t s = 0; s < w.size(); ++s)
    for (size_t t = s + 1; t < w.size(); ++t)
      if (w[t] < w[s]) ++inv;
  return inv;
}

}  // namespace

std::vector<long> f_word_weight(const FWord& w, int n) {
  std::vector<long> wt(static_cast<size_t>(n) * n + 2, 0);
  wt[0] = static_cast<long>(w.size());
  for (const auto& g : w) ++wt[1 + (g.row - 1) * n + (g.col - 1)];
  wt.back() = inversions(w);
  return wt;
}

FunctionAlgebra::FunctionAlgebra(ParityDatum datum, FMode mode)
    : datum_(std::move(datum)), mode_(mode) {
  build_rules();
}

void FunctionAlgebra::build_rules() {
  const int n = datum_.n();
  rule_index_.assign(static_cast<size_t>(n) * n * n * n, -1);
  auto slot = [n](const FGen& a, const FGen& b) {
    int ia = (a.row - 1) * n + (a.col - 1);
    int ib = (b.row - 1) * n + (b.col - 1);
    return static_cast<size_t>(ia) * n * n + ib;
  };
  auto q_pow = [](const Rational& r) {
    return LaurentCoefficient::q_power(ExpForm(r));
  };
  auto q_phi = [this](int t, int l, const Rational& coeff) {
    // q^{coeff * phi_{tl}} in multiparametric mode, 1 otherwise
    if (mode_ == FMode::Uniparam) return LaurentCoefficient::one();
    return LaurentCoefficient::q_power(ExpForm::phi(t, l, coeff));
  };
  auto sgn = [](int parity_product) {
    return parity_product & 1 ? Rational(-1) : Rational(1);
  };

  // All pairs (a, b) with a >= b in row-major order get a rule.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int h = 1; h <= n; ++h)
        for (int k = 1; k <= n; ++k) {
          FGen a{i, j}, b{h, k};
          if (a < b) continue;
          RewriteRule rule{a, b, FElement::zero(), ""};
          if (a == b) {
            if (datum_.pij(i, j) != 1) continue;  // even squares are normal
            rule.family = "odd-square";           // x_{ij}^2 = 0
          } else if (i == h) {
            // same row, j > k:
            //   x_{ij} x_{ik} = (-1)^{p_ij p_ik} q_i^{-1} q_{kj} x_{ik} x_{ij}
            LaurentCoefficient c =
                sgn(datum_.pij(i, j) * datum_.pij(i, k)) *
                (q_pow(Rational(-datum_.sign(i))) * q_phi(k, j, Rational(1)));
            rule.rhs.add({b, a}, c);
            rule.family = "same-row";
          } else if (j == k) {
            // same column, i > h:
            //   x_{ij} x_{hj} = (-1)^{p_ij p_hj} q_j^{-1} q_{ih} x_{hj} x_{ij}
            LaurentCoefficient c =
                sgn(datum_.pij(i, j) * datum_.pij(h, j)) *
                (q_pow(Rational(-datum_.sign(j))) * q_phi(i, h, Rational(1)));
            rule.rhs.add({b, a}, c);
            rule.family = "same-column";
          } else if (i > h && j < k) {
            // x_{ij} x_{hk} = (-1)^{p_ij p_hk} q_{ih} q_{jk}^{-1} x_{hk} x_{ij}
            LaurentCoefficient c = sgn(datum_.pij(i, j) * datum_.pij(h, k)) *
                                   (q_phi(i, h, Rational(1)) * q_phi(j, k, Rational(-1)));
            rule.rhs.add({b, a}, c);
            rule.family = "exchange";
          } else {
            // i > h, j > k: invert the last relation family,
            //   x_{ij} x_{hk} = (-1)^{p_ij p_hk} q_{ih} q_{jk}^{-1} x_{hk} x_{ij}
            //     - (-1)^{p_ij p_hk + p_hk p_hj} (q_h - q_h^{-1}) q_{ih} x_{hj} x_{ik}
            LaurentCoefficient c1 = sgn(datum_.pij(i, j) * datum_.pij(h, k)) *
                                    (q_phi(i, h, Rational(1)) * q_phi(j, k, Rational(-1)));
            rule.rhs.add({b, a}, c1);
            LaurentCoefficient qh_diff =
                q_pow(Rational(datum_.sign(h))) - q_pow(Rational(-datum_.sign(h)));
            LaurentCoefficient c2 =
                sgn(datum_.pij(i, j) * datum_.pij(h, k) + datum_.pij(h, k) * datum_.pij(h, j)) *
                (qh_diff * q_phi(i, h, Rational(1)));
            rule.rhs.add({FGen{h, j}, FGen{i, k}}, -c2);
            rule.family = "exchange-correction";
          }
          rule_index_[slot(a, b)] = static_cast<int>(rules_.size());
          rules_.push_back(std::move(rule));
        }
}

const RewriteRule& FunctionAlgebra::rule_for(const FGen& a, const FGen& b) const {
  const int n = datum_.n();
  int ia = (a.row - 1) * n + (a.col - 1);
  int ib = (b.row - 1) * n + (b.col - 1);
  int idx = rule_index_[static_cast<size_t>(ia) * n * n + ib];
  assert(idx >= 0);
  return rules_[idx];
}

int FunctionAlgebra::find_reducible(const FWord& w) const {
  for (size_t s = 0; s + 1 < w.size(); ++s) {
    const FGen& a = w[s];
    const FGen& b = w[s + 1];
    if (b < a) return static_cast<int>(s);
    if (a == b && datum_.pij(a.row, a.col) == 1) return static_cast<int>(s);
  }
  return -1;
}

FElement FunctionAlgebra::normal_form(const FElement& e) const {
  for (const auto& [w, c] : e.terms())
    for (const auto& g : w) {
      datum_.check_index(g.row);
      datum_.check_index(g.col);
    }
  const int n = datum_.n();
  FElement result;
  std::map<FWord, LaurentCoefficient> agenda(e.terms().begin(), e.terms().end());
  while (!agenda.empty()) {
    auto it = agenda.begin();
    FWord w = it->first;
    LaurentCoefficient c = it->second;
    agenda.erase(it);
    if (c.is_zero()) continue;
    int s = find_reducible(w);
    if (s < 0) {
      result.add(std::move(w), c);
      continue;
    }
    const RewriteRule& rule = rule_for(w[s], w[s + 1]);
    std::vector<long> old_wt = f_word_weight(w, n);
    for (const auto& [pair_word, pair_coeff] : rule.rhs.terms()) {
      FWord nw(w.begin(), w.begin() + s);
      nw.insert(nw.end(), pair_word.begin(), pair_word.end());
      nw.insert(nw.end(), w.begin() + s + 2, w.end());
      // termination invariant from the PBW proof, checked on every step
      if (!(f_word_weight(nw, n) < old_wt))
        throw std::logic_error("rewrite step failed to decrease the weight tuple");
      LaurentCoefficient nc = c * pair_coeff;
      auto jt = agenda.find(nw);
      if (jt == agenda.end())
        agenda.emplace(std::move(nw), std::move(nc));
      else
        jt->second += nc;
    }
    (void)old_wt;
  }
  return result;
}

FTensor FunctionAlgebra::coproduct_impl(const FElement& e, bool normalize) const {
  const int n = datum_.n();
  FTensor result;
  for (const auto& [w, c] : e.terms()) {
    FTensor acc = FTensor::unit();
    for (const auto& g : w) {
      FTensor dg;
      for (int a = 1; a <= n; ++a) {
        int sign = datum_.pij(g.row, a) * datum_.pij(a, g.col);
        LaurentCoefficient cc = LaurentCoefficient::one();
        dg.add({FGen{g.row, a}}, {FGen{a, g.col}}, (sign & 1) ? -cc : cc);
      }
      acc = tensor_multiply(acc, dg, datum_);
    }
    for (const auto& [k, tc] : acc.terms()) result.add(k.first, k.second, c * tc);
  }
  return normalize ? normalize_legs(result) : result;
}

FTensor FunctionAlgebra::normalize_legs(const FTensor& t) const {
  FTensor out;
  for (const auto& [k, c] : t.terms()) {
    FElement left = normal_form(k.first);
    FElement right = normal_form(k.second);
    for (const auto& [lw, lc] : left.terms())
      for (const auto& [rw, rc] : right.terms()) out.add(lw, rw, c * lc * rc);
  }
  return out;
}

LaurentCoefficient FunctionAlgebra::counit(const FElement& e) const {
  LaurentCoefficient r;
  for (const auto& [w, c] : e.terms()) {
    bool diag = true;
    for (const auto& g : w)
      if (g.row != g.col) {
        diag = false;
        break;
      }
    if (diag) r += c;
  }
  return r;
}

std::vector<PBWMonomial> FunctionAlgebra::pbw_basis(int degree) const {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = datum_.n();
  const int slots = n * n;
  std::vector<PBWMonomial> out;
  PBWMonomial cur;
  cur.exp.assign(slots, 0);
  // depth-first over exponent vectors of total `degree` respecting truncation
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == slots) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int i = pos / n + 1, j = pos % n + 1;
    int cap = datum_.pij(i, j) == 1 ? 1 : remaining;
    for (int e = 0; e <= std::min(cap, remaining); ++e) {
      cur.exp[pos] = e;
      rec(pos + 1, remaining - e);
    }
    cur.exp[pos] = 0;
  };
  rec(0, degree);
  return out;
}

std::vector<PBWMonomial> FunctionAlgebra::pbw_basis_upto(int degree) const {
  std::vector<PBWMonomial> out;
  for (int m = 0; m <= degree; ++m) {
    auto part = pbw_basis(m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FElement FunctionAlgebra::poisson_bracket(
    const FElement& a, const FElement& b,
    const std::map<std::pair<int, int>, Rational>& phi) const {
  int pa = a.homogeneous_parity(datum_);
  int pb = b.homogeneous_parity(datum_);
  FElement comm = a * b;
  FElement ba = b * a;
  if (pa * pb & 1)
    comm += ba;
  else
    comm -= ba;
  FElement nf = normal_form(comm);
  FElement out;
  for (const auto& [w, c] : nf.terms()) {
    LaurentCoefficient sp = c.specialized(phi);
    if (sp.has_phi())
      throw std::invalid_argument("poisson_bracket: unassigned phi symbol");
    if (sp.value_at_q1() != 0)
      throw std::logic_error(
          "poisson_bracket: super-commutator does not vanish at q = 1");
    Rational d = sp.q_derivative_at_1();
    out.add(w, LaurentCoefficient::from_rational(d));
  }
  return out;
}

FElement FunctionAlgebra::specialize(const FElement& e,
                                     const std::map<std::pair<int, int>, Rational>& assign,
                                     bool q_to_one) const {
  FElement out;
  for (const auto& [w, c] : e.terms()) out.add(w, c.specialized(assign, q_to_one));
  return out;
}

}  // namespace qsuper
