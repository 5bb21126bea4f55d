#include "qsuper/ualg.hpp"

#include <algorithm>

namespace qsuper {

std::vector<ExpForm> cartan_vector(const ParityDatum& d, int i) {
  d.check_node(i);
  std::vector<ExpForm> h(d.n());
  h[i - 1] = ExpForm(Rational(d.sign(i)));
  h[i] = ExpForm(Rational(-d.sign(i + 1)));
  return h;
}

TwistData TwistData::symbolic(const ParityDatum& d) {
  TwistData t;
  t.symbolic_ = true;
  const int n = d.n();
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<ExpForm> plus(n), minus(n);
    for (int l = 1; l <= n; ++l) {
      ExpForm p;
      p.add_phi(i, l, Rational(1, 2));
      p.add_phi(i + 1, l, Rational(-1, 2));
      plus[l - 1] = p;
      ExpForm m;
      m.add_phi(l, i, Rational(1, 2));
      m.add_phi(l, i + 1, Rational(-1, 2));
      minus[l - 1] = m;
    }
    t.t_plus_.push_back(std::move(plus));
    t.t_minus_.push_back(std::move(minus));
  }
  return t;
}

TwistData TwistData::numeric(const ParityDatum& d,
                             const std::vector<std::vector<Rational>>& phi) {
  const int n = d.n();
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("phi matrix must be n x n");
  for (const auto& row : phi)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("phi matrix must be n x n");
  for (int t = 0; t < n; ++t) {
    if (phi[t][t] != 0) throw std::invalid_argument("phi diagonal must be zero");
    for (int l = 0; l < n; ++l)
      if (phi[t][l] != -phi[l][t])
        throw std::invalid_argument("phi must be antisymmetric");
  }
  TwistData t;
  t.symbolic_ = false;
  // every upper-triangle symbol gets a value, zeros included, so that
  // specialisation leaves no phi behind
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) t.assign_[{a, b}] = phi[a - 1][b - 1];
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<ExpForm> plus(n), minus(n);
    for (int l = 1; l <= n; ++l) {
      plus[l - 1] = ExpForm(Rational(phi[i - 1][l - 1] - phi[i][l - 1]) / 2);
      minus[l - 1] = ExpForm(Rational(phi[l - 1][i - 1] - phi[l - 1][i]) / 2);
    }
    t.t_plus_.push_back(std::move(plus));
    t.t_minus_.push_back(std::move(minus));
  }
  return t;
}

namespace {

std::vector<ExpForm> vec_add(std::vector<ExpForm> a, const std::vector<ExpForm>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
std::vector<ExpForm> vec_neg(const std::vector<ExpForm>& a) {
  std::vector<ExpForm> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
std::vector<ExpForm> vec_scale(const Rational& s, const std::vector<ExpForm>& a) {
  std::vector<ExpForm> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}
bool vec_is_zero(const std::vector<ExpForm>& a) {
  for (const auto& e : a)
    if (!e.is_zero()) return false;
  return true;
}

UElement word_elem(UWord w, LaurentCoefficient c = LaurentCoefficient::one()) {
  // drop unit torals
  UWord clean;
  for (auto& g : w)
    if (!g.toral_is_unit()) clean.push_back(std::move(g));
  return UElement::monomial(std::move(clean), std::move(c));
}

// super bracket [A, B]_c = AB - c (-1)^{|A||B|} BA on parity-homogeneous elements
UElement bracket_c(const UElement& a, const UElement& b, const LaurentCoefficient& c,
                   const ParityDatum& d) {
  int sign = a.homogeneous_parity(d) * b.homogeneous_parity(d);
  LaurentCoefficient coeff = (sign & 1) ? -c : c;
  return a * b - coeff * (b * a);
}
UElement bracket(const UElement& a, const UElement& b, const ParityDatum& d) {
  return bracket_c(a, b, LaurentCoefficient::one(), d);
}

}  // namespace

UGen EnvelopingAlgebra::L(int k, int sign) const {
  datum_.check_index(k);
  std::vector<ExpForm> c(datum_.n());
  c[k - 1] = ExpForm(Rational(sign));
  return UGen::toral(std::move(c));
}

UGen EnvelopingAlgebra::K(int i, int sign) const {
  auto h = cartan_vector(datum_, i);
  if (sign < 0) h = vec_neg(h);
  return UGen::toral(std::move(h));
}

std::vector<IdealGenerator> EnvelopingAlgebra::ideal_generators(IdealForm form) const {
  const int n = datum_.n();
  std::vector<IdealGenerator> gens;
  auto E = [](int i) { return UElement::monomial({UGen::e(i)}); };
  auto F = [](int i) { return UElement::monomial({UGen::f(i)}); };
  auto G = [](int k) { return UElement::monomial({UGen::gamma(k)}); };
  auto T = [](UGen g) { return word_elem({std::move(g)}); };
  auto q_pow = [](long e) { return LaurentCoefficient::q_int(e); };

  if (form == IdealForm::FormalGamma) {
    // [Gamma_k, Gamma_l]
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        gens.push_back({"cartan-commute", bracket(G(k), G(l), datum_)});
    // [Gamma_k, E_j] - (d_{kj} - d_{k,j+1}) E_j  and the F twin
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n - 1; ++j) {
        long ce = (k == j ? 1 : 0) - (k == j + 1 ? 1 : 0);
        gens.push_back(
            {"cartan-weight", bracket(G(k), E(j), datum_) - LaurentCoefficient::from_rational(
                                                        Rational(ce)) *
                                                        E(j)});
        gens.push_back(
            {"cartan-weight", bracket(G(k), F(j), datum_) - LaurentCoefficient::from_rational(
                                                        Rational(-ce)) *
                                                        F(j)});
      }
  } else {
    // torals commute and L_k L_k^{-1} = 1 (trivial after
    // straightening; kept as stated relations)
    for (int k = 1; k <= n; ++k) {
      for (int l = k + 1; l <= n; ++l)
        gens.push_back({"toral-commute", word_elem({L(k), L(l)}) - word_elem({L(l), L(k)})});
      gens.push_back({"toral-commute", word_elem({L(k), L(k, -1)}) - UElement::unit()});
    }
    // L_k^{+-1} E_j = q^{+-(d_{kj} - d_{k,j+1})} E_j L_k^{+-1}
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n - 1; ++j) {
        long ce = (k == j ? 1 : 0) - (k == j + 1 ? 1 : 0);
        for (int s : {1, -1}) {
          gens.push_back({"toral-weight",
                          word_elem({L(k, s), UGen::e(j)}) -
                              q_pow(s * ce) * word_elem({UGen::e(j), L(k, s)})});
          gens.push_back({"toral-weight",
                          word_elem({L(k, s), UGen::f(j)}) -
                              q_pow(-s * ce) * word_elem({UGen::f(j), L(k, s)})});
        }
      }
  }

  // EF family, denominators cleared:
  //   (q_i - q_i^{-1}) [E_i, F_j] - delta_{ij} (K_i - K_i^{-1})
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      LaurentCoefficient qi_diff = q_pow(datum_.sign(i)) - q_pow(-datum_.sign(i));
      UElement rel = qi_diff * bracket(E(i), F(j), datum_);
      if (i == j) rel -= T(K(i)) - T(K(i, -1));
      gens.push_back({form == IdealForm::FormalGamma ? "ef-cartan" : "ef-toral", rel});
    }

  // E_i^2 = 0 = F_i^2 on grey nodes
  for (int i = 1; i <= n - 1; ++i)
    if (datum_.grey(i)) {
      gens.push_back({"nilpotent", E(i) * E(i)});
      gens.push_back({"nilpotent", F(i) * F(i)});
    }

  // distant commutation
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      gens.push_back({"distant-commute", bracket(E(i), E(j), datum_)});
      gens.push_back({"distant-commute", bracket(F(i), F(j), datum_)});
    }

  // cubic Serre on white nodes, |i-j| = 1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) != 1 || datum_.grey(i)) continue;
      LaurentCoefficient q_plus = q_pow(1) + q_pow(-1);
      gens.push_back(
          {"serre-cubic", E(i) * E(i) * E(j) - q_plus * (E(i) * E(j) * E(i)) + E(j) * E(i) * E(i)});
      gens.push_back(
          {"serre-cubic", F(i) * F(i) * F(j) - q_plus * (F(i) * F(j) * F(i)) + F(j) * F(i) * F(i)});
    }

  // quartic Serre [[ [X_i, X_j]_{q_j}, X_k ]_{q_{j+1}}, X_j ] on grey j,
  // k = j+1 = i+2
  for (int j = 2; j <= n - 2; ++j) {
    if (!datum_.grey(j)) continue;
    int i = j - 1, k = j + 1;
    auto quartic = [&](auto X) {
      UElement inner = bracket_c(X(i), X(j), q_pow(datum_.sign(j)), datum_);
      UElement mid = bracket_c(inner, X(k), q_pow(datum_.sign(j + 1)), datum_);
      return bracket(mid, X(j), datum_);
    };
    gens.push_back({"serre-quartic", quartic(E)});
    gens.push_back({"serre-quartic", quartic(F)});
  }

  return gens;
}

std::vector<SkewFamily> EnvelopingAlgebra::skew_families() const {
  const int n = datum_.n();
  std::vector<SkewFamily> out;
  auto E = [](int i) { return UElement::monomial({UGen::e(i)}); };
  auto F = [](int i) { return UElement::monomial({UGen::f(i)}); };
  auto G = [](int k) { return UElement::monomial({UGen::gamma(k)}); };
  auto zero = zero_vec();

  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      out.push_back({"Gamma[" + std::to_string(k) + "," + std::to_string(l) + "]",
                     bracket(G(k), G(l), datum_), zero, zero});

  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n - 1; ++j) {
      long ce = (k == j ? 1 : 0) - (k == j + 1 ? 1 : 0);
      auto cf = [&](long v) { return LaurentCoefficient::from_rational(Rational(v)); };
      out.push_back({"E_Gamma[" + std::to_string(k) + "," + std::to_string(j) + "]",
                     bracket(G(k), E(j), datum_) - cf(ce) * E(j), cartan_vector(datum_, j),
                     zero});
      out.push_back({"F_Gamma[" + std::to_string(k) + "," + std::to_string(j) + "]",
                     bracket(G(k), F(j), datum_) - cf(-ce) * F(j), zero,
                     vec_neg(cartan_vector(datum_, j))});
    }

  for (int i = 1; i <= n - 1; ++i)
    if (datum_.grey(i)) {
      auto h2 = vec_scale(Rational(2), cartan_vector(datum_, i));
      out.push_back({"E^2[" + std::to_string(i) + "]", E(i) * E(i), h2, zero});
      out.push_back({"F^2[" + std::to_string(i) + "]", F(i) * F(i), zero, vec_neg(h2)});
    }

  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) != 1 || datum_.grey(i)) continue;
      LaurentCoefficient q_plus = LaurentCoefficient::q_int(1) + LaurentCoefficient::q_int(-1);
      auto g = vec_add(vec_scale(Rational(2), cartan_vector(datum_, i)),
                       cartan_vector(datum_, j));
      out.push_back({"Serre_E[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     E(i) * E(i) * E(j) - q_plus * (E(i) * E(j) * E(i)) + E(j) * E(i) * E(i),
                     g, zero});
      out.push_back({"Serre_F[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     F(i) * F(i) * F(j) - q_plus * (F(i) * F(j) * F(i)) + F(j) * F(i) * F(i),
                     zero, vec_neg(g)});
    }

  return out;
}

UTensor EnvelopingAlgebra::coproduct(const UWord& w, UMode mode,
                                     const TwistData* twist) const {
  if (mode == UMode::Twisted && twist == nullptr)
    throw std::invalid_argument("twisted coproduct requires twist data");
  // one-letter words, with unit torals dropped
  auto word_of = [](UGen g) {
    return g.toral_is_unit() ? UWord{} : UWord{std::move(g)};
  };
  UTensor acc = UTensor::unit();
  for (const auto& g : w) {
    UTensor dg;
    switch (g.kind) {
      case UGen::Kind::E: {
        int i = g.index;
        auto h = cartan_vector(datum_, i);
        if (mode == UMode::Standard) {
          dg.add({g}, {}, LaurentCoefficient::one());
          dg.add({UGen::toral(h)}, {g}, LaurentCoefficient::one());
        } else {
          dg.add({g}, word_of(UGen::toral(twist->t_plus(i))),
                 LaurentCoefficient::one());
          dg.add(word_of(UGen::toral(vec_add(h, twist->t_minus(i)))), {g},
                 LaurentCoefficient::one());
        }
        break;
      }
      case UGen::Kind::F: {
        int i = g.index;
        auto h = cartan_vector(datum_, i);
        if (mode == UMode::Standard) {
          dg.add({g}, {UGen::toral(vec_neg(h))}, LaurentCoefficient::one());
          dg.add({}, {g}, LaurentCoefficient::one());
        } else {
          dg.add({g}, word_of(UGen::toral(vec_neg(vec_add(h, twist->t_plus(i))))),
                 LaurentCoefficient::one());
          dg.add(word_of(UGen::toral(vec_neg(twist->t_minus(i)))), {g},
                 LaurentCoefficient::one());
        }
        break;
      }
      case UGen::Kind::Gamma:
        dg.add({g}, {}, LaurentCoefficient::one());
        dg.add({}, {g}, LaurentCoefficient::one());
        break;
      case UGen::Kind::Toral:
        dg.add(word_of(g), word_of(g), LaurentCoefficient::one());
        break;
    }
    acc = tensor_multiply(acc, dg, datum_);
  }
  return acc;
}

UTensor EnvelopingAlgebra::coproduct(const UElement& e, UMode mode,
                                     const TwistData* twist) const {
  UTensor out;
  for (const auto& [w, c] : e.terms()) {
    UTensor dw = coproduct(w, mode, twist);
    for (const auto& [k, tc] : dw.terms()) out.add(k.first, k.second, c * tc);
  }
  return out;
}

LaurentCoefficient EnvelopingAlgebra::counit(const UElement& e) const {
  LaurentCoefficient r;
  for (const auto& [w, c] : e.terms()) {
    bool toral_only = true;
    for (const auto& g : w)
      if (g.kind != UGen::Kind::Toral) {
        toral_only = false;
        break;
      }
    if (toral_only) r += c;
  }
  return r;
}

UElement EnvelopingAlgebra::antipode(const UElement& e) const {
  UElement out;
  for (const auto& [w, c] : e.terms()) {
    // total Koszul sign for reversing the word
    int sign = 0;
    for (size_t s = 0; s < w.size(); ++s)
      for (size_t t = s + 1; t < w.size(); ++t)
        sign += parity_of(w[s], datum_) * parity_of(w[t], datum_);
    UElement acc = UElement::monomial({}, (sign & 1) ? -c : c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      UElement sg;
      switch (it->kind) {
        case UGen::Kind::E:
          sg = word_elem({UGen::toral(vec_neg(cartan_vector(datum_, it->index))), *it},
                         -LaurentCoefficient::one());
          break;
        case UGen::Kind::F:
          sg = word_elem({*it, UGen::toral(cartan_vector(datum_, it->index))},
                         -LaurentCoefficient::one());
          break;
        case UGen::Kind::Gamma:
          sg = -LaurentCoefficient::one() * UElement::monomial({*it});
          break;
        case UGen::Kind::Toral:
          sg = word_elem({UGen::toral(vec_neg(it->c))});
          break;
      }
      acc = acc * sg;
    }
    out += acc;
  }
  return out;
}

UElement EnvelopingAlgebra::straighten(const UElement& e) const {
  const int n = datum_.n();
  UElement out;
  for (const auto& [w, c] : e.terms()) {
    LaurentCoefficient coeff = c;
    UWord rest;
    std::vector<ExpForm> toral(n);
    bool have_toral = false;
    // walk left to right, carrying the accumulated toral exponent past E/F
    for (const auto& g : w) {
      switch (g.kind) {
        case UGen::Kind::Toral:
          toral = vec_add(std::move(toral), g.c);
          have_toral = true;
          break;
        case UGen::Kind::E:
        case UGen::Kind::F: {
          if (have_toral) {
            ExpForm diff = toral[g.index - 1] - toral[g.index];
            if (g.kind == UGen::Kind::F) diff = -diff;
            if (!diff.is_zero())
              coeff *= LaurentCoefficient::q_power(diff);
          }
          rest.push_back(g);
          break;
        }
        case UGen::Kind::Gamma:
          rest.push_back(g);
          break;
      }
    }
    if (have_toral && !vec_is_zero(toral)) rest.push_back(UGen::toral(std::move(toral)));
    out.add(std::move(rest), coeff);
  }
  return out;
}

UTensor EnvelopingAlgebra::straighten_legs(const UTensor& t) const {
  UTensor out;
  for (const auto& [k, c] : t.terms()) {
    UElement l = straighten(k.first);
    UElement r = straighten(k.second);
    for (const auto& [lw, lc] : l.terms())
      for (const auto& [rw, rc] : r.terms()) out.add(lw, rw, c * lc * rc);
  }
  return out;
}

std::vector<std::vector<LaurentCoefficient>> EnvelopingAlgebra::matrix_rep(
    const UElement& e) const {
  const int n = datum_.n();
  auto zero_mat = [n] {
    return std::vector<std::vector<LaurentCoefficient>>(
        n, std::vector<LaurentCoefficient>(n));
  };
  auto mat_mul = [n](const auto& a, const auto& b) {
    auto r = std::vector<std::vector<LaurentCoefficient>>(
        n, std::vector<LaurentCoefficient>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  auto result = zero_mat();
  for (const auto& [w, c] : e.terms()) {
    auto acc = zero_mat();
    for (int i = 0; i < n; ++i) acc[i][i] = LaurentCoefficient::one();
    for (const auto& g : w) {
      auto m = zero_mat();
      switch (g.kind) {
        case UGen::Kind::E:
          datum_.check_node(g.index);
          m[g.index - 1][g.index] = LaurentCoefficient::one();
          break;
        case UGen::Kind::F:
          datum_.check_node(g.index);
          m[g.index][g.index - 1] = LaurentCoefficient::one();
          break;
        case UGen::Kind::Gamma:
          datum_.check_index(g.index);
          m[g.index - 1][g.index - 1] = LaurentCoefficient::one();
          break;
        case UGen::Kind::Toral:
          for (int i = 0; i < n; ++i)
            m[i][i] = LaurentCoefficient::q_power(g.c[i]);
          break;
      }
      acc = mat_mul(acc, m);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!acc[i][j].is_zero()) result[i][j] += c * acc[i][j];
  }
  return result;
}

}  // namespace qsuper
