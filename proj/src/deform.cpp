#include "qsuper/deform.hpp"

namespace qsuper {

LaurentCoefficient sigma_eval(const FWord& a, const FWord& b, bool invert) {
  for (const auto& g : a)
    if (g.row != g.col) return LaurentCoefficient::zero();
  for (const auto& g : b)
    if (g.row != g.col) return LaurentCoefficient::zero();
  ExpForm e;
  const Rational half = invert ? Rational(-1, 2) : Rational(1, 2);
  for (const auto& ga : a)
    for (const auto& gb : b) e.add_phi(ga.row, gb.row, half);
  return LaurentCoefficient::q_power(e);
}

LaurentCoefficient sigma_eval(const FElement& a, const FElement& b, bool invert) {
  LaurentCoefficient acc;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      LaurentCoefficient s = sigma_eval(wa, wb, invert);
      if (!s.is_zero()) acc += ca * cb * s;
    }
  return acc;
}

FElement f_deformed_multiply(const FunctionAlgebra& falg, const FElement& a,
                             const FElement& b) {
  if (falg.mode() != FMode::Uniparam)
    throw std::invalid_argument("deformed product lives inside the uniparametric algebra");
  FElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      // accumulated scalar: each generator of b multiplied past all of a
      ExpForm e;
      for (const auto& ga : wa)
        for (const auto& gb : wb) {
          e.add_phi(ga.row, gb.row, Rational(1, 2));
          e.add_phi(ga.col, gb.col, Rational(-1, 2));
        }
      FWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += (ca * cb * LaurentCoefficient::q_power(e)) *
             falg.normal_form(FElement::monomial(std::move(w)));
    }
  return out;
}

Report verify_multiparam_presentation(const ParityDatum& datum) {
  FunctionAlgebra uni(datum, FMode::Uniparam);
  FunctionAlgebra multi(datum, FMode::Multiparam);
  Report rep;
  rep.suite = "mp-relations";
  rep.n = datum.n();
  rep.parity = datum.bits();
  rep.mode = "multi";
  // Each multiparametric relation LHS - RHS, with every product taken as the
  // deformed product over the uniparametric basis, must vanish exactly.
  for (const auto& g : ideal_j_generators(multi)) {
    FElement residue;
    for (const auto& [w, c] : g.element.terms()) {
      FElement prod = FElement::monomial({w.front()});
      for (size_t s = 1; s < w.size(); ++s)
        prod = f_deformed_multiply(uni, prod, FElement::monomial({w[s]}));
      residue += c * prod;
    }
    rep.record(residue.is_zero(), g.family + ": " + to_string(g.element),
               "deformed-product residue", to_string(residue));
  }
  return rep;
}

Report cocycle_identity_check(const ParityDatum& datum, int depth) {
  FunctionAlgebra falg(datum, FMode::Uniparam);
  Report rep;
  rep.suite = "cocycle";
  rep.n = datum.n();
  rep.parity = datum.bits();
  rep.mode = "uni";
  auto basis = falg.pbw_basis_upto(depth);
  const int n = datum.n();

  std::vector<FElement> elems;
  std::vector<FTensor> cops;
  elems.reserve(basis.size());
  for (const auto& b : basis) {
    elems.push_back(FElement::monomial(b.word(n)));
    cops.push_back(falg.coproduct(elems.back()));
  }

  // two-phase evaluation: fold the Sweedler sums of a pair into one element,
  // then sweep the third monomial
  auto fold_left = [&](size_t fi, size_t gi) {
    // sum sigma(f1, g1) * (-1)^{|f2||g1|} * nf(f2 g2)
    FElement acc;
    for (const auto& [fk, fc] : cops[fi].terms())
      for (const auto& [gk, gc] : cops[gi].terms()) {
        LaurentCoefficient s = sigma_eval(fk.first, gk.first);
        if (s.is_zero()) continue;
        int sign =
            (parity_of(fk.second, datum) * parity_of(gk.first, datum)) & 1;
        FWord w = fk.second;
        w.insert(w.end(), gk.second.begin(), gk.second.end());
        LaurentCoefficient c = fc * gc * s;
        acc += (sign ? -c : c) * falg.normal_form(FElement::monomial(std::move(w)));
      }
    return acc;
  };

  // folded[a][b] = sum sigma(a1,b1) (-1)^{|a2||b1|} nf(a2 b2), shared by both
  // sides of the identity
  const size_t N = elems.size();
  std::vector<std::vector<FElement>> folded(N, std::vector<FElement>(N));
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) folded[a][b] = fold_left(a, b);

  for (size_t fi = 0; fi < N; ++fi)
    for (size_t gi = 0; gi < N; ++gi)
      for (size_t hi = 0; hi < N; ++hi) {
        LaurentCoefficient lhs = sigma_eval(folded[fi][gi], elems[hi]);
        LaurentCoefficient rhs = sigma_eval(elems[fi], folded[gi][hi]);
        ++rep.cases_total;
        if (lhs != rhs) {
          ++rep.cases_failed;
          if (rep.failures.size() < 64)
            rep.failures.push_back({"(" + to_string(elems[fi]) + ", " +
                                        to_string(elems[gi]) + ", " +
                                        to_string(elems[hi]) + ")",
                                    "cocycle identity", (lhs - rhs).to_string()});
        }
      }
  return rep;
}

Report verify_twisted_pairing(const ParityDatum& datum, const TwistData& twist,
                              int depth) {
  Report rep = verify_J_orthogonal(datum, UMode::Twisted, depth, twist);
  rep.suite = "twisted-pairing";
  return rep;
}

}  // namespace qsuper
