#pragma once

#include <vector>

#include "qsuper/supercore.hpp"

namespace qsuper {

enum class FMode { Uniparam, Multiparam };

/// Truncated ordered monomial: exponent vector over the generator positions
/// (i,j) in row-major order, with e_{ij} <= 1 whenever p_{ij} = 1.
struct PBWMonomial {
  std::vector<int> exp;  // length n*n, row-major

  int degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }
  FWord word(int n) const {
    FWord w;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int e = 0; e < exp[(i - 1) * n + (j - 1)]; ++e) w.push_back(FGen{i, j});
    return w;
  }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) { return a.exp < b.exp; }
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.exp == b.exp; }
};

/// Weight tuple from the PBW termination argument: (total degree, occurrence
/// counts in row-major order, inversion count), compared lexicographically.
/// Every rewrite step strictly decreases it.
std::vector<long> f_word_weight(const FWord& w, int n);

/// One rewrite family instance: the out-of-order pair (left) and what it
/// rewrites to (an element of strictly smaller weight).
struct RewriteRule {
  FGen a, b;        // leading word a b (a >= b in row-major order)
  FElement rhs;     // equal element, PBW-ordered pairs only
  const char* family;
};

/// The quantum function superalgebra over a fixed datum, uniparametric or
/// multiparametric (symbolic Phi entering coefficients as q^{phi_{tl}}).
class FunctionAlgebra {
 public:
  FunctionAlgebra(ParityDatum datum, FMode mode);

  const ParityDatum& datum() const { return datum_; }
  FMode mode() const { return mode_; }

  /// Relation set as explicit rewrite rules, one per unordered generator pair
  /// (plus odd squares).
  const std::vector<RewriteRule>& relations() const { return rules_; }

  /// Unique PBW normal form.  Asserts per-step weight decrease.
  FElement normal_form(const FElement& e) const;
  FElement normal_form(const FWord& w) const {
    return normal_form(FElement::monomial(w));
  }

  FElement multiply(const FElement& a, const FElement& b) const {
    return normal_form(a * b);
  }

  /// Delta(x_{ij}) = sum_a (-1)^{p_{ia} p_{aj}} x_{ia} (x) x_{aj}, extended as
  /// a superalgebra morphism; both legs returned in normal form.
  FTensor coproduct(const FElement& e) const { return coproduct_impl(e, true); }
  /// Same, but legs left as free words (used by the coideal suite).
  FTensor coproduct_free(const FElement& e) const { return coproduct_impl(e, false); }

  LaurentCoefficient counit(const FElement& e) const;

  std::vector<PBWMonomial> pbw_basis(int degree) const;
  std::vector<PBWMonomial> pbw_basis_upto(int degree) const;

  /// Semiclassical bracket oracle: the q-derivative at 1 of
  /// nf(ab - (-1)^{|a||b|} ba), coefficient-wise, after specialising phi (the
  /// optional numeric assignment; empty for the uniparametric algebra).
  /// Throws if the super-commutator fails to vanish at q = 1.
  FElement poisson_bracket(const FElement& a, const FElement& b,
                           const std::map<std::pair<int, int>, Rational>& phi = {}) const;

  FElement specialize(const FElement& e,
                      const std::map<std::pair<int, int>, Rational>& assign,
                      bool q_to_one = false) const;

  /// Reduces both tensor legs to normal form.
  FTensor normalize_legs(const FTensor& t) const;

  bool is_normal(const FWord& w) const { return find_reducible(w) < 0; }

 private:
  FTensor coproduct_impl(const FElement& e, bool normalize) const;
  // Index of the leftmost reducible adjacent pair, or -1.
  int find_reducible(const FWord& w) const;
  const RewriteRule& rule_for(const FGen& a, const FGen& b) const;
  void build_rules();

  ParityDatum datum_;
  FMode mode_;
  std::vector<RewriteRule> rules_;
  std::vector<int> rule_index_;  // (a,b) pair -> rule slot, dense n^2 x n^2
};

}  // namespace qsuper
