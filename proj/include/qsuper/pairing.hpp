#pragma once

#include <optional>
#include <unordered_map>

#include "qsuper/falg.hpp"
#include "qsuper/report.hpp"
#include "qsuper/ualg.hpp"

namespace qsuper {

/// The recursive superbialgebra pairing of the function side with the
/// enveloping side.  Base values on generators, coproduct recursion for
/// products on either side, Koszul signs throughout.  Memoizes
/// (word, word) subproblems; instances are not thread-safe — use one per
/// worker.
class Pairing {
 public:
  Pairing(ParityDatum datum, UMode mode = UMode::Standard,
          std::optional<TwistData> twist = std::nullopt);

  const ParityDatum& datum() const { return datum_; }
  UMode mode() const { return mode_; }

  LaurentCoefficient pair(const FElement& f, const UElement& u) const;
  LaurentCoefficient pair_words(const FWord& f, const UWord& u) const;

  /// <f' (x) f'', u' (x) u''> = (-1)^{|f''||u'|} <f',u'> <f'',u''>.
  LaurentCoefficient pair_tensor(const FTensor& f, const UTensor& u) const;

 private:
  LaurentCoefficient pair_uncached(const FWord& f, const UWord& u) const;
  const UTensor& u_coproduct_cached(const UWord& w) const;

  ParityDatum datum_;
  UMode mode_;
  std::optional<TwistData> twist_;
  EnvelopingAlgebra ualg_;

  struct WordPairHash {
    size_t operator()(const std::pair<FWord, UWord>& k) const;
  };
  struct UWordHash {
    size_t operator()(const UWord& w) const;
  };
  mutable std::unordered_map<std::pair<FWord, UWord>, LaurentCoefficient, WordPairHash>
      memo_;
  mutable std::unordered_map<UWord, UTensor, UWordHash> cop_memo_;
};

/// The five relation families generating the ideal J on the function side,
/// in the presentation's orientation (multiparametric coefficients when the
/// algebra is multiparametric).
struct JGenerator {
  std::string family;
  FElement element;
};
std::vector<JGenerator> ideal_j_generators(const FunctionAlgebra& falg);

// ---- verification suites -----------------------------------------------

/// Relation-ideal orthogonality at depth D: <b, rho> = 0 for every PBW
/// monomial b of degree
/// <= D and every generator rho of the relation ideal R.
Report verify_R_orthogonal(const ParityDatum& datum, IdealForm form, int depth,
                           UMode mode = UMode::Standard,
                           std::optional<TwistData> twist = std::nullopt);

/// Function-side ideal orthogonality at depth D: <eta, w> = 0 for every J
/// generator eta
/// and every word w of length <= D over {E_i, F_i, Gamma_k, L_k^{+-1}}.
/// Standard mode pairs the uniparametric J; twisted mode pairs the
/// multiparametric J against the twisted coproduct.
Report verify_J_orthogonal(const ParityDatum& datum, UMode mode, int depth,
                           std::optional<TwistData> twist = std::nullopt);

/// Coideal check: Delta(eta) reduces to 0 once both tensor legs are put in
/// normal form, for every J generator eta.
Report verify_J_coideal(const FunctionAlgebra& falg);

/// Skew-primitivity: residue of Delta(rho) - Toral(gl) (x) rho - rho (x) Toral(gr)
/// after toral straightening of both legs, over the listed skew families.
Report skew_primitivity_check(const ParityDatum& datum);
/// Single-family variant.
UTensor skew_primitivity_residue(const EnvelopingAlgebra& ualg, const SkewFamily& fam);

/// Rank of the matrix <b_s, w_t> over PBW monomials of degree <= m and words
/// of length <= l over {E_i, F_i, Gamma_k}, computed exactly over QQ(q) after
/// the numeric phi specialisation `assign`.
int pairing_matrix_rank(const ParityDatum& datum, int degree, int word_length,
                        UMode mode = UMode::Standard,
                        std::optional<TwistData> twist = std::nullopt);

/// Words over {E_i, F_i, Gamma_k} [+ L_k^{+-1} when with_torals] of length
/// <= max_len, shortest first.
std::vector<UWord> enumerate_u_words(const ParityDatum& datum, int max_len,
                                     bool with_torals);

}  // namespace qsuper
