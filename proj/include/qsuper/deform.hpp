#pragma once

#include "qsuper/pairing.hpp"

namespace qsuper {

/// The 2-cocycle sigma_Phi on the function side: zero unless both monomials
/// use only diagonal generators x_{rr}, and
///   sigma(prod x_{rr}^{e'_rr}, prod x_{ss}^{e''_ss})
///     = q^{(1/2) sum_{r,s} phi_{rs} e'_rr e''_ss}.
/// `invert` evaluates the convolution inverse (Phi replaced by -Phi).
LaurentCoefficient sigma_eval(const FWord& a, const FWord& b, bool invert = false);
LaurentCoefficient sigma_eval(const FElement& a, const FElement& b, bool invert = false);

/// Deformed product inside the uniparametric algebra:
///   x_{rs} *_sigma x_{lt} = q^{(phi_{rl} - phi_{st})/2} x_{rs} x_{lt}
/// iterated over all generator pairs, result in the uniparametric PBW basis.
/// `falg` must be uniparametric.
FElement f_deformed_multiply(const FunctionAlgebra& falg, const FElement& a,
                             const FElement& b);

/// Re-derives every multiparametric relation from the uniparametric algebra
/// through the deformed product and asserts exact vanishing, with symbolic
/// parameters throughout.
Report verify_multiparam_presentation(const ParityDatum& datum);

/// Left 2-cocycle identity
///   sigma(f1,g1) sigma(f2 g2, h) = sigma(g1,h1) sigma(f, g2 h2)
/// over all triples of PBW monomials of degree <= depth.
Report cocycle_identity_check(const ParityDatum& datum, int depth);

/// Runs verify_J_orthogonal in twisted mode against the multiparametric
/// relation set (the dual, executable face of the cocycle/twist duality).
Report verify_twisted_pairing(const ParityDatum& datum, const TwistData& twist,
                              int depth);

}  // namespace qsuper
