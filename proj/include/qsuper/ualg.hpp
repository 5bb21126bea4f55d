#pragma once

#include <optional>
#include <vector>

#include "qsuper/supercore.hpp"

namespace qsuper {

enum class IdealForm { FormalGamma, Polynomial };
enum class UMode { Standard, Twisted };

/// H_i = (-1)^{p(i)} e_i - (-1)^{p(i+1)} e_{i+1} as a toral coordinate vector.
std::vector<ExpForm> cartan_vector(const ParityDatum& d, int i);

/// Toral data for the twisted coproduct: the vectors T_{i,+} and T_{i,-}
/// with entries (1/2)(phi_{i,l} - phi_{i+1,l}) resp. (1/2)(phi_{l,i} - phi_{l,i+1}).
/// Phi is either symbolic (entries stay phi symbols) or a numeric rational
/// antisymmetric matrix.
class TwistData {
 public:
  static TwistData symbolic(const ParityDatum& d);
  static TwistData numeric(const ParityDatum& d,
                           const std::vector<std::vector<Rational>>& phi);

  const std::vector<ExpForm>& t_plus(int i) const { return t_plus_.at(i - 1); }
  const std::vector<ExpForm>& t_minus(int i) const { return t_minus_.at(i - 1); }
  bool is_symbolic() const { return symbolic_; }
  /// The numeric assignment phi_{tl} -> rational (empty when symbolic).
  const std::map<std::pair<int, int>, Rational>& assignment() const { return assign_; }

 private:
  std::vector<std::vector<ExpForm>> t_plus_, t_minus_;
  bool symbolic_ = true;
  std::map<std::pair<int, int>, Rational> assign_;
};

struct IdealGenerator {
  std::string family;  // cartan-commute, ef-cartan, serre-cubic, ...
  UElement element;    // parity-homogeneous, denominator-free
};

/// Skew-primitive relation families with their group-likes:
/// residue = Delta(rho) - Toral(g_left) (x) rho - rho (x) Toral(g_right).
struct SkewFamily {
  std::string name;
  UElement rho;
  std::vector<ExpForm> g_left;
  std::vector<ExpForm> g_right;
};

class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(ParityDatum datum) : datum_(std::move(datum)) {}

  const ParityDatum& datum() const { return datum_; }

  std::vector<IdealGenerator> ideal_generators(IdealForm form) const;
  std::vector<SkewFamily> skew_families() const;

  UTensor coproduct(const UWord& w, UMode mode = UMode::Standard,
                    const TwistData* twist = nullptr) const;
  UTensor coproduct(const UElement& e, UMode mode = UMode::Standard,
                    const TwistData* twist = nullptr) const;

  LaurentCoefficient counit(const UElement& e) const;

  /// Super anti-homomorphism S(ab) = (-1)^{|a||b|} S(b) S(a) with
  /// S(E_i) = -Toral(-H_i) E_i, S(F_i) = -F_i Toral(H_i), S(Gamma_k) = -Gamma_k,
  /// S(Toral(c)) = Toral(-c).
  UElement antipode(const UElement& e) const;

  /// Toral-normal form: torals moved right and merged into a single rightmost
  /// factor (Toral(0) dropped); E/F/Gamma letters keep their mutual order.
  UElement straighten(const UElement& e) const;
  UElement straighten(const UWord& w) const {
    return straighten(UElement::monomial(w));
  }
  UTensor straighten_legs(const UTensor& t) const;

  /// Standard representation: E_i -> unit matrix slot (i,i+1), F_i -> (i+1,i),
  /// Gamma_k -> slot (k,k), Toral(c) -> diag(q^{c_1},...,q^{c_n}).
  std::vector<std::vector<LaurentCoefficient>> matrix_rep(const UElement& e) const;
  std::vector<std::vector<LaurentCoefficient>> matrix_rep(const UWord& w) const {
    return matrix_rep(UElement::monomial(w));
  }

  // Convenience letters.
  UGen L(int k, int sign = 1) const;                 // L_k^{+-1} = Toral(+-e_k)
  UGen K(int i, int sign = 1) const;                 // K_i^{+-1} = Toral(+-H_i)
  std::vector<ExpForm> zero_vec() const { return std::vector<ExpForm>(datum_.n()); }

  /// Numerator of the integral-form element Theta_i: K_i - K_i^{-1}.  Theta_i
  /// itself is this divided by (q_i - q_i^{-1}); the engine keeps coefficients
  /// denominator-free, so the numerator is what enters the EF relation.
  UElement theta_numerator(int i) const {
    return UElement::monomial({K(i)}) - UElement::monomial({K(i, -1)});
  }

 private:
  ParityDatum datum_;
};

}  // namespace qsuper
