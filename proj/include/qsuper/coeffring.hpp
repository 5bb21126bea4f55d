#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/rational.hpp"

namespace qsuper {

/// A rational linear form  c + sum r_{t,l} * phi[t,l]  used as an exponent of q.
/// Only keys with t < l are stored; phi[l,t] enters as -phi[t,l] and phi[t,t]
/// contributes nothing (Phi is antisymmetric).
class ExpForm {
 public:
  ExpForm() = default;
  explicit ExpForm(Rational constant) : one_(std::move(constant)) {}

  static ExpForm phi(int t, int l, const Rational& coeff = Rational(1)) {
    ExpForm e;
    e.add_phi(t, l, coeff);
    return e;
  }

  const Rational& one() const { return one_; }
  const std::map<std::pair<int, int>, Rational>& phi_terms() const { return phi_; }

  bool is_zero() const { return one_ == 0 && phi_.empty(); }
  bool is_constant() const { return phi_.empty(); }

  void add_constant(const Rational& r) { one_ += r; }

  void add_phi(int t, int l, const Rational& coeff) {
    if (t == l || coeff == 0) return;
    auto key = t < l ? std::make_pair(t, l) : std::make_pair(l, t);
    Rational c = t < l ? coeff : Rational(-coeff);
    auto it = phi_.find(key);
    if (it == phi_.end()) {
      phi_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) phi_.erase(it);
    }
  }

  ExpForm& operator+=(const ExpForm& o) {
    one_ += o.one_;
    for (const auto& [k, v] : o.phi_) add_phi(k.first, k.second, v);
    return *this;
  }
  ExpForm& operator-=(const ExpForm& o) {
    one_ -= o.one_;
    for (const auto& [k, v] : o.phi_) add_phi(k.first, k.second, -v);
    return *this;
  }
  friend ExpForm operator+(ExpForm a, const ExpForm& b) { return a += b; }
  friend ExpForm operator-(ExpForm a, const ExpForm& b) { return a -= b; }
  friend ExpForm operator-(const ExpForm& a) {
    ExpForm r;
    r -= a;
    return r;
  }
  friend ExpForm operator*(const Rational& s, const ExpForm& a) {
    ExpForm r;
    if (s == 0) return r;
    r.one_ = s * a.one_;
    for (const auto& [k, v] : a.phi_) r.phi_.emplace(k, s * v);
    return r;
  }

  // Substitutes rational values for the phi symbols present in `assign`
  // (keys with t < l); symbols not in the map are kept.
  ExpForm substituted(const std::map<std::pair<int, int>, Rational>& assign) const {
    ExpForm r;
    r.one_ = one_;
    for (const auto& [k, v] : phi_) {
      auto it = assign.find(k);
      if (it == assign.end())
        r.phi_.emplace(k, v);
      else
        r.one_ += v * it->second;
    }
    return r;
  }

  bool operator==(const ExpForm& o) const { return one_ == o.one_ && phi_ == o.phi_; }
  bool operator!=(const ExpForm& o) const { return !(*this == o); }
  bool operator<(const ExpForm& o) const {
    if (int c = cmp(one_, o.one_); c != 0) return c < 0;
    return phi_ < o.phi_;
  }

  std::string to_string() const;
  size_t hash() const;

 private:
  Rational one_;
  std::map<std::pair<int, int>, Rational> phi_;
};

/// Exact element of the coefficient ring: a finite rational combination of
/// monomials q^lambda with lambda an ExpForm.  Canonical form stores no zero
/// coefficients; the unit is 1 * q^0.
class LaurentCoefficient {
 public:
  LaurentCoefficient() = default;

  static LaurentCoefficient zero() { return {}; }
  static LaurentCoefficient one() { return from_rational(Rational(1)); }
  static LaurentCoefficient from_rational(const Rational& r) {
    LaurentCoefficient c;
    c.add_term(ExpForm(), r);
    return c;
  }
  static LaurentCoefficient q_power(ExpForm e, const Rational& coeff = Rational(1)) {
    LaurentCoefficient c;
    c.add_term(std::move(e), coeff);
    return c;
  }
  static LaurentCoefficient q_int(long e) { return q_power(ExpForm(Rational(e))); }

  const std::map<ExpForm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second == 1;
  }

  void add_term(ExpForm e, const Rational& r) {
    if (r == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), r);
    } else {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentCoefficient& operator+=(const LaurentCoefficient& o) {
    for (const auto& [e, r] : o.terms_) add_term(e, r);
    return *this;
  }
  LaurentCoefficient& operator-=(const LaurentCoefficient& o) {
    for (const auto& [e, r] : o.terms_) add_term(e, -r);
    return *this;
  }
  friend LaurentCoefficient operator+(LaurentCoefficient a, const LaurentCoefficient& b) {
    return a += b;
  }
  friend LaurentCoefficient operator-(LaurentCoefficient a, const LaurentCoefficient& b) {
    return a -= b;
  }
  friend LaurentCoefficient operator-(const LaurentCoefficient& a) {
    LaurentCoefficient r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  // Exponent-additive product.
  friend LaurentCoefficient operator*(const LaurentCoefficient& a,
                                      const LaurentCoefficient& b) {
    LaurentCoefficient r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentCoefficient& operator*=(const LaurentCoefficient& o) {
    *this = *this * o;
    return *this;
  }
  friend LaurentCoefficient operator*(const Rational& s, const LaurentCoefficient& a) {
    LaurentCoefficient r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  bool operator==(const LaurentCoefficient& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentCoefficient& o) const { return !(*this == o); }
  bool operator<(const LaurentCoefficient& o) const { return terms_ < o.terms_; }

  /// Substitutes phi symbols; with `q_to_one` every monomial collapses to 1
  /// and the rational parts are summed.
  LaurentCoefficient specialized(const std::map<std::pair<int, int>, Rational>& assign,
                                 bool q_to_one = false) const {
    LaurentCoefficient r;
    for (const auto& [e, c] : terms_)
      r.add_term(q_to_one ? ExpForm() : e.substituted(assign), c);
    return r;
  }

  /// Value at q = 1 (every monomial becomes 1 regardless of remaining symbols).
  Rational value_at_q1() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool has_phi() const {
    for (const auto& [e, c] : terms_)
      if (!e.is_constant()) return true;
    return false;
  }

  /// d/dq at q = 1, with q^r differentiating to r there.  Rejects symbolic
  /// phi exponents: specialize first.
  Rational q_derivative_at_1() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      if (!e.is_constant())
        throw std::invalid_argument("q_derivative_at_1: phi symbol present");
      s += c * e.one();
    }
    return s;
  }

  std::string to_string() const;
  size_t hash() const;

 private:
  std::map<ExpForm, Rational> terms_;
};

// Named entry points for the ring operations.
inline LaurentCoefficient cf_mul(const LaurentCoefficient& a, const LaurentCoefficient& b) {
  return a * b;
}
inline LaurentCoefficient cf_specialize(
    const LaurentCoefficient& a, const std::map<std::pair<int, int>, Rational>& assign,
    bool q_to_one = false) {
  return a.specialized(assign, q_to_one);
}
inline Rational cf_q_derivative_at_1(const LaurentCoefficient& a) {
  return a.q_derivative_at_1();
}

// Parses the textual coefficient grammar (see docs/grammar in README):
//   coeff   := term (('+'|'-') term)*
//   term    := rational | rational '*' mono | mono
//   mono    := 'q^(' linform ')' | 'q^' rational
//   linform := lin (('+'|'-') lin)*
//   lin     := rational | rational '*'? 'phi[t,l]' | 'phi[t,l]'
LaurentCoefficient cf_parse(const std::string& text);
ExpForm expform_parse(const std::string& text);

}  // namespace qsuper
