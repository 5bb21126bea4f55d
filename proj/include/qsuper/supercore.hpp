#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/coeffring.hpp"

namespace qsuper {

/// Rank n >= 2 and a parity function p : {1..n} -> Z2.  All super-signs derive
/// from p_{ij} := p(i) + p(j) mod 2.
class ParityDatum {
 public:
  ParityDatum(int n, std::vector<int> p) : n_(n), p_(std::move(p)) {
    if (n_ < 2) throw std::invalid_argument("rank must be >= 2");
    if (static_cast<int>(p_.size()) != n_)
      throw std::invalid_argument("parity vector length must equal n");
    for (int b : p_)
      if (b != 0 && b != 1) throw std::invalid_argument("parity entries must be 0 or 1");
  }

  // Parity bitstring, e.g. "01" for n = 2.
  static ParityDatum from_bits(int n, const std::string& bits) {
    std::vector<int> p;
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("parity bits must be 0/1");
      p.push_back(c - '0');
    }
    return ParityDatum(n, std::move(p));
  }

  int n() const { return n_; }
  int p(int i) const {
    check_index(i);
    return p_[i - 1];
  }
  int pij(int i, int j) const { return (p(i) + p(j)) & 1; }
  // (-1)^{p(i)}
  int sign(int i) const { return p(i) ? -1 : 1; }
  // Dynkin vertex i is grey iff p_{i,i+1} = 1.
  bool grey(int i) const { return pij(i, i + 1) == 1; }

  void check_index(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("index out of range: " + std::to_string(i));
  }
  void check_node(int i) const {
    if (i < 1 || i > n_ - 1)
      throw std::out_of_range("node index out of range: " + std::to_string(i));
  }

  std::string bits() const {
    std::string s;
    for (int b : p_) s += static_cast<char>('0' + b);
    return s;
  }

  bool operator==(const ParityDatum& o) const { return n_ == o.n_ && p_ == o.p_; }

 private:
  int n_;
  std::vector<int> p_;
};

/// Matrix-coefficient generator x_{ij}; parity p_{ij}.
struct FGen {
  int row = 0;
  int col = 0;
  friend bool operator==(const FGen& a, const FGen& b) {
    return a.row == b.row && a.col == b.col;
  }
  // Row-major lexicographic order on (i,j): this is the fixed PBW total order.
  friend bool operator<(const FGen& a, const FGen& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

/// Enveloping-side letters: E_i, F_i (i in 1..n-1), Gamma_k (k in 1..n), and
/// group-like toral exponentials Toral(c) = e^{hbar sum c_k Gamma_k} with c a
/// vector of ExpForm entries of length n.
struct UGen {
  enum class Kind { E, F, Gamma, Toral };
  Kind kind = Kind::E;
  int index = 0;             // E/F/Gamma only
  std::vector<ExpForm> c;    // Toral only, length n

  static UGen e(int i) { return UGen{Kind::E, i, {}}; }
  static UGen f(int i) { return UGen{Kind::F, i, {}}; }
  static UGen gamma(int k) { return UGen{Kind::Gamma, k, {}}; }
  static UGen toral(std::vector<ExpForm> coords) {
    return UGen{Kind::Toral, 0, std::move(coords)};
  }

  bool toral_is_unit() const {
    if (kind != Kind::Toral) return false;
    for (const auto& e : c)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const UGen& a, const UGen& b) {
    return a.kind == b.kind && a.index == b.index && a.c == b.c;
  }
  friend bool operator<(const UGen& a, const UGen& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return a.c < b.c;
  }
};

template <class Gen>
using Word = std::vector<Gen>;

using FWord = Word<FGen>;
using UWord = Word<UGen>;

int parity_of(const FGen& g, const ParityDatum& d);
int parity_of(const UGen& g, const ParityDatum& d);

template <class Gen>
int parity_of(const Word<Gen>& w, const ParityDatum& d) {
  int p = 0;
  for (const auto& g : w) p ^= parity_of(g, d);
  return p;
}

/// Finite linear combination of words with LaurentCoefficient coefficients.
/// No zero coefficients are stored.  Monomials are individually
/// parity-homogeneous; an element may mix parities across monomials.
template <class Gen>
class Element {
 public:
  using WordT = Word<Gen>;
  using Terms = std::map<WordT, LaurentCoefficient>;

  Element() = default;
  static Element zero() { return {}; }
  static Element unit() { return monomial({}, LaurentCoefficient::one()); }
  static Element monomial(WordT w, LaurentCoefficient c = LaurentCoefficient::one()) {
    Element e;
    e.add(std::move(w), std::move(c));
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(WordT w, const LaurentCoefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const LaurentCoefficient& s, const Element& a) {
    Element r;
    for (const auto& [w, c] : a.terms()) r.add(w, s * c);
    return r;
  }
  // Free (concatenation) product; no rewriting.
  friend Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) {
        WordT w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(std::move(w), ca * cb);
      }
    return r;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Parity if every monomial has the same one; throws otherwise.
  int homogeneous_parity(const ParityDatum& d) const {
    if (terms_.empty()) return 0;
    int p = parity_of(terms_.begin()->first, d);
    for (const auto& [w, c] : terms_)
      if (parity_of(w, d) != p)
        throw std::invalid_argument("element is not parity-homogeneous");
    return p;
  }

 private:
  Terms terms_;
};

using FElement = Element<FGen>;
using UElement = Element<UGen>;

/// Linear combination of pairs of words; multiplication carries the Koszul
/// sign (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
template <class Gen>
class TensorElement {
 public:
  using WordT = Word<Gen>;
  using Key = std::pair<WordT, WordT>;
  using Terms = std::map<Key, LaurentCoefficient>;

  TensorElement() = default;
  static TensorElement unit() {
    TensorElement t;
    t.add({}, {}, LaurentCoefficient::one());
    return t;
  }
  static TensorElement of(const Element<Gen>& a, const Element<Gen>& b) {
    TensorElement t;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, ca * cb);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(WordT left, WordT right, const LaurentCoefficient& c) {
    if (c.is_zero()) return;
    Key k{std::move(left), std::move(right)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

using FTensor = TensorElement<FGen>;
using UTensor = TensorElement<UGen>;

template <class Gen>
TensorElement<Gen> tensor_multiply(const TensorElement<Gen>& a, const TensorElement<Gen>& b,
                                   const ParityDatum& d) {
  TensorElement<Gen> r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      int sign = (parity_of(ka.second, d) * parity_of(kb.first, d)) & 1;
      Word<Gen> left = ka.first;
      left.insert(left.end(), kb.first.begin(), kb.first.end());
      Word<Gen> right = ka.second;
      right.insert(right.end(), kb.second.begin(), kb.second.end());
      LaurentCoefficient c = ca * cb;
      r.add(std::move(left), std::move(right), sign ? -c : c);
    }
  return r;
}

// ---- text grammar -----------------------------------------------------
//
// Words are whitespace-separated tokens x[i,j], E[i], F[i], G[k],
// T(c1,...,cn); elements are +/- joined terms `coeff * word`, with `1` for
// the empty word and parentheses around multi-term coefficients.

std::string to_string(const FGen& g);
std::string to_string(const UGen& g);
template <class Gen>
std::string to_string(const Word<Gen>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}
template <class Gen>
std::string to_string(const Element<Gen>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    std::string cs = c.to_string();
    bool negated = false;
    if (!first) {
      if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
          cs.find(" - ") == std::string::npos) {
        s += " - ";
        cs = cs.substr(1);
        negated = true;
      } else {
        s += " + ";
      }
    }
    (void)negated;
    first = false;
    if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
      cs = "(" + cs + ")";
    s += cs + " * " + to_string(w);
  }
  return s;
}
template <class Gen>
std::string to_string(const TensorElement<Gen>& t) {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    std::string cs = c.to_string();
    bool multi_term =
        cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    if (!first) {
      if (!multi_term && cs.size() > 1 && cs[0] == '-') {
        s += " - ";
        cs = cs.substr(1);
      } else {
        s += " + ";
      }
    }
    first = false;
    if (multi_term) cs = "(" + cs + ")";
    s += cs + " * (" + to_string(k.first) + ") (x) (" + to_string(k.second) + ")";
  }
  return s;
}

FElement f_element_parse(const std::string& text, const ParityDatum& d);
UElement u_element_parse(const std::string& text, const ParityDatum& d);
FWord f_word_parse(const std::string& text, const ParityDatum& d);
UWord u_word_parse(const std::string& text, const ParityDatum& d);

}  // namespace qsuper
