#include "qsuper/coeffring.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace qsuper {

namespace {

size_t hash_combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_rational(const Rational& r) {
  // Hash quality only; equality is exact elsewhere.
  return std::hash<double>{}(r.get_d());
}

}  // namespace

size_t ExpForm::hash() const {
  size_t h = hash_rational(one_);
  for (const auto& [k, v] : phi_) {
    h = hash_combine(h, static_cast<size_t>(k.first * 131 + k.second));
    h = hash_combine(h, hash_rational(v));
  }
  return h;
}

size_t LaurentCoefficient::hash() const {
  size_t h = 0xabcdef01;
  for (const auto& [e, c] : terms_) {
    h = hash_combine(h, e.hash());
    h = hash_combine(h, hash_rational(c));
  }
  return h;
}

std::string ExpForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (one_ != 0) {
    os << rat_str(one_);
    first = false;
  }
  for (const auto& [k, v] : phi_) {
    Rational a = v;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << rat_str(a) << "*";
    os << "phi[" << k.first << "," << k.second << "]";
  }
  return os.str();
}

std::string LaurentCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (e.is_zero()) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      if (e.is_constant() && rat_is_integer(e.one()))
        os << "q^" << rat_str(e.one());
      else
        os << "q^(" << e.to_string() << ")";
    }
  }
  return os.str();
}

namespace {

// Tiny recursive-descent scanner shared by the coefficient grammar.
struct Scanner {
  const std::string& s;
  size_t pos = 0;

  explicit Scanner(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_str(const std::string& t) {
    skip_ws();
    if (s.compare(pos, t.size(), t) == 0) {
      pos += t.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                  std::to_string(pos) + " in: " + s);
  }
  Rational rational() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("expected number in: " + s);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t d2 = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == d2) throw std::invalid_argument("expected denominator in: " + s);
    }
    return rat_parse(s.substr(start, pos - start));
  }
  int integer() {
    Rational r = rational();
    if (!rat_is_integer(r)) throw std::invalid_argument("expected integer in: " + s);
    return static_cast<int>(r.get_num().get_si());
  }

  // lin := [rational ['*']] 'phi[t,l]' | rational   (sign handled by caller)
  ExpForm lin_term(bool negate) {
    skip_ws();
    Rational coeff(negate ? -1 : 1);
    bool have_coeff = false;
    if (isdigit(static_cast<unsigned char>(peek()))) {
      coeff = (negate ? Rational(-1) : Rational(1)) * rational();
      have_coeff = true;
      consume('*');
    }
    if (consume_str("phi[")) {
      int t = integer();
      expect(',');
      int l = integer();
      expect(']');
      ExpForm e;
      e.add_phi(t, l, coeff);
      return e;
    }
    if (!have_coeff) throw std::invalid_argument("expected linear term in: " + s);
    return ExpForm(coeff);
  }

  ExpForm linform() {
    bool neg = consume('-');
    if (!neg) consume('+');
    ExpForm e = lin_term(neg);
    while (true) {
      skip_ws();
      if (peek() == '+') {
        consume('+');
        e += lin_term(false);
      } else if (peek() == '-') {
        consume('-');
        e += lin_term(true);
      } else {
        break;
      }
    }
    return e;
  }

  // mono := 'q^(' linform ')' | 'q^' rational
  ExpForm q_mono() {
    if (!consume_str("q^")) throw std::invalid_argument("expected q^ in: " + s);
    if (consume('(')) {
      ExpForm e = linform();
      expect(')');
      return e;
    }
    return ExpForm(rational());
  }

  LaurentCoefficient coeff_term(bool negate) {
    skip_ws();
    Rational c(1);
    ExpForm e;
    bool have_any = false;
    if (peek() == 'q') {
      e = q_mono();
      have_any = true;
    } else {
      c = rational();
      have_any = true;
      size_t save = pos;
      if (consume('*')) {
        skip_ws();
        if (peek() == 'q') {
          e = q_mono();
        } else {
          pos = save;  // the '*' belongs to an element-level production
        }
      }
    }
    if (!have_any) throw std::invalid_argument("expected coefficient term in: " + s);
    if (negate) c = -c;
    return LaurentCoefficient::q_power(e, c);
  }

  LaurentCoefficient coefficient() {
    bool neg = false;
    if (consume('-'))
      neg = true;
    else
      consume('+');
    LaurentCoefficient r = coeff_term(neg);
    while (true) {
      skip_ws();
      if (peek() == '+') {
        consume('+');
        r += coeff_term(false);
      } else if (peek() == '-') {
        consume('-');
        r += coeff_term(true);
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

LaurentCoefficient cf_parse(const std::string& text) {
  Scanner sc(text);
  LaurentCoefficient r = sc.coefficient();
  if (!sc.eof())
    throw std::invalid_argument("trailing input in coefficient: " + text);
  return r;
}

ExpForm expform_parse(const std::string& text) {
  Scanner sc(text);
  ExpForm e = sc.linform();
  if (!sc.eof()) throw std::invalid_argument("trailing input in exponent form: " + text);
  return e;
}

}  // namespace qsuper
