#include "qsuper/supercore.hpp"

#include <cctype>
#include <sstream>

namespace qsuper {

int parity_of(const FGen& g, const ParityDatum& d) { return d.pij(g.row, g.col); }

int parity_of(const UGen& g, const ParityDatum& d) {
  switch (g.kind) {
    case UGen::Kind::E:
    case UGen::Kind::F:
      d.check_node(g.index);
      return d.pij(g.index, g.index + 1);
    case UGen::Kind::Gamma:
      d.check_index(g.index);
      return 0;
    case UGen::Kind::Toral:
      if (static_cast<int>(g.c.size()) != d.n())
        throw std::invalid_argument("toral coordinate vector has wrong length");
      return 0;
  }
  return 0;
}

std::string to_string(const FGen& g) {
  return "x[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

std::string to_string(const UGen& g) {
  switch (g.kind) {
    case UGen::Kind::E:
      return "E[" + std::to_string(g.index) + "]";
    case UGen::Kind::F:
      return "F[" + std::to_string(g.index) + "]";
    case UGen::Kind::Gamma:
      return "G[" + std::to_string(g.index) + "]";
    case UGen::Kind::Toral: {
      std::string s = "T(";
      for (size_t i = 0; i < g.c.size(); ++i) {
        if (i) s += ",";
        s += g.c[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

// Splits "a,b,c" at top-level commas (commas inside [] or () don't count).
std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct WordScanner {
  const std::string& s;
  const ParityDatum& d;
  size_t pos = 0;

  WordScanner(const std::string& str, const ParityDatum& datum) : s(str), d(datum) {}

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

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg + " at position " + std::to_string(pos) + " in: " + s);
  }

  int bracket_int(char close) {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    int v = std::stoi(s.substr(start, pos - start));
    skip_ws();
    if (pos >= s.size() || (s[pos] != close && s[pos] != ',')) fail("expected delimiter");
    return v;
  }

  // Scans one generator token starting at `pos`, or returns false at a
  // non-token character.
  template <class Gen>
  bool next_gen(Gen& out);
};

template <>
bool WordScanner::next_gen<FGen>(FGen& out) {
  skip_ws();
  if (pos >= s.size() || s[pos] != 'x') return false;
  ++pos;
  if (pos >= s.size() || s[pos] != '[') fail("expected '[' after x");
  ++pos;
  int i = bracket_int(',');
  if (s[pos] != ',') fail("expected ','");
  ++pos;
  int j = bracket_int(']');
  if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
  ++pos;
  d.check_index(i);
  d.check_index(j);
  out = FGen{i, j};
  return true;
}

template <>
bool WordScanner::next_gen<UGen>(UGen& out) {
  skip_ws();
  if (pos >= s.size()) return false;
  char c = s[pos];
  if (c == 'E' || c == 'F' || c == 'G') {
    ++pos;
    if (pos >= s.size() || s[pos] != '[') fail("expected '['");
    ++pos;
    int i = bracket_int(']');
    if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
    ++pos;
    if (c == 'G') {
      d.check_index(i);
      out = UGen::gamma(i);
    } else {
      d.check_node(i);
      out = c == 'E' ? UGen::e(i) : UGen::f(i);
    }
    return true;
  }
  if (c == 'T') {
    ++pos;
    if (pos >= s.size() || s[pos] != '(') fail("expected '(' after T");
    size_t start = ++pos;
    int depth = 1;
    while (pos < s.size() && depth > 0) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) fail("unbalanced parentheses in T(...)");
    std::string inner = s.substr(start, pos - 1 - start);
    auto parts = split_top_commas(inner);
    if (static_cast<int>(parts.size()) != d.n())
      fail("T(...) needs exactly n = " + std::to_string(d.n()) + " entries");
    std::vector<ExpForm> coords;
    for (auto& p : parts) {
      std::string trimmed = p;
      size_t a = trimmed.find_first_not_of(" \t");
      size_t b = trimmed.find_last_not_of(" \t");
      trimmed = a == std::string::npos ? "0" : trimmed.substr(a, b - a + 1);
      coords.push_back(trimmed == "0" ? ExpForm() : expform_parse(trimmed));
    }
    out = UGen::toral(std::move(coords));
    return true;
  }
  return false;
}

template <class Gen>
Word<Gen> parse_word(WordScanner& sc) {
  Word<Gen> w;
  // "1" denotes the empty word
  sc.skip_ws();
  if (sc.pos < sc.s.size() && sc.s[sc.pos] == '1' &&
      (sc.pos + 1 >= sc.s.size() || !isdigit(static_cast<unsigned char>(sc.s[sc.pos + 1])))) {
    ++sc.pos;
    return w;
  }
  Gen g;
  while (sc.next_gen<Gen>(g)) {
    if constexpr (std::is_same_v<Gen, UGen>) {
      if (g.toral_is_unit()) continue;  // Toral(0) is the unit
    }
    w.push_back(g);
  }
  return w;
}

// element := ['-'] term (('+'|'-') term)* ; term := [coeff '*'] word
// coeff   := '(' coefficient ')' | coefficient-atom
template <class Gen>
Element<Gen> parse_element(const std::string& text, const ParityDatum& d) {
  WordScanner sc(text, d);
  Element<Gen> result;
  bool neg = false;
  sc.skip_ws();
  if (sc.peek() == '-') {
    neg = true;
    ++sc.pos;
  } else if (sc.peek() == '+') {
    ++sc.pos;
  }
  while (true) {
    LaurentCoefficient coeff = LaurentCoefficient::one();
    bool have_coeff = false;
    sc.skip_ws();
    if (sc.peek() == '(') {
      // parenthesised coefficient
      size_t start = ++sc.pos;
      int depth = 1;
      while (sc.pos < sc.s.size() && depth > 0) {
        if (sc.s[sc.pos] == '(') ++depth;
        if (sc.s[sc.pos] == ')') --depth;
        ++sc.pos;
      }
      if (depth != 0) sc.fail("unbalanced coefficient parentheses");
      coeff = cf_parse(sc.s.substr(start, sc.pos - 1 - start));
      have_coeff = true;
    } else if (isdigit(static_cast<unsigned char>(sc.peek())) || sc.peek() == 'q') {
      // scan one unparenthesised coefficient atom: rational ['*'] [q-mono] | q-mono
      size_t start = sc.pos;
      auto scan_rational = [&] {
        while (sc.pos < sc.s.size() &&
               (isdigit(static_cast<unsigned char>(sc.s[sc.pos])) || sc.s[sc.pos] == '/'))
          ++sc.pos;
      };
      auto scan_q_mono = [&] {
        sc.pos += 2;  // "q^"
        if (sc.pos < sc.s.size() && sc.s[sc.pos] == '(') {
          int depth = 1;
          ++sc.pos;
          while (sc.pos < sc.s.size() && depth > 0) {
            if (sc.s[sc.pos] == '(') ++depth;
            if (sc.s[sc.pos] == ')') --depth;
            ++sc.pos;
          }
        } else {
          if (sc.pos < sc.s.size() && (sc.s[sc.pos] == '+' || sc.s[sc.pos] == '-'))
            ++sc.pos;
          scan_rational();
        }
      };
      if (sc.s[sc.pos] == 'q') {
        scan_q_mono();
      } else {
        scan_rational();
        size_t save = sc.pos;
        sc.skip_ws();
        if (sc.pos < sc.s.size() && sc.s[sc.pos] == '*') {
          size_t star = sc.pos;
          ++sc.pos;
          sc.skip_ws();
          if (sc.pos + 1 < sc.s.size() && sc.s[sc.pos] == 'q' && sc.s[sc.pos + 1] == '^')
            scan_q_mono();
          else
            sc.pos = star;  // the '*' separates coefficient from word
        } else {
          sc.pos = save;
        }
      }
      std::string atom = sc.s.substr(start, sc.pos - start);
      // bare "1" may be the unit word, not a coefficient
      size_t a = atom.find_first_not_of(" \t");
      size_t b = atom.find_last_not_of(" \t");
      std::string trimmed = a == std::string::npos ? "" : atom.substr(a, b - a + 1);
      sc.skip_ws();
      bool followed_by_word =
          sc.pos < sc.s.size() &&
          (sc.s[sc.pos] == '*' || sc.s[sc.pos] == 'x' || sc.s[sc.pos] == 'E' ||
           sc.s[sc.pos] == 'F' || sc.s[sc.pos] == 'G' || sc.s[sc.pos] == 'T');
      if (trimmed == "1" && !followed_by_word) {
        // unit word with coefficient 1
        result.add({}, neg ? -LaurentCoefficient::one() : LaurentCoefficient::one());
        sc.skip_ws();
        if (sc.eof()) break;
        if (sc.peek() == '+') {
          neg = false;
          ++sc.pos;
          continue;
        }
        if (sc.peek() == '-') {
          neg = true;
          ++sc.pos;
          continue;
        }
        sc.fail("expected '+' or '-'");
      }
      coeff = cf_parse(trimmed);
      have_coeff = true;
    }
    bool starred = false;
    if (have_coeff) {
      sc.skip_ws();
      if (sc.peek() == '*') {
        ++sc.pos;
        starred = true;
      }
      sc.skip_ws();
      if (!starred && (sc.eof() || sc.peek() == '+' || sc.peek() == '-')) {
        // pure scalar term (empty word)
        result.add({}, neg ? -coeff : coeff);
        if (sc.eof()) break;
        neg = sc.peek() == '-';
        ++sc.pos;
        continue;
      }
    }
    size_t before_word = sc.pos;
    Word<Gen> w = parse_word<Gen>(sc);
    if (sc.pos == before_word) sc.fail("expected a word");
    result.add(std::move(w), neg ? -coeff : coeff);
    sc.skip_ws();
    if (sc.eof()) break;
    if (sc.peek() == '+') {
      neg = false;
      ++sc.pos;
    } else if (sc.peek() == '-') {
      neg = true;
      ++sc.pos;
    } else {
      sc.fail("expected '+' or '-' between terms");
    }
  }
  return result;
}

}  // namespace

FElement f_element_parse(const std::string& text, const ParityDatum& d) {
  return parse_element<FGen>(text, d);
}
UElement u_element_parse(const std::string& text, const ParityDatum& d) {
  return parse_element<UGen>(text, d);
}

FWord f_word_parse(const std::string& text, const ParityDatum& d) {
  WordScanner sc(text, d);
  FWord w = parse_word<FGen>(sc);
  if (!sc.eof()) sc.fail("trailing input in word");
  return w;
}

UWord u_word_parse(const std::string& text, const ParityDatum& d) {
  WordScanner sc(text, d);
  UWord w = parse_word<UGen>(sc);
  if (!sc.eof()) sc.fail("trailing input in word");
  return w;
}

}  // namespace qsuper
