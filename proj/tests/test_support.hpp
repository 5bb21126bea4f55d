#pragma once

#include <random>

#include "qsuper/falg.hpp"
#include "qsuper/supercore.hpp"

namespace qsuper::test {

// Deterministic generators for property-style tests.
class Rng {
 public:
  explicit Rng(unsigned seed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  Rational rational(int lo = -4, int hi = 4) { return rat(uniform(lo, hi), uniform(1, 3)); }

  ExpForm expform(int n) {
    ExpForm e(rational());
    if (n >= 2 && uniform(0, 1)) {
      int t = uniform(1, n - 1);
      int l = uniform(t + 1, n);
      e.add_phi(t, l, rational());
    }
    return e;
  }

  LaurentCoefficient coeff(int n, int max_terms = 3) {
    LaurentCoefficient c;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) c.add_term(expform(n), rational());
    return c;
  }

  FWord f_word(int n, int max_len) {
    FWord w;
    int len = uniform(0, max_len);
    for (int s = 0; s < len; ++s) w.push_back(FGen{uniform(1, n), uniform(1, n)});
    return w;
  }

  FElement f_element(int n, int max_len, int max_terms = 3) {
    FElement e;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) e.add(f_word(n, max_len), coeff(0, 2));
    return e;
  }

  UWord u_word(const ParityDatum& d, int max_len, bool with_torals = true) {
    UWord w;
    int len = uniform(0, max_len);
    for (int s = 0; s < len; ++s) {
      int kind = uniform(0, with_torals ? 3 : 2);
      switch (kind) {
        case 0:
          w.push_back(UGen::e(uniform(1, d.n() - 1)));
          break;
        case 1:
          w.push_back(UGen::f(uniform(1, d.n() - 1)));
          break;
        case 2:
          w.push_back(UGen::gamma(uniform(1, d.n())));
          break;
        default: {
          std::vector<ExpForm> c(d.n());
          for (int i = 0; i < d.n(); ++i) c[i] = ExpForm(Rational(uniform(-1, 1)));
          UGen g = UGen::toral(std::move(c));
          if (!g.toral_is_unit()) w.push_back(std::move(g));
          break;
        }
      }
    }
    return w;
  }

 private:
  std::mt19937 eng_;
};

inline std::vector<ParityDatum> all_parities(int n) {
  std::vector<ParityDatum> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
    out.emplace_back(n, std::move(p));
  }
  return out;
}

}  // namespace qsuper::test
