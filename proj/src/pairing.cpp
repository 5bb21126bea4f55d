#include "qsuper/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

namespace qsuper {

namespace {

size_t hash_combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_fword(const FWord& w) {
  size_t h = 0x51ab;
  for (const auto& g : w) h = hash_combine(h, static_cast<size_t>(g.row * 131 + g.col));
  return h;
}

size_t hash_uword(const UWord& w) {
  size_t h = 0xa5;
  for (const auto& g : w) {
    h = hash_combine(h, static_cast<size_t>(static_cast<int>(g.kind) * 1009 + g.index));
    for (const auto& e : g.c) h = hash_combine(h, e.hash());
  }
  return h;
}

// ZZ^n weight: x_{ij} -> e_i - e_j, E_t -> alpha_t, F_t -> -alpha_t,
// Gamma/Toral -> 0.  The pairing vanishes unless the weights agree.
std::vector<int> f_weight(const FWord& w, int n) {
  std::vector<int> wt(n, 0);
  for (const auto& g : w) {
    ++wt[g.row - 1];
    --wt[g.col - 1];
  }
  return wt;
}

std::vector<int> u_weight(const UWord& w, int n) {
  std::vector<int> wt(n, 0);
  for (const auto& g : w) {
    if (g.kind == UGen::Kind::E) {
      ++wt[g.index - 1];
      --wt[g.index];
    } else if (g.kind == UGen::Kind::F) {
      --wt[g.index - 1];
      ++wt[g.index];
    }
  }
  return wt;
}

int env_threads() {
  if (const char* v = std::getenv("QSUPER_THREADS")) {
    int t = std::atoi(v);
    if (t >= 1) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

// Runs fn(case_index, worker_index) over [0, count) on up to QSUPER_THREADS
// workers; case order inside a worker is ascending, results must be stored
// by case index for determinism.
void parallel_cases(long count, int workers,
                    const std::function<void(long, int)>& fn) {
  if (workers <= 1 || count < 2) {
    for (long i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      while (true) {
        long i = next.fetch_add(1);
        if (i >= count) break;
        fn(i, t);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

size_t Pairing::WordPairHash::operator()(const std::pair<FWord, UWord>& k) const {
  return hash_combine(hash_fword(k.first), hash_uword(k.second));
}
size_t Pairing::UWordHash::operator()(const UWord& w) const { return hash_uword(w); }

Pairing::Pairing(ParityDatum datum, UMode mode, std::optional<TwistData> twist)
    : datum_(std::move(datum)), mode_(mode), twist_(std::move(twist)), ualg_(datum_) {
  if (mode_ == UMode::Twisted && !twist_)
    throw std::invalid_argument("twisted pairing requires twist data");
}

const UTensor& Pairing::u_coproduct_cached(const UWord& w) const {
  auto it = cop_memo_.find(w);
  if (it != cop_memo_.end()) return it->second;
  UTensor t = ualg_.coproduct(w, mode_, twist_ ? &*twist_ : nullptr);
  return cop_memo_.emplace(w, std::move(t)).first->second;
}

LaurentCoefficient Pairing::pair_words(const FWord& f, const UWord& u) const {
  if (f_weight(f, datum_.n()) != u_weight(u, datum_.n()))
    return LaurentCoefficient::zero();
  auto key = std::make_pair(f, u);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  LaurentCoefficient v = pair_uncached(f, u);
  memo_.emplace(std::move(key), v);
  return v;
}

LaurentCoefficient Pairing::pair_uncached(const FWord& f, const UWord& u) const {
  const int n = datum_.n();
  // <1, u> = epsilon(u)
  if (f.empty()) return ualg_.counit(UElement::monomial(u));
  if (f.size() == 1) {
    const int i = f[0].row, j = f[0].col;
    datum_.check_index(i);
    datum_.check_index(j);
    // <x_{ij}, 1> = delta_{ij}
    if (u.empty())
      return i == j ? LaurentCoefficient::one() : LaurentCoefficient::zero();
    if (u.size() == 1) {
      const UGen& g = u[0];
      switch (g.kind) {
        case UGen::Kind::E:
          return i == g.index && j == g.index + 1 ? LaurentCoefficient::one()
                                                  : LaurentCoefficient::zero();
        case UGen::Kind::F:
          return i == g.index + 1 && j == g.index ? LaurentCoefficient::one()
                                                  : LaurentCoefficient::zero();
        case UGen::Kind::Gamma:
          return i == g.index && j == g.index ? LaurentCoefficient::one()
                                              : LaurentCoefficient::zero();
        case UGen::Kind::Toral:
          return i == j ? LaurentCoefficient::q_power(g.c[i - 1])
                        : LaurentCoefficient::zero();
      }
    }
    // <x_{ij}, Y Z> = <Delta(x_{ij}), Y (x) Z>
    //              = sum_a (-1)^{p_{ia} p_{aj}} (-1)^{p_{aj} |Y|} <x_{ia},Y> <x_{aj},Z>
    UWord Y{u[0]};
    UWord Z(u.begin() + 1, u.end());
    int py = parity_of(u[0], datum_);
    LaurentCoefficient acc;
    for (int a = 1; a <= n; ++a) {
      int paj = datum_.pij(a, j);
      int sign = (datum_.pij(i, a) * paj + paj * py) & 1;
      LaurentCoefficient lhs = pair_words({FGen{i, a}}, Y);
      if (lhs.is_zero()) continue;
      LaurentCoefficient rhs = pair_words({FGen{a, j}}, Z);
      if (rhs.is_zero()) continue;
      LaurentCoefficient term = lhs * rhs;
      acc += sign ? -term : term;
    }
    return acc;
  }
  // <f' f'', u> = <f' (x) f'', Delta(u)>
  //            = sum (-1)^{|f''||u_(1)|} <f', u_(1)> <f'', u_(2)>
  FWord head{f[0]};
  FWord tail(f.begin() + 1, f.end());
  int pt = parity_of(tail, datum_);
  const UTensor& du = u_coproduct_cached(u);
  LaurentCoefficient acc;
  for (const auto& [legs, c] : du.terms()) {
    LaurentCoefficient lhs = pair_words(head, legs.first);
    if (lhs.is_zero()) continue;
    LaurentCoefficient rhs = pair_words(tail, legs.second);
    if (rhs.is_zero()) continue;
    int sign = (pt * parity_of(legs.first, datum_)) & 1;
    LaurentCoefficient term = c * lhs * rhs;
    acc += sign ? -term : term;
  }
  return acc;
}

LaurentCoefficient Pairing::pair(const FElement& f, const UElement& u) const {
  LaurentCoefficient acc;
  for (const auto& [fw, fc] : f.terms())
    for (const auto& [uw, uc] : u.terms()) {
      LaurentCoefficient v = pair_words(fw, uw);
      if (!v.is_zero()) acc += fc * uc * v;
    }
  return acc;
}

LaurentCoefficient Pairing::pair_tensor(const FTensor& f, const UTensor& u) const {
  LaurentCoefficient acc;
  for (const auto& [fk, fc] : f.terms())
    for (const auto& [uk, uc] : u.terms()) {
      LaurentCoefficient a = pair_words(fk.first, uk.first);
      if (a.is_zero()) continue;
      LaurentCoefficient b = pair_words(fk.second, uk.second);
      if (b.is_zero()) continue;
      int sign =
          (parity_of(fk.second, datum_) * parity_of(uk.first, datum_)) & 1;
      LaurentCoefficient term = fc * uc * a * b;
      acc += sign ? -term : term;
    }
  return acc;
}

std::vector<JGenerator> ideal_j_generators(const FunctionAlgebra& falg) {
  const ParityDatum& d = falg.datum();
  const int n = d.n();
  const bool multi = falg.mode() == FMode::Multiparam;
  auto q_pow = [](const Rational& r) { return LaurentCoefficient::q_power(ExpForm(r)); };
  auto q_phi = [&](int t, int l, int e) {
    if (!multi) return LaurentCoefficient::one();
    return LaurentCoefficient::q_power(ExpForm::phi(t, l, Rational(e)));
  };
  auto sgn = [](int s) { return s & 1 ? Rational(-1) : Rational(1); };
  auto mono2 = [](int a, int b, int c, int dd) {
    return FElement::monomial({FGen{a, b}, FGen{c, dd}});
  };

  std::vector<JGenerator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (d.pij(i, j) == 1) out.push_back({"square", mono2(i, j, i, j)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        LaurentCoefficient c = sgn(d.pij(i, j) * d.pij(i, k)) *
                               (q_pow(Rational(d.sign(i))) * q_phi(j, k, -1));
        out.push_back({"same-row", mono2(i, j, i, k) - c * mono2(i, k, i, j)});
      }
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int h = i + 1; h <= n; ++h) {
        LaurentCoefficient c = sgn(d.pij(i, j) * d.pij(h, j)) *
                               (q_pow(Rational(d.sign(j))) * q_phi(i, h, 1));
        out.push_back({"same-column", mono2(i, j, h, j) - c * mono2(h, j, i, j)});
      }
  for (int i = 1; i <= n; ++i)
    for (int h = i + 1; h <= n; ++h)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k < j; ++k) {
          LaurentCoefficient c =
              sgn(d.pij(i, j) * d.pij(h, k)) * (q_phi(i, h, 1) * q_phi(j, k, -1));
          out.push_back({"exchange", mono2(i, j, h, k) - c * mono2(h, k, i, j)});
        }
  for (int i = 1; i <= n; ++i)
    for (int h = i + 1; h <= n; ++h)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          LaurentCoefficient c1 =
              sgn(d.pij(i, j) * d.pij(h, k)) * (q_phi(i, h, 1) * q_phi(j, k, -1));
          LaurentCoefficient qi_diff =
              q_pow(Rational(d.sign(i))) - q_pow(Rational(-d.sign(i)));
          LaurentCoefficient c2 =
              sgn(d.pij(i, j) * d.pij(i, k)) * (qi_diff * q_phi(j, k, -1));
          out.push_back({"exchange-correction", mono2(i, j, h, k) - c1 * mono2(h, k, i, j) -
                                                    c2 * mono2(i, k, h, j)});
        }
  return out;
}

std::vector<UWord> enumerate_u_words(const ParityDatum& datum, int max_len,
                                     bool with_torals) {
  const int n = datum.n();
  std::vector<UGen> alphabet;
  for (int i = 1; i <= n - 1; ++i) alphabet.push_back(UGen::e(i));
  for (int i = 1; i <= n - 1; ++i) alphabet.push_back(UGen::f(i));
  for (int k = 1; k <= n; ++k) alphabet.push_back(UGen::gamma(k));
  if (with_torals) {
    EnvelopingAlgebra ua(datum);
    for (int k = 1; k <= n; ++k)
      for (int s : {1, -1}) alphabet.push_back(ua.L(k, s));
  }
  std::vector<UWord> words{{}};
  std::vector<UWord> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<UWord> next;
    next.reserve(frontier.size() * alphabet.size());
    for (const auto& w : frontier)
      for (const auto& g : alphabet) {
        UWord nw = w;
        nw.push_back(g);
        next.push_back(std::move(nw));
      }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

Report verify_R_orthogonal(const ParityDatum& datum, IdealForm form, int depth,
                           UMode mode, std::optional<TwistData> twist) {
  EnvelopingAlgebra ualg(datum);
  FunctionAlgebra falg(datum, FMode::Uniparam);
  auto gens = ualg.ideal_generators(form);
  auto basis = falg.pbw_basis_upto(depth);

  Report rep;
  rep.suite = "r-orth";
  rep.n = datum.n();
  rep.parity = datum.bits();
  rep.mode = mode == UMode::Twisted ? "twisted" : "standard";

  long count = static_cast<long>(basis.size());
  int workers = env_threads();
  std::vector<std::vector<Failure>> fails(count);
  std::vector<Pairing> ctx;
  for (int t = 0; t < workers; ++t) ctx.emplace_back(datum, mode, twist);

  parallel_cases(count, workers, [&](long bi, int worker) {
    const FWord bw = basis[bi].word(datum.n());
    FElement b = FElement::monomial(bw);
    for (const auto& g : gens) {
      LaurentCoefficient v = ctx[worker].pair(b, g.element);
      if (!v.is_zero())
        fails[bi].push_back({to_string(bw), g.family, v.to_string()});
    }
  });

  rep.cases_total = count * static_cast<long>(gens.size());
  for (const auto& fs : fails)
    for (const auto& f : fs) {
      ++rep.cases_failed;
      if (rep.failures.size() < 64) rep.failures.push_back(f);
    }
  return rep;
}

Report verify_J_orthogonal(const ParityDatum& datum, UMode mode, int depth,
                           std::optional<TwistData> twist) {
  FunctionAlgebra falg(datum,
                       mode == UMode::Twisted ? FMode::Multiparam : FMode::Uniparam);
  auto gens = ideal_j_generators(falg);
  auto words = enumerate_u_words(datum, depth, /*with_torals=*/true);

  Report rep;
  rep.suite = "j-orth";
  rep.n = datum.n();
  rep.parity = datum.bits();
  rep.mode = mode == UMode::Twisted ? "twisted" : "standard";

  long count = static_cast<long>(gens.size());
  int workers = env_threads();
  std::vector<std::vector<Failure>> fails(count);
  std::vector<Pairing> ctx;
  for (int t = 0; t < workers; ++t) ctx.emplace_back(datum, mode, twist);

  parallel_cases(count, workers, [&](long gi, int worker) {
    const auto& g = gens[gi];
    // Numeric twists: substitute the assignment into the symbolic J
    // coefficients so both sides use the same parameters.
    FElement eta = g.element;
    if (twist && !twist->is_symbolic())
      eta = falg.specialize(eta, twist->assignment());
    for (const auto& w : words) {
      LaurentCoefficient v = ctx[worker].pair(eta, UElement::monomial(w));
      if (twist && !twist->is_symbolic()) v = v.specialized(twist->assignment());
      if (!v.is_zero())
        fails[gi].push_back({g.family + ": " + to_string(g.element), to_string(w),
                             v.to_string()});
    }
  });

  rep.cases_total = count * static_cast<long>(words.size());
  for (const auto& fs : fails)
    for (const auto& f : fs) {
      ++rep.cases_failed;
      if (rep.failures.size() < 64) rep.failures.push_back(f);
    }
  return rep;
}

Report verify_J_coideal(const FunctionAlgebra& falg) {
  Report rep;
  rep.suite = "j-coideal";
  rep.n = falg.datum().n();
  rep.parity = falg.datum().bits();
  rep.mode = falg.mode() == FMode::Multiparam ? "multi" : "uni";
  auto gens = ideal_j_generators(falg);
  for (const auto& g : gens) {
    FTensor free = falg.coproduct_free(g.element);
    FTensor reduced = falg.normalize_legs(free);
    rep.record(reduced.is_zero(), g.family + ": " + to_string(g.element),
               "Delta(eta) mod J(x)F + F(x)J", to_string(reduced));
  }
  return rep;
}

UTensor skew_primitivity_residue(const EnvelopingAlgebra& ualg, const SkewFamily& fam) {
  UTensor delta = ualg.coproduct(fam.rho, UMode::Standard);
  UGen gl = UGen::toral(fam.g_left);
  UGen gr = UGen::toral(fam.g_right);
  UElement left = gl.toral_is_unit() ? UElement::unit() : UElement::monomial({gl});
  UElement right = gr.toral_is_unit() ? UElement::unit() : UElement::monomial({gr});
  delta -= UTensor::of(left, fam.rho);
  delta -= UTensor::of(fam.rho, right);
  return ualg.straighten_legs(delta);
}

Report skew_primitivity_check(const ParityDatum& datum) {
  EnvelopingAlgebra ualg(datum);
  Report rep;
  rep.suite = "skew";
  rep.n = datum.n();
  rep.parity = datum.bits();
  rep.mode = "standard";
  for (const auto& fam : ualg.skew_families()) {
    UTensor residue = skew_primitivity_residue(ualg, fam);
    rep.record(residue.is_zero(), fam.name, "skew-primitive residue",
               to_string(residue));
  }
  return rep;
}

// ---- exact rank over QQ(q) ---------------------------------------------

namespace {

// dense polynomial over QQ, index = exponent
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
bool poly_zero(const Poly& p) { return p.empty(); }
Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}
Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}
// exact division (throws if not divisible) — Bareiss guarantees exactness
Poly poly_div_exact(Poly num, const Poly& den) {
  if (poly_zero(den)) throw std::logic_error("polynomial division by zero");
  if (poly_zero(num)) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  Poly q(num.size() - den.size() + 1, Rational(0));
  for (size_t k = q.size(); k-- > 0;) {
    if (num.size() < den.size() + k) continue;
    Rational c = num[den.size() - 1 + k] / den.back();
    q[k] = c;
    if (c == 0) continue;
    for (size_t i = 0; i < den.size(); ++i) num[i + k] -= c * den[i];
  }
  poly_trim(num);
  if (!poly_zero(num)) throw std::logic_error("inexact polynomial division");
  return q;
}

long bareiss_rank(std::vector<std::vector<Poly>>& m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  Poly prev{Rational(1)};
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && poly_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = poly_div_exact(
            poly_sub(poly_mul(m[r][c], m[i][j]), poly_mul(m[i][c], m[r][j])), prev);
      m[i][c] = {};
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace

int pairing_matrix_rank(const ParityDatum& datum, int degree, int word_length,
                        UMode mode, std::optional<TwistData> twist) {
  FunctionAlgebra falg(datum, FMode::Uniparam);
  Pairing ctx(datum, mode, twist);
  auto basis = falg.pbw_basis_upto(degree);
  auto words = enumerate_u_words(datum, word_length, /*with_torals=*/false);

  std::map<std::pair<int, int>, Rational> assign;
  if (twist) assign = twist->assignment();
  // distinct integer defaults for any symbols still present
  {
    long v = 1;
    for (int t = 1; t <= datum.n(); ++t)
      for (int l = t + 1; l <= datum.n(); ++l, ++v)
        if (!assign.count({t, l})) assign[{t, l}] = Rational(v);
  }

  // entries as maps exponent -> rational, exponents rational
  std::vector<std::vector<LaurentCoefficient>> entries(basis.size());
  long denom_lcm = 1;
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    const FWord bw = basis[bi].word(datum.n());
    entries[bi].reserve(words.size());
    for (const auto& w : words) {
      LaurentCoefficient v =
          ctx.pair_words(bw, w).specialized(assign);
      if (v.has_phi()) throw std::logic_error("rank: unassigned phi symbol");
      for (const auto& [e, c] : v.terms()) {
        if (!e.one().get_den().fits_slong_p())
          throw std::logic_error("rank: exponent denominator out of range");
        denom_lcm = std::lcm(denom_lcm, e.one().get_den().get_si());
      }
      entries[bi].push_back(std::move(v));
    }
  }

  // substitute q = t^denom_lcm, shift each row to clear negative exponents
  std::vector<std::vector<Poly>> m(basis.size(), std::vector<Poly>(words.size()));
  for (size_t i = 0; i < entries.size(); ++i) {
    long min_exp = 0;
    for (const auto& v : entries[i])
      for (const auto& [e, c] : v.terms()) {
        Rational scaled = e.one() * denom_lcm;
        if (!scaled.get_num().fits_slong_p())
          throw std::logic_error("rank: exponent out of range");
        min_exp = std::min(min_exp, scaled.get_num().get_si());
      }
    for (size_t j = 0; j < entries[i].size(); ++j) {
      Poly p;
      for (const auto& [e, c] : entries[i][j].terms()) {
        Rational scaled = e.one() * denom_lcm;
        long exp = scaled.get_num().get_si() - min_exp;
        if (static_cast<long>(p.size()) <= exp) p.resize(exp + 1, Rational(0));
        p[exp] += c;
      }
      poly_trim(p);
      m[i][j] = std::move(p);
    }
  }
  return static_cast<int>(bareiss_rank(m));
}

}  // namespace qsuper
