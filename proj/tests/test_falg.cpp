#include <doctest.h>

#include "qsuper/falg.hpp"
#include "qsuper/pairing.hpp"
#include "test_support.hpp"

using namespace qsuper;

namespace {

const ParityDatum kD(2, {0, 1});

FElement mono(std::initializer_list<FGen> gens,
              LaurentCoefficient c = LaurentCoefficient::one()) {
  return FElement::monomial(FWord(gens), std::move(c));
}

LaurentCoefficient q(long e) { return LaurentCoefficient::q_int(e); }

// Counts truncated exponent vectors of total degree m by brute enumeration
// over words (independent of the basis generator).
long brute_basis_count(const ParityDatum& d, int m) {
  long count = 0;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    int n = d.n();
    if (pos == n * n) {
      if (remaining == 0) ++count;
      return;
    }
    int i = pos / n + 1, j = pos % n + 1;
    int cap = d.pij(i, j) == 1 ? std::min(1, remaining) : remaining;
    for (int e = 0; e <= cap; ++e) rec(pos + 1, remaining - e);
  };
  rec(0, m);
  return count;
}

}  // namespace

TEST_CASE("normal form on short words") {
  FunctionAlgebra uni(kD, FMode::Uniparam);
  // x_12^2 = 0
  CHECK(uni.normal_form(FWord{{1, 2}, {1, 2}}).is_zero());
  // x_12 x_11 -> q^-1 x_11 x_12
  CHECK(uni.normal_form(FWord{{1, 2}, {1, 1}}) == mono({{1, 1}, {1, 2}}, q(-1)));
  // x_21 x_12 -> -x_12 x_21
  CHECK(uni.normal_form(FWord{{2, 1}, {1, 2}}) ==
        mono({{1, 2}, {2, 1}}, -LaurentCoefficient::one()));

  FunctionAlgebra multi(kD, FMode::Multiparam);
  // x_12 x_11 -> q^-1 q_12 x_11 x_12
  LaurentCoefficient expect = q(-1) * LaurentCoefficient::q_power(ExpForm::phi(1, 2));
  CHECK(multi.normal_form(FWord{{1, 2}, {1, 1}}) == mono({{1, 1}, {1, 2}}, expect));
}

// The pairing is defined on free words independently of the rewriting, so it
// serves as the cross-check oracle for normal forms.
TEST_CASE("normal form preserves the pairing against all short U-words") {
  FunctionAlgebra uni(kD, FMode::Uniparam);
  Pairing ctx(kD);
  auto words = enumerate_u_words(kD, 2, true);
  auto check_nf = [&](const FWord& w) {
    FElement free_elem = FElement::monomial(w);
    FElement nf = uni.normal_form(w);
    for (const auto& u : words)
      CHECK(ctx.pair(free_elem, UElement::monomial(u)) ==
            ctx.pair(nf, UElement::monomial(u)));
  };
  check_nf({{1, 2}, {1, 1}});
  check_nf({{2, 1}, {1, 2}});
  check_nf({{2, 2}, {1, 1}});
  check_nf({{2, 1}, {1, 2}, {1, 1}});
}

TEST_CASE("multiplication examples") {
  FunctionAlgebra uni(kD, FMode::Uniparam);
  // ordered product stays put
  CHECK(uni.multiply(mono({{1, 1}}), mono({{2, 2}})) == mono({{1, 1}, {2, 2}}));
  // x_22 x_11 = x_11 x_22 - (q - q^-1) x_12 x_21
  FElement lhs = uni.multiply(mono({{2, 2}}), mono({{1, 1}}));
  FElement expect = mono({{1, 1}, {2, 2}});
  expect.add({{1, 2}, {2, 1}}, -(q(1) - q(-1)));
  CHECK(lhs == expect);
  // odd square
  CHECK(uni.multiply(mono({{1, 2}}), mono({{1, 2}})).is_zero());
}

TEST_CASE("coproduct and counit on generators") {
  FunctionAlgebra uni(kD, FMode::Uniparam);
  // Delta(x_11) = x_11 (x) x_11 - x_12 (x) x_21
  FTensor d11 = uni.coproduct(mono({{1, 1}}));
  FTensor expect11;
  expect11.add({{1, 1}}, {{1, 1}}, LaurentCoefficient::one());
  expect11.add({{1, 2}}, {{2, 1}}, -LaurentCoefficient::one());
  CHECK(d11 == expect11);
  // Delta(x_12) = x_11 (x) x_12 + x_12 (x) x_22
  FTensor d12 = uni.coproduct(mono({{1, 2}}));
  FTensor expect12;
  expect12.add({{1, 1}}, {{1, 2}}, LaurentCoefficient::one());
  expect12.add({{1, 2}}, {{2, 2}}, LaurentCoefficient::one());
  CHECK(d12 == expect12);
  // Delta(1) = 1 (x) 1
  CHECK(uni.coproduct(FElement::unit()) == FTensor::unit());

  CHECK(uni.counit(mono({{1, 2}})).is_zero());
  CHECK(uni.counit(mono({{1, 1}, {2, 2}})) == LaurentCoefficient::one());
  CHECK(uni.counit(FElement::unit()) == LaurentCoefficient::one());
}

TEST_CASE("pbw basis sizes at n=2 parity 01") {
  FunctionAlgebra uni(kD, FMode::Uniparam);
  CHECK(uni.pbw_basis(0).size() == 1);
  CHECK(uni.pbw_basis(1).size() == 4);
  CHECK(uni.pbw_basis(2).size() == 8);
  // brute-force enumeration oracle agrees through degree 5
  for (int m = 0; m <= 5; ++m)
    CHECK(static_cast<long>(uni.pbw_basis(m).size()) == brute_basis_count(kD, m));
}

TEST_CASE("termination weight decreases stepwise") {
  // the rewrite loop itself throws if a step fails to decrease the weight;
  // drive it over random words in all parities and both modes
  test::Rng rng(888);
  for (int n = 2; n <= 3; ++n)
    for (const auto& d : test::all_parities(n))
      for (FMode mode : {FMode::Uniparam, FMode::Multiparam}) {
        FunctionAlgebra alg(d, mode);
        for (int trial = 0; trial < 30; ++trial)
          CHECK_NOTHROW(alg.normal_form(rng.f_word(n, 6)));
      }
}

TEST_CASE("confluence, idempotence, parity preservation") {
  test::Rng rng(4242);
  for (int n = 2; n <= 3; ++n)
    for (const auto& d : test::all_parities(n))
      for (FMode mode : {FMode::Uniparam, FMode::Multiparam}) {
        FunctionAlgebra alg(d, mode);
        for (int trial = 0; trial < 12; ++trial) {
          FElement a = FElement::monomial(rng.f_word(n, 3));
          FElement b = FElement::monomial(rng.f_word(n, 3));
          FElement c = FElement::monomial(rng.f_word(n, 3));
          FElement left = alg.multiply(alg.multiply(a, b), c);
          FElement right = alg.multiply(a, alg.multiply(b, c));
          CHECK(left == right);
          CHECK(alg.normal_form(left) == left);  // idempotence
        }
        // parity preservation per homogeneous monomial
        for (int trial = 0; trial < 12; ++trial) {
          FWord w = rng.f_word(n, 4);
          int p = parity_of(w, d);
          FElement nf = alg.normal_form(w);
          for (const auto& [word, coeff] : nf.terms())
            CHECK(parity_of(word, d) == p);
        }
      }
}

TEST_CASE("coproduct is a superalgebra morphism; coassociativity; counit laws") {
  test::Rng rng(606);
  for (const auto& d : test::all_parities(2)) {
    FunctionAlgebra alg(d, FMode::Uniparam);
    // morphism on all generator pairs
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int h = 1; h <= 2; ++h)
          for (int k = 1; k <= 2; ++k) {
            FElement a = mono({{i, j}});
            FElement b = mono({{h, k}});
            FTensor lhs = alg.coproduct(alg.multiply(a, b));
            FTensor rhs = alg.normalize_legs(
                tensor_multiply(alg.coproduct(a), alg.coproduct(b), d));
            CHECK(lhs == rhs);
          }
    // random samples
    for (int trial = 0; trial < 10; ++trial) {
      FElement a = FElement::monomial(rng.f_word(2, 2));
      FElement b = FElement::monomial(rng.f_word(2, 2));
      CHECK(alg.coproduct(alg.multiply(a, b)) ==
            alg.normalize_legs(tensor_multiply(alg.coproduct(a), alg.coproduct(b), d)));
    }
  }

  // coassociativity and counit axioms on generators and short words
  FunctionAlgebra alg(kD, FMode::Uniparam);
  test::Rng rng2(77);
  auto check_elem = [&](const FElement& e) {
    FTensor de = alg.coproduct(e);
    // (Delta (x) id) Delta = (id (x) Delta) Delta, flattened to word triples
    std::map<std::tuple<FWord, FWord, FWord>, LaurentCoefficient> lhs, rhs;
    for (const auto& [k, c] : de.terms()) {
      FTensor dl = alg.coproduct(FElement::monomial(k.first));
      for (const auto& [kk, cc] : dl.terms()) {
        auto key = std::make_tuple(kk.first, kk.second, k.second);
        lhs[key] += c * cc;
        if (lhs[key].is_zero()) lhs.erase(key);
      }
      FTensor dr = alg.coproduct(FElement::monomial(k.second));
      for (const auto& [kk, cc] : dr.terms()) {
        auto key = std::make_tuple(k.first, kk.first, kk.second);
        rhs[key] += c * cc;
        if (rhs[key].is_zero()) rhs.erase(key);
      }
    }
    CHECK(lhs == rhs);
    // (eps (x) id) Delta = id = (id (x) eps) Delta
    FElement left, right;
    for (const auto& [k, c] : de.terms()) {
      left.add(k.second, c * alg.counit(FElement::monomial(k.first)));
      right.add(k.first, c * alg.counit(FElement::monomial(k.second)));
    }
    FElement nf = alg.normal_form(e);
    CHECK(left == nf);
    CHECK(right == nf);
  };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) check_elem(mono({{i, j}}));
  for (int trial = 0; trial < 8; ++trial) check_elem(FElement::monomial(rng2.f_word(2, 3)));
}

TEST_CASE("graded dimension is mode-independent and spans close under product") {
  for (const auto& d : test::all_parities(3)) {
    FunctionAlgebra uni(d, FMode::Uniparam);
    FunctionAlgebra multi(d, FMode::Multiparam);
    for (int m = 0; m <= 3; ++m)
      CHECK(uni.pbw_basis(m).size() == multi.pbw_basis(m).size());
  }
  // product of degree-a and degree-b monomials lands in degree a+b
  FunctionAlgebra alg(kD, FMode::Uniparam);
  test::Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    FWord a = rng.f_word(2, 2), b = rng.f_word(2, 2);
    FElement prod = alg.multiply(FElement::monomial(a), FElement::monomial(b));
    for (const auto& [w, c] : prod.terms()) CHECK(w.size() == a.size() + b.size());
  }
}

TEST_CASE("poisson bracket oracle") {
  // bracket of an even element with itself vanishes
  FunctionAlgebra alg01(kD, FMode::Uniparam);
  CHECK(alg01.poisson_bracket(mono({{1, 1}}), mono({{1, 1}})).is_zero());

  // p = (0,0): {x_11, x_12} = x_12 x_11 (= x_11 x_12 in the PBW basis)
  ParityDatum even(2, {0, 0});
  FunctionAlgebra alg00(even, FMode::Uniparam);
  CHECK(alg00.poisson_bracket(mono({{1, 1}}), mono({{1, 2}})) == mono({{1, 1}, {1, 2}}));

  // multiparametric with phi_12 = 2: {x_11, x_12}_Phi = (1 - 2) x_12 x_11
  FunctionAlgebra alg00m(even, FMode::Multiparam);
  std::map<std::pair<int, int>, Rational> phi{{{1, 2}, Rational(2)}};
  CHECK(alg00m.poisson_bracket(mono({{1, 1}}), mono({{1, 2}}), phi) ==
        mono({{1, 1}, {1, 2}}, LaurentCoefficient::from_rational(Rational(-1))));
}

TEST_CASE("poisson super-antisymmetry on random homogeneous pairs") {
  test::Rng rng(13);
  for (const auto& d : test::all_parities(2)) {
    FunctionAlgebra alg(d, FMode::Uniparam);
    for (int trial = 0; trial < 25; ++trial) {
      FWord a = rng.f_word(2, 2), b = rng.f_word(2, 2);
      FElement lhs = alg.poisson_bracket(FElement::monomial(a), FElement::monomial(b));
      FElement rhs = alg.poisson_bracket(FElement::monomial(b), FElement::monomial(a));
      int sign = parity_of(a, d) * parity_of(b, d);
      FElement expect = (sign & 1) ? rhs : FElement::zero() - rhs;
      CHECK(lhs == ((sign & 1) ? rhs : FElement::zero() - rhs));
      (void)expect;
    }
  }
}

TEST_CASE("specialisation") {
  FunctionAlgebra alg(kD, FMode::Uniparam);
  // q -> 1 on nf(x_11 x_12 - x_12 x_11) gives 0
  FElement comm = mono({{1, 1}, {1, 2}}) - alg.normal_form(FWord{{1, 2}, {1, 1}});
  CHECK(alg.specialize(alg.normal_form(comm), {}, true).is_zero());
  // identity assignment is the identity
  test::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    FElement e = rng.f_element(2, 3);
    CHECK(alg.specialize(e, {}) == e);
  }
  // all phi -> 0 turns each multiparametric relation rule into the uniparametric one
  FunctionAlgebra multi(kD, FMode::Multiparam);
  FunctionAlgebra uni(kD, FMode::Uniparam);
  std::map<std::pair<int, int>, Rational> zeros{{{1, 2}, Rational(0)}};
  for (size_t r = 0; r < multi.relations().size(); ++r) {
    const auto& mr = multi.relations()[r];
    const auto& ur = uni.relations()[r];
    CHECK(multi.specialize(mr.rhs, zeros) == ur.rhs);
  }
}
