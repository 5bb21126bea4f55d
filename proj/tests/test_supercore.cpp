#include <doctest.h>

#include "qsuper/supercore.hpp"
#include "qsuper/ualg.hpp"
#include "test_support.hpp"

using namespace qsuper;

static const ParityDatum kD(2, {0, 1});

TEST_CASE("generator and word parities") {
  // |x_12| = p_12 = 1
  CHECK(parity_of(FGen{1, 2}, kD) == 1);
  // |x_12 x_21| = 0
  CHECK(parity_of(FWord{{1, 2}, {2, 1}}, kD) == 0);
  // |E_1| = p_{1,2} = 1
  CHECK(parity_of(UGen::e(1), kD) == 1);
  CHECK(parity_of(UGen::gamma(2), kD) == 0);
  CHECK_THROWS_AS(parity_of(FGen{0, 1}, kD), std::out_of_range);
  CHECK_THROWS_AS(parity_of(UGen::e(2), kD), std::out_of_range);
}

TEST_CASE("Koszul tensor product") {
  auto t = [](FWord a, FWord b) {
    FTensor r;
    r.add(std::move(a), std::move(b), LaurentCoefficient::one());
    return r;
  };
  // all-even square
  FTensor even = tensor_multiply(t({{1, 1}}, {{1, 1}}), t({{1, 1}}, {{1, 1}}), kD);
  CHECK(even == t({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}));
  // (1 (x) x_12)(x_21 (x) 1) = -(x_21 (x) x_12)
  FTensor odd = tensor_multiply(t({}, {{1, 2}}), t({{2, 1}}, {}), kD);
  FTensor expect;
  expect.add({{2, 1}}, {{1, 2}}, -LaurentCoefficient::one());
  CHECK(odd == expect);
}

TEST_CASE("square of E_1 (x) 1 + T (x) E_1 with E_1 odd") {
  EnvelopingAlgebra ua(kD);
  UGen T = ua.K(1);  // Toral(H_1)
  UTensor s;
  s.add({UGen::e(1)}, {}, LaurentCoefficient::one());
  s.add({T}, {UGen::e(1)}, LaurentCoefficient::one());
  UTensor sq = tensor_multiply(s, s, kD);
  // E_1 E_1 (x) 1 + (E_1 T - T E_1) (x) E_1 + T T (x) E_1 E_1
  UTensor expect;
  expect.add({UGen::e(1), UGen::e(1)}, {}, LaurentCoefficient::one());
  expect.add({UGen::e(1), T}, {UGen::e(1)}, LaurentCoefficient::one());
  expect.add({T, UGen::e(1)}, {UGen::e(1)}, -LaurentCoefficient::one());
  expect.add({T, T}, {UGen::e(1), UGen::e(1)}, LaurentCoefficient::one());
  CHECK(sq == expect);
  // the cross term cancels after straightening: T commutes with E_1 on a grey node
  CHECK(ua.straighten_legs(sq).terms().size() == 2);
}

TEST_CASE("tensor product associativity on random triples") {
  test::Rng rng(2024);
  ParityDatum d(3, {0, 1, 0});
  for (int trial = 0; trial < 100; ++trial) {
    FTensor a, b, c;
    a.add(rng.f_word(3, 2), rng.f_word(3, 2), rng.coeff(3, 2));
    b.add(rng.f_word(3, 2), rng.f_word(3, 2), rng.coeff(3, 2));
    c.add(rng.f_word(3, 2), rng.f_word(3, 2), rng.coeff(3, 2));
    CHECK(tensor_multiply(tensor_multiply(a, b, d), c, d) ==
          tensor_multiply(a, tensor_multiply(b, c, d), d));
  }
}

TEST_CASE("parity additive under concatenation, Koszul flip law") {
  test::Rng rng(515);
  ParityDatum d(3, {1, 0, 1});
  for (int trial = 0; trial < 100; ++trial) {
    FWord a = rng.f_word(3, 3);
    FWord b = rng.f_word(3, 3);
    FWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(parity_of(ab, d) == (parity_of(a, d) ^ parity_of(b, d)));

    // (a (x) 1)(1 (x) b) = a (x) b ; (1 (x) b)(a (x) 1) = (-1)^{|a||b|} a (x) b
    FTensor left, right, plain;
    left.add(a, {}, LaurentCoefficient::one());
    right.add({}, b, LaurentCoefficient::one());
    plain.add(a, b, LaurentCoefficient::one());
    CHECK(tensor_multiply(left, right, d) == plain);
    FTensor flipped = tensor_multiply(right, left, d);
    int sign = parity_of(a, d) * parity_of(b, d);
    FTensor expect;
    expect.add(a, b, sign & 1 ? -LaurentCoefficient::one() : LaurentCoefficient::one());
    CHECK(flipped == expect);
  }
}

TEST_CASE("element text grammar round-trips") {
  test::Rng rng(31337);
  ParityDatum d(3, {0, 1, 1});
  for (int trial = 0; trial < 150; ++trial) {
    FElement e = rng.f_element(3, 3);
    CHECK(f_element_parse(to_string(e), d) == e);
  }
  // U-side tokens, including torals with phi entries
  UElement u = u_element_parse("E[1] G[2] T(1,-1/2,phi[1,2]) - 2 * F[2]", d);
  CHECK(u.terms().size() == 2);
  CHECK(to_string(u) == to_string(u_element_parse(to_string(u), d)));
  // words
  CHECK(f_word_parse("x[1,2] x[2,1]", d) == FWord{{1, 2}, {2, 1}});
  CHECK(u_word_parse("1", d).empty());
  CHECK_THROWS_AS(f_word_parse("x[9,1]", d), std::out_of_range);
  CHECK_THROWS_AS(f_element_parse("x[1", d), std::invalid_argument);
}

TEST_CASE("malformed inputs are rejected, not crashed on") {
  ParityDatum d(2, {0, 1});
  for (const char* bad : {"x[1,2", "x[1]", "T(1)", "T(1,2,3)", "E[]", "q^ * x[1,1]",
                          "1 *", "(1 - q * x[1,1]", "x[1,1] ** x[2,2]", "+", "- -"}) {
    CHECK_THROWS(f_element_parse(bad, d));
  }
  CHECK_THROWS(u_element_parse("T(1,2,3)", d));   // wrong toral arity
  CHECK_THROWS(u_element_parse("G[3]", d));       // index out of range
}
