#include "doctest.h"
#include "test_support.hpp"
#include "trikit/error.hpp"
#include "trikit/laurent.hpp"

using namespace trikit;
using trikit::testing::random_poly;

namespace {
// -2t + 5 - 2t^-1, the Alexander polynomial of K_1.
const LaurentPoly kDeltaK1{{1, -2}, {0, 5}, {-1, -2}};
const LaurentPoly kT{{1, 1}};
}  // namespace

TEST_CASE("canonical form drops zero coefficients") {
  LaurentPoly p{{2, 0}, {1, 3}, {0, 0}};
  CHECK(p.term_count() == 1);
  CHECK(p.coeff(1) == 3);
  CHECK(LaurentPoly{{0, 0}}.is_zero());
  CHECK(LaurentPoly{{1, 4}, {1, -4}}.is_zero());
}

TEST_CASE("add") {
  CHECK((kT + LaurentPoly{{1, -1}}).is_zero());
  CHECK(add(kDeltaK1, LaurentPoly{}) == kDeltaK1);
  // (-2t + 1) + (t - 1) = -t
  CHECK(add(LaurentPoly{{1, -2}, {0, 1}}, LaurentPoly{{1, 1}, {0, -1}}) == LaurentPoly{{1, -1}});
}

TEST_CASE("mul") {
  // (1 - 2t)(1 - 2t^-1) = 1 - 2t^-1 - 2t + 4 = 5 - 2t - 2t^-1
  const LaurentPoly f{{0, 1}, {1, -2}};
  CHECK(mul(f, LaurentPoly{{0, 1}, {-1, -2}}) == kDeltaK1);
  CHECK(mul(kDeltaK1, LaurentPoly::constant(1)) == kDeltaK1);
  CHECK(mul(LaurentPoly{{2, 1}}, LaurentPoly{{-2, 1}}) == LaurentPoly::constant(1));
  CHECK(mul(kDeltaK1, LaurentPoly{}).is_zero());
}

TEST_CASE("involute") {
  CHECK(involute(LaurentPoly{{1, -2}, {0, 1}}) == LaurentPoly{{-1, -2}, {0, 1}});
  CHECK(involute(kDeltaK1) == kDeltaK1);
  CHECK(involute(LaurentPoly{{3, 1}}) == LaurentPoly{{-3, 1}});
}

TEST_CASE("eval_at_one") {
  CHECK(eval_at_one(kDeltaK1) == 1);
  CHECK(eval_at_one(LaurentPoly{}) == 0);
  CHECK(eval_at_one(LaurentPoly{{5, 1}}) == 1);
}

TEST_CASE("second_derivative_at_one") {
  CHECK(second_derivative_at_one(kDeltaK1) == -4);
  CHECK(second_derivative_at_one(LaurentPoly{{1, 2}, {0, -3}, {-1, 2}}) == 4);
  CHECK(second_derivative_at_one(LaurentPoly::constant(1)) == 0);
  // t^3: 3*2 = 6; t^-2: (-2)(-3) = 6
  CHECK(second_derivative_at_one(LaurentPoly{{3, 1}}) == 6);
  CHECK(second_derivative_at_one(LaurentPoly{{-2, 1}}) == 6);
}

TEST_CASE("normalize_unit") {
  CHECK(normalize_unit(LaurentPoly{{-1, 1}, {0, -2}}) == LaurentPoly{{0, 1}, {1, -2}});
  CHECK(normalize_unit(LaurentPoly{{3, -1}}) == LaurentPoly::constant(1));
  CHECK(normalize_unit(LaurentPoly{{0, 1}, {1, -2}}) == LaurentPoly{{0, 1}, {1, -2}});
  CHECK_THROWS_AS(normalize_unit(LaurentPoly{}), DomainError);
}

TEST_CASE("symmetrize_alexander") {
  const LaurentPoly f{{0, 1}, {1, -2}};
  CHECK(symmetrize_alexander(f * involute(f)) == kDeltaK1);
  CHECK(symmetrize_alexander(LaurentPoly::constant(1)) == LaurentPoly::constant(1));
  // Shifted and negated copies land on the same representative.
  CHECK(symmetrize_alexander(-shift(kDeltaK1, 7)) == kDeltaK1);
  CHECK(symmetrize_alexander(LaurentPoly::constant(-1)) == LaurentPoly::constant(1));

  SUBCASE("no palindromic shift of 1 + t + t^3") {
    const LaurentPoly bad{{0, 1}, {1, 1}, {3, 1}};
    // Oracle: try every shift directly; none is fixed by t -> t^-1.
    for (int k = -10; k <= 10; ++k) {
      const LaurentPoly s = shift(bad, k);
      CHECK(involute(s) != s);
      CHECK(involute(s) != -s);
    }
    CHECK_THROWS_AS(symmetrize_alexander(bad), DomainError);
  }
  CHECK_THROWS_AS(symmetrize_alexander(LaurentPoly{}), DomainError);
  // t - 2 + t^-1 is symmetric but vanishes at 1.
  CHECK_THROWS_AS(symmetrize_alexander(LaurentPoly{{1, 1}, {0, -2}, {-1, 1}}), DomainError);
}

TEST_CASE("exact_divide") {
  const LaurentPoly f{{0, 1}, {1, -2}};
  const LaurentPoly g{{-1, 3}, {0, 1}, {2, -5}};
  CHECK(exact_divide(f * g, g) == f);
  CHECK(exact_divide(f * g, f) == g);
  CHECK(exact_divide(LaurentPoly{}, g).is_zero());
  CHECK_THROWS_AS(exact_divide(f, LaurentPoly{}), DomainError);
  CHECK_THROWS_AS(exact_divide(LaurentPoly{{0, 1}}, LaurentPoly{{0, 2}}), DomainError);
  CHECK_THROWS_AS(exact_divide(LaurentPoly{{0, 1}, {1, 1}}, LaurentPoly{{0, 1}, {1, -1}}), DomainError);
}

TEST_CASE("to_string") {
  CHECK(to_string(kDeltaK1) == "-2*t^1 + 5 - 2*t^-1");
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK(to_string(LaurentPoly{{2, 1}, {0, -1}}) == "t^2 - 1");
  CHECK(to_string(LaurentPoly{{-1, -1}}) == "-t^-1");
}

TEST_CASE("large coefficients stay exact") {
  LaurentPoly p = LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 2);
  LaurentPoly q = p * p;
  CHECK(q.coeff(4) == BigInt("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("ring laws on random polynomials") {
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(involute(involute(a)) == a);
    CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
    if (!a.is_zero()) {
      CHECK(normalize_unit(normalize_unit(a)) == normalize_unit(a));
      CHECK(unit_equivalent(a, -shift(a, 3)));
    }
  }
}

TEST_CASE("symmetric polynomials with value 1 have even second derivative") {
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly half = random_poly(4, 5, 6);
    LaurentPoly sym = half + involute(half);
    // Fix the value at 1 via the constant term.
    sym += LaurentPoly::constant(BigInt(1) - eval_at_one(sym));
    REQUIRE(is_symmetric(sym));
    REQUIRE(eval_at_one(sym) == 1);
    CHECK(mpz_even_p(second_derivative_at_one(sym).get_mpz_t()));
  }
}
