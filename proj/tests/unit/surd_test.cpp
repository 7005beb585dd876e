#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "printers.hpp"
#include "surdcf/errors.hpp"
#include "surdcf/surd.hpp"

namespace surdcf {
namespace {

QuadraticSurd S(long p, long q, long d) { return QuadraticSurd(p, q, d); }

PeriodicCF CF(std::vector<Integer> pre, std::vector<Integer> period) {
  return {std::move(pre), std::move(period)};
}

// Random normalized surd; D is never a square.
QuadraticSurd random_surd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pd(-60, 60), qd(-40, 40), dd(2, 600);
  long q = 0;
  while (q == 0) q = qd(rng);
  long d = dd(rng);
  while (is_perfect_square(d)) d = dd(rng);
  return QuadraticSurd(pd(rng), q, d);
}

TEST(SurdConstruction, RejectsDegenerateInput) {
  EXPECT_THROW(S(1, 0, 2), DomainError);
  EXPECT_THROW(S(1, 1, 4), NotQuadraticIrrational);
  EXPECT_THROW(S(1, 1, 0), NotQuadraticIrrational);
  EXPECT_THROW(S(1, 1, -3), NotQuadraticIrrational);
}

TEST(SurdConstruction, NormalizationMakesQDivideDMinusPSquared) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const QuadraticSurd s = random_surd(rng);
    ASSERT_TRUE(divides(s.q(), s.d() - s.p() * s.p())) << s.p() << " " << s.q() << " " << s.d();
  }
}

TEST(SurdConstruction, ScalingPreservesValue) {
  // (1 + sqrt 5) / 3: 3 does not divide 5 - 1, so the triple is scaled by 3.
  const QuadraticSurd s = S(1, 3, 5);
  EXPECT_EQ(s, S(3, 9, 45));
  EXPECT_NEAR(s.approx(), (1 + std::sqrt(5.0)) / 3, 1e-15);
}

TEST(SurdConstruction, EqualValuesHaveEqualTriples) {
  EXPECT_EQ(S(2, 2, 20), S(1, 1, 5));
  EXPECT_NE(S(1, 1, 2), S(1, -1, 2));
}

TEST(SurdFromQuadratic, Examples) {
  EXPECT_EQ(surd_from_quadratic(1, -2, -1), S(1, 1, 2));
  EXPECT_EQ(surd_from_quadratic(1, -18, -24), S(9, 1, 105));
  EXPECT_EQ(surd_from_quadratic(1, 0, -2), S(0, 1, 2));
}

TEST(SurdFromQuadratic, LargerRootForNegativeLeadingCoefficient) {
  const QuadraticSurd s = surd_from_quadratic(-1, 0, 2);
  EXPECT_NEAR(s.approx(), std::sqrt(2.0), 1e-15);
}

TEST(SurdFromQuadratic, RejectsRationalRoots) {
  EXPECT_THROW(surd_from_quadratic(1, -3, 2), NotQuadraticIrrational);
  EXPECT_THROW(surd_from_quadratic(1, 0, 1), NotQuadraticIrrational);
  EXPECT_THROW(surd_from_quadratic(0, 1, 1), NotQuadraticIrrational);
}

TEST(FloorSurd, Examples) {
  EXPECT_EQ(floor_surd(S(9, 1, 105)), 19);
  EXPECT_EQ(floor_surd(S(1, 2, 5)), 1);
  EXPECT_EQ(floor_surd(S(-1, 1, 2)), 0);
}

TEST(FloorSurd, AgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const QuadraticSurd s = random_surd(rng);
    const mpf_class v = oracle::surd_value(s.p(), s.q(), s.d(), 512);
    mpf_class f(0, 512);
    mpf_floor(f.get_mpf_t(), v.get_mpf_t());
    ASSERT_EQ(floor_surd(s), Integer(f)) << s.p() << " " << s.q() << " " << s.d();
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(S(1, 1, 2)), (ConjugateSurd{1, 1, 2}));
  EXPECT_EQ(conjugate(S(9, 1, 105)), (ConjugateSurd{9, 1, 105}));
  EXPECT_EQ(conjugate(S(0, 1, 2)), (ConjugateSurd{0, 1, 2}));
}

TEST(Conjugate, IsAnInvolution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const QuadraticSurd s = random_surd(rng);
    ASSERT_EQ(conjugate(conjugate(s)), s);
  }
}

TEST(Compare, AgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> td(-20, 20);
  for (int i = 0; i < 3000; ++i) {
    const QuadraticSurd s = random_surd(rng);
    const Integer t = td(rng);
    const mpf_class v = oracle::surd_value(s.p(), s.q(), s.d(), 512);
    ASSERT_EQ(compare(s, t), cmp(v, mpf_class(t, 512)) > 0 ? 1 : -1);
    mpf_class c(s.d(), 512);
    c = (mpf_class(s.p(), 512) - sqrt(c)) / mpf_class(s.q(), 512);
    ASSERT_EQ(compare(conjugate(s), t), cmp(c, mpf_class(t, 512)) > 0 ? 1 : -1);
  }
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(S(1, 2, 5)));
  EXPECT_FALSE(is_reduced(S(0, 1, 2)));
  EXPECT_TRUE(is_reduced(S(1, 1, 2)));
  EXPECT_FALSE(is_reduced(S(9, 1, 105)));
}

TEST(Scale, Examples) {
  EXPECT_EQ(scale(S(0, 1, 2), 2), S(0, 1, 8));
  EXPECT_EQ(scale(S(1, 2, 5), 2), S(2, 2, 20));
  EXPECT_EQ(scale(S(1, 2, 5), 2), S(1, 1, 5));
  // The value that arises in the mu construction is (9+√105)/3, and 3 times it
  // is 9+√105.
  EXPECT_EQ(scale(S(9, 3, 105), 3), S(9, 1, 105));
  EXPECT_EQ(scale(S(3, 3, 105), 3), S(3, 1, 105));
}

TEST(Scale, NonPositiveFactorIsDomainError) {
  EXPECT_THROW(scale(S(0, 1, 2), 0), DomainError);
  EXPECT_THROW(scale(S(0, 1, 2), -3), DomainError);
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand(S(0, 1, 2)), CF({1}, {2}));
  EXPECT_EQ(expand(S(1, 2, 5)), CF({}, {1}));
  EXPECT_EQ(expand(S(9, 1, 105)), CF({19}, {4, 20}));
}

TEST(Expand, HandIterationOf9PlusRoot105) {
  // Recorded by hand: (9,1) a=19 -> (10,5) a=4 -> (10,1) a=20 -> (10,5) repeats.
  const auto hand = oracle::hand_expand(9, 1, 105);
  const std::vector<std::pair<std::int64_t, std::int64_t>> states{{9, 1}, {10, 5}, {10, 1}};
  EXPECT_EQ(hand.states, states);
  EXPECT_EQ(hand.quotients, (std::vector<std::int64_t>{19, 4, 20}));
  EXPECT_EQ(hand.period_start, 1u);
}

TEST(Expand, RootsOfNonSquaresBelow100MatchDecimalOracle) {
  for (long d = 2; d < 100; ++d) {
    if (is_perfect_square(d)) continue;
    const PeriodicCF cf = expand(S(0, 1, d));
    ASSERT_EQ(cf.preperiod.size(), 1u);
    ASSERT_EQ(cf.period.back(), 2 * cf.preperiod[0]) << d;
    const std::size_t count = 1 + 3 * cf.period.size();
    const auto naive = oracle::naive_cf(oracle::surd_value(0, 1, d, 4000), count);
    for (std::size_t i = 0; i < count; ++i) {
      const Integer& got = i == 0 ? cf.preperiod[0] : cf.period[(i - 1) % cf.period.size()];
      ASSERT_EQ(got, naive[i]) << "sqrt(" << d << ") term " << i;
    }
  }
}

TEST(Expand, AgreesWithHandIterationOnRandomSurds) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const QuadraticSurd s = random_surd(rng);
    const auto hand = oracle::hand_expand(s.p().get_si(), s.q().get_si(), s.d().get_si());
    PeriodicCF raw;
    for (std::size_t j = 0; j < hand.quotients.size(); ++j) {
      (j < hand.period_start ? raw.preperiod : raw.period).emplace_back(hand.quotients[j]);
    }
    ASSERT_EQ(expand(s), canonical(raw)) << s.p() << " " << s.q() << " " << s.d();
  }
}

TEST(Expand, PurelyPeriodicExactlyWhenReduced) {
  std::mt19937_64 rng(2024);
  int reduced = 0;
  for (int i = 0; i < 500; ++i) {
    const QuadraticSurd s = random_surd(rng);
    const PeriodicCF cf = expand(s);
    ASSERT_EQ(cf.preperiod.empty(), is_reduced(s)) << s.p() << " " << s.q() << " " << s.d();
    reduced += is_reduced(s) ? 1 : 0;
  }
  EXPECT_GT(reduced, 0);
}

TEST(Expand, BudgetExceeded) {
  // sqrt(94) has period 16.
  try {
    expand(S(0, 1, 94), 5);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.steps(), 5u);
  }
  EXPECT_NO_THROW(expand(S(0, 1, 94), 100));
}

TEST(Canonical, RollsBackAndShortensPeriod) {
  EXPECT_EQ(canonical(CF({2}, {2})), CF({}, {2}));
  EXPECT_EQ(canonical(CF({4}, {1, 4})), CF({}, {4, 1}));
  EXPECT_EQ(canonical(CF({1}, {2, 2, 2})), CF({1}, {2}));
  EXPECT_EQ(canonical(CF({7, 3}, {1, 3, 1, 3})), CF({7}, {3, 1}));
  EXPECT_THROW(canonical(CF({1}, {})), UsageError);
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(S(1, 1, 2)), (std::array<Integer, 3>{1, -2, -1}));
  EXPECT_EQ(minimal_polynomial(S(9, 3, 105)), (std::array<Integer, 3>{3, -18, -8}));
  EXPECT_TRUE(is_algebraic_integer(S(1, 2, 5)));
  EXPECT_FALSE(is_algebraic_integer(S(9, 3, 105)));
}

}  // namespace
}  // namespace surdcf
