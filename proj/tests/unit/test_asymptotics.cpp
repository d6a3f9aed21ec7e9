#include <gtest/gtest.h>

#include <cmath>

#include "bellcert/asymptotics.hpp"
#include "bellcert/bell_exact.hpp"
#include "bellcert/errors.hpp"
#include "bellcert/lambert_w.hpp"

using namespace bellcert;

TEST(Asymptotics, EStarAtOneMatchesOmegaClosedForm) {
  HPReal om = lambert_w(1, 256).w;
  HPReal closed = 1 / om + om - 2 - log(om + 1) / 2;
  HPReal v = log_e_star(1).log_value;
  EXPECT_NEAR(v.mid_double(), 0.1057389239111248, 1e-15);
  EXPECT_LT(std::abs((v - closed).mid_double()), 1e-50);
}

TEST(Asymptotics, EStarAtTenIsWithinTwentyPercent) {
  double ratio = std::exp(log_e_star(10).log_value.mid_double() - std::log(115975.0));
  EXPECT_GT(ratio, 0.8);
  EXPECT_LT(ratio, 1.2);
}

TEST(Asymptotics, EStarExponentIsTheIntegralOfW) {
  for (long n : {1L, 2L, 17L, 1000L}) {
    HPReal w = lambert_w(n).w;
    HPReal exponent = log_e_star(n).log_value + log(w + 1) / 2;
    HPReal integral = w_integral(HPReal(n, 192), 192);
    EXPECT_LT(std::abs((exponent - integral).mid_double()), 1e-40) << n;
  }
}

TEST(Asymptotics, LogEAtOneBySubstitution) {
  HPReal r = lambert_w(2).w;
  HPReal direct = (HPReal(2, 192) / r - 1) - log(r) - log(HPReal::pi(192) * 4 * (r + 1)) / 2;
  EXPECT_LT(std::abs((log_e(1).log_value - direct).mid_double()), 1e-50);
  EXPECT_NO_THROW(log_e(0));
  EXPECT_THROW(log_e(-1), DomainError);
  EXPECT_THROW(log_e_star(0), DomainError);
}

TEST(Asymptotics, QAtFiveMatchesRationalEvaluation) {
  // 1 - e^{-5} (1 - 3/10 - 10/25 - 9/125 + 1/625) / (12 (6/5)^3)
  HPReal q = q_of_r(HPReal(5, 192));
  double poly = 1 - 0.3 - 0.4 - 0.072 + 0.0016;
  EXPECT_NEAR(poly, 0.2296, 1e-15);
  double expect = 1 - std::exp(-5.0) * poly / 20.736;
  EXPECT_NEAR(q.mid_double(), expect, 1e-15);
  EXPECT_NEAR(q.mid_double(), 0.9999254, 1e-7);
}

TEST(Asymptotics, QFactorRange) {
  CorrectionFactor q = q_factor(1000);
  EXPECT_TRUE(certainly_less_equal(1 - exp(-q.r) / 12, q.q));
  EXPECT_TRUE(certainly_less_equal(q.q, HPReal(1, 192)));
  EXPECT_GT(q_factor(1000000).q.mid_double(), q.q.mid_double());
}

TEST(Asymptotics, SecondOrderEstimateTracksLogBell) {
  HPReal est = second_order_estimate(2000).log_value;
  HPReal rel = abs(expm1(log_bell(2000) - est));
  HPReal bound = exp(lambert_w(2001).w * -2) * 8 / 5;
  EXPECT_TRUE(certainly_less_equal(rel, bound));
}

TEST(Asymptotics, BerendTassaIsAnUpperBound) {
  EXPECT_NEAR(bt_upper_estimate(1).log_value.mid_double(), std::log(0.792 / std::log(2.0)), 1e-14);
  EXPECT_TRUE(certainly_less_equal(log_bell(10), bt_upper_estimate(10).log_value));
  EXPECT_TRUE(certainly_less_equal(log_bell(100), bt_upper_estimate(100).log_value));
}

TEST(Asymptotics, EnSandwichedByEStar) {
  for (long n = 1; n <= 3000; n += 7) {
    HPReal d = log_e(n).log_value - log_e_star(n).log_value;
    ASSERT_TRUE(d.certainly_negative()) << n;
    ASSERT_TRUE(certainly_less_equal(log1p(-(HPReal(1, 192) / (2 * n))), d)) << n;
  }
}

TEST(Asymptotics, ReliableAtLargeIndices) {
  EXPECT_TRUE(log_e(10000000).log_value.is_reliable());
  EXPECT_TRUE(log_e_star(10000000).log_value.is_reliable());
}
