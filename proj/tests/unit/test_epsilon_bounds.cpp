#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bellcert/epsilon_bounds.hpp"
#include "bellcert/errors.hpp"

using namespace bellcert;

namespace {

HPReal R(double r) { return HPReal::from_double(r, kEpsilonPrecision); }
HPReal E(double e) { return HPReal::from_double(e, kEpsilonPrecision); }

}  // namespace

TEST(J1, StandardChoiceAtFive) {
  HPReal r = R(5);
  HPReal v = j1_error_rhs(r, standard_epsilon(r));
  EXPECT_TRUE(v.certainly_positive());
  EXPECT_TRUE(certainly_less_equal(v * exp(r * 2), HPReal::from_ratio(155, 100, 128)));
}

TEST(J1, MiddleTermDominatesAtLargeEps) {
  HPReal v = j1_error_rhs(R(5), E(0.9));
  double middle = 1.2 * std::exp(std::exp(5.0) * 0.6561 / 22 - 10);
  EXPECT_NEAR(v.mid_double() / middle, 1.0, 1e-3);
}

TEST(J1, PreconditionsAreNamed) {
  HPReal r = R(5);
  HPReal pole = sqrt(HPReal(5, 128) * exp(-r));
  try {
    j1_error_rhs(r, pole);
    FAIL() << "expected a validity error";
  } catch (const ValidityError& e) {
    EXPECT_NE(std::string(e.what()).find("eps^2 e^R > 5"), std::string::npos);
  }
  EXPECT_THROW(j1_error_rhs(R(4.9), E(0.5)), ValidityError);
  EXPECT_THROW(j1_error_rhs(r, E(1.0)), ValidityError);
}

TEST(J234, Examples) {
  HPReal v = j234_rhs(R(5), E(0.4));
  EXPECT_TRUE(v.certainly_positive());
  EXPECT_TRUE(certainly_less(v, HPReal(1, 128)));
  EXPECT_THROW(j234_rhs(R(5), E(0.5)), ValidityError);
  EXPECT_THROW(j23_rhs(R(4.5), E(0.1)), ValidityError);
  EXPECT_NO_THROW(j4_rhs(R(4), E(0.1)));
  EXPECT_THROW(j4_rhs(R(3.9), E(0.1)), ValidityError);
}

TEST(J234, DecreasesInR) {
  HPReal prev = j234_rhs(R(5), E(0.3));
  for (int i = 1; i <= 70; ++i) {
    HPReal v = j234_rhs(R(5 + 0.5 * i), E(0.3));
    EXPECT_TRUE(certainly_less(v, prev)) << i;
    prev = v;
  }
}

TEST(J234, DominatesItsParts) {
  for (double r : {5.0, 5.5, 6.0, 8.0, 12.0, 20.0, 40.0}) {
    for (double e : {0.02, 0.1, 0.25, 0.4, 0.49}) {
      HPReal sum = j23_rhs(R(r), E(e)) + j4_rhs(R(r), E(e));
      HPReal whole = j234_rhs(R(r), E(e));
      // Where the far-arc term dominates, both sides agree to many digits.
      HPReal slack = whole * (1 + HPReal::pow2(-100, 128));
      EXPECT_TRUE(certainly_less_equal(sum.lower(), slack.upper())) << r << " " << e;
    }
  }
}

TEST(TotalCoefficient, Examples) {
  HPReal r = R(5);
  EpsilonBoundReport rep = total_error_coefficient(r, standard_epsilon(r));
  EXPECT_TRUE(certainly_less_equal(rep.total_coefficient, HPReal::from_ratio(16, 10, 128)));
  EXPECT_TRUE(certainly_less_equal(rep.j1_coefficient, HPReal::from_ratio(155, 100, 128)));
  EXPECT_TRUE(certainly_less_equal(rep.j234_coefficient, HPReal::from_ratio(5, 100, 128)));
  EXPECT_NEAR(rep.eps_scale().mid_double(), 1.5, 1e-30);
  HPReal r10 = R(10);
  EpsilonBoundReport rep10 = total_error_coefficient(r10, standard_epsilon(r10));
  EXPECT_TRUE(certainly_less(rep10.total_coefficient, rep.total_coefficient));
}

TEST(Optimizer, BeatsRandomFeasibleChoices) {
  std::mt19937_64 rng(20261014);
  for (double r : {5.0, 6.5, 8.0, 12.0, 20.0}) {
    EpsilonBoundReport best = optimize_epsilon(R(r));
    double lo = std::log(epsilon_lower_guard(R(r)).mid_double());
    double hi = std::log(0.5);
    std::uniform_real_distribution<double> t(lo, hi);
    for (int k = 0; k < 20; ++k) {
      double eps = std::exp(t(rng));
      if (eps >= 0.5) continue;
      EpsilonBoundReport other = total_error_coefficient(R(r), E(eps));
      EXPECT_LE(best.total_coefficient.mid_double(),
                other.total_coefficient.mid_double() * (1 + 1e-9))
          << "r = " << r << " eps = " << eps;
    }
  }
}

TEST(Optimizer, NoWorseThanStandardChoiceAndDecreasing) {
  HPReal r5 = R(5);
  EpsilonBoundReport o5 = optimize_epsilon(r5);
  EpsilonBoundReport s5 = total_error_coefficient(r5, standard_epsilon(r5));
  EXPECT_LE(o5.total_coefficient.mid_double(), s5.total_coefficient.mid_double());
  EXPECT_LT(optimize_epsilon(R(8)).total_coefficient.mid_double(),
            o5.total_coefficient.mid_double());
  EXPECT_THROW(optimize_epsilon(R(4)), ValidityError);
}

TEST(Optimizer, Deterministic) {
  EpsilonBoundReport a = optimize_epsilon(R(7));
  EpsilonBoundReport b = optimize_epsilon(R(7));
  EXPECT_EQ(a.eps.to_string(30), b.eps.to_string(30));
}
