#pragma once

// Right-hand sides of the customizable saddle-point error bounds, as
// functions of the radius R = W(n+1) and the half-width eps of the vertical
// segment through the saddle point, and a minimizer over eps for fixed R.

#include "bellcert/hp_real.hpp"

namespace bellcert {

inline constexpr Precision kEpsilonPrecision = 128;

// Central-segment error. Requires r >= 5, 0 < eps < 1, eps^2 e^r > 5.
//   sqrt(2/pi) eps^-1 exp(-eps^2 e^r / 2 - r/2)
//   + (6/5) exp(e^r eps^4 / 22 - 2r)
//   + eps^7 exp(-eps^2 e^r / 2 + 5r/2) / (30 (eps^2 e^r - 5))
HPReal j1_error_rhs(const HPReal& r, const HPReal& eps, Precision precision = kEpsilonPrecision);

// Horizontal segments. Requires r >= 5, 0 < eps < 1/2.
//   exp(e^r (cos eps - 1) - r (1 - eps^2) / 2)
HPReal j23_rhs(const HPReal& r, const HPReal& eps, Precision precision = kEpsilonPrecision);

// Remaining arc. Requires r >= 4, 0 < eps < 1/2.
//   3 [exp(e^r (cos eps - 1) - r/2) + r exp(-2 e^r / r + r/2)]
HPReal j4_rhs(const HPReal& r, const HPReal& eps, Precision precision = kEpsilonPrecision);

// Combined off-centre bound. Requires r >= 5, 0 < eps < 1/2.
//   4 exp(-(11/24) eps^2 e^r - 3r/8) + 3r exp(-2 e^r / r + r/2)
HPReal j234_rhs(const HPReal& r, const HPReal& eps, Precision precision = kEpsilonPrecision);

struct EpsilonBoundReport {
  HPReal r;
  HPReal eps;
  HPReal j1_term;
  HPReal j234_term;
  // Terms scaled by e^{2r}.
  HPReal j1_coefficient;
  HPReal j234_coefficient;
  HPReal total_coefficient;

  // eps * e^{r/4}.
  HPReal eps_scale() const;
};

// (j1 + j234) e^{2r}; preconditions of both parts apply.
EpsilonBoundReport total_error_coefficient(const HPReal& r, const HPReal& eps,
                                           Precision precision = kEpsilonPrecision);

// The fixed choice eps = (3/2) e^{-r/4}.
HPReal standard_epsilon(const HPReal& r);

// Smallest eps accepted by the optimizer: eps^2 e^r = 5.01.
HPReal epsilon_lower_guard(const HPReal& r);

struct OptimizeOptions {
  // Relative tolerance on eps.
  double rel_tol = 1e-6;
  int scan_points = 512;
  // Scan fallback triggers when golden-section is worse by this factor.
  double disagreement = 0.01;
};

// Minimizes total_coefficient over eps in (epsilon_lower_guard(r), 1/2)
// by golden-section search in ln(eps), cross-checked by a uniform scan.
EpsilonBoundReport optimize_epsilon(const HPReal& r, OptimizeOptions options = {},
                                    Precision precision = kEpsilonPrecision);

}  // namespace bellcert
