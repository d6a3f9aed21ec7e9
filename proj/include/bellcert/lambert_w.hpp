#pragma once

// Principal branch of the Lambert W function on [0, inf), certified by a
// residual check.

#include "bellcert/hp_real.hpp"

namespace bellcert {

struct WValue {
  // Ball guaranteed to contain W(x) for every x in the argument ball.
  HPReal w;
  HPReal x;
  // |w e^w - x| at the midpoints, evaluated with extra guard bits.
  HPReal residual;
};

inline constexpr int kLambertGuardBits = 16;
inline constexpr int kLambertCheckBits = 32;
inline constexpr int kLambertMaxIterations = 64;

// Throws DomainError for x < 0 and InternalError if Halley's iteration does
// not converge or the residual exceeds max(x, 1) * 2^-(precision - 16).
WValue lambert_w(const HPReal& x, Precision precision = kDefaultPrecision);
WValue lambert_w(long x, Precision precision = kDefaultPrecision);

// e^{W(x)} = x / W(x); 1 at x = 0.
HPReal exp_w(const HPReal& x, Precision precision = kDefaultPrecision);
HPReal exp_w(long x, Precision precision = kDefaultPrecision);

// integral_0^x W(s) ds = e^{W(x)} + x W(x) - x - 1.
HPReal w_integral(const HPReal& x, Precision precision = kDefaultPrecision);

}  // namespace bellcert
