#pragma once

// Log-domain asymptotic forms of the Bell numbers built from Lambert W.
//
//   E_n  = n! exp(e^R - 1) / (R^n sqrt(2 pi (n+1)(R+1))),  R = W(n+1)
//   E*_n = exp(e^{W(n)} + n W(n) - (n+1)) / sqrt(1 + W(n))
//   q_n  = Q(W(n+1)),
//   Q(x) = 1 - e^{-x} (1 - 3/(2x) - 10/x^2 - 9/x^3 + 1/x^4) / (12 (1 + 1/x)^3)

#include <string>

#include "bellcert/bell_exact.hpp"
#include "bellcert/hp_real.hpp"

namespace bellcert {

// A positive quantity stored as its natural logarithm.
struct LogMagnitude {
  HPReal log_value;
  std::string provenance;
};

struct CorrectionFactor {
  HPReal q;
  HPReal r;  // W(n+1)
  Index n = 0;
};

inline constexpr int kAsymptoticGuardBits = 32;

// ln E*_n, n >= 1.
LogMagnitude log_e_star(Index n, Precision precision = kDefaultPrecision);

// ln E_n. The formula is well defined from n = 0, which the consecutive-ratio
// checks need for E_1 / E_0.
LogMagnitude log_e(Index n, Precision precision = kDefaultPrecision);

// Q(r) and the correction 1 - Q(r) computed without cancellation.
HPReal q_of_r(const HPReal& r);
HPReal q_deficit(const HPReal& r);

CorrectionFactor q_factor(Index n, Precision precision = kDefaultPrecision);

// ln(E_n q_n).
LogMagnitude second_order_estimate(Index n, Precision precision = kDefaultPrecision);

// n ln(0.792 n / ln(n + 1)), the comparison upper bound on ln B_n.
LogMagnitude bt_upper_estimate(Index n, Precision precision = kDefaultPrecision);

// W(n) and W(n+1) as balls at `precision`, for callers composing bounds.
HPReal w_at(Index x, Precision precision);

}  // namespace bellcert
