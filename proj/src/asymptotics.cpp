#include "bellcert/asymptotics.hpp"

#include <string>

#include "bellcert/errors.hpp"
#include "bellcert/lambert_w.hpp"

namespace bellcert {
namespace {

constexpr int kMaxEscalations = 4;

// Evaluates `f` at growing working precision until the result's radius is
// small relative to the requested precision.
template <typename F>
HPReal evaluate_reliably(F&& f, Precision precision) {
  Precision wp = precision + kAsymptoticGuardBits;
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, wp *= 2) {
    HPReal v = f(wp).with_precision(precision);
    if (v.is_reliable()) return v;
  }
  throw IndeterminateError("radius did not shrink under precision escalation");
}

}  // namespace

HPReal w_at(Index x, Precision precision) {
  return lambert_w(HPReal(x, precision), precision).w;
}

LogMagnitude log_e_star(Index n, Precision precision) {
  if (n < 1) throw DomainError("log_e_star needs n >= 1");
  HPReal v = evaluate_reliably(
      [n](Precision wp) {
        HPReal w = w_at(n, wp);
        HPReal ew = HPReal(n, wp) / w;
        return ew + w * n - (n + 1) - log(w + 1) / 2;
      },
      precision);
  return {std::move(v), "E*_n"};
}

LogMagnitude log_e(Index n, Precision precision) {
  if (n < 0) throw DomainError("log_e needs n >= 0");
  HPReal v = evaluate_reliably(
      [n](Precision wp) {
        HPReal r = w_at(n + 1, wp);
        HPReal er = HPReal(n + 1, wp) / r;
        HPReal two_pi = HPReal::pi(wp) * 2;
        HPReal sigma = two_pi * (n + 1) * (r + 1);
        return log_factorial(n, wp) + er - 1 - log(r) * n - log(sigma) / 2;
      },
      precision);
  return {std::move(v), "E_n"};
}

HPReal q_deficit(const HPReal& r) {
  if (!r.certainly_positive()) throw DomainError("Q(x) needs x > 0");
  HPReal inv = 1 / r;
  HPReal inv2 = square(inv);
  // 1 - 3/(2x) - 10/x^2 - 9/x^3 + 1/x^4
  HPReal poly = 1 - inv * 3 / 2 - inv2 * 10 - inv2 * inv * 9 + square(inv2);
  HPReal denom = pow(inv + 1, 3) * 12;
  return exp(-r) * poly / denom;
}

HPReal q_of_r(const HPReal& r) { return 1 - q_deficit(r); }

CorrectionFactor q_factor(Index n, Precision precision) {
  if (n < 0) throw DomainError("q_factor needs n >= 0");
  HPReal r = w_at(n + 1, precision + kAsymptoticGuardBits);
  HPReal q = q_of_r(r).with_precision(precision);
  return {std::move(q), r.with_precision(precision), n};
}

LogMagnitude second_order_estimate(Index n, Precision precision) {
  if (n < 1) throw DomainError("second_order_estimate needs n >= 1");
  Precision wp = precision + kAsymptoticGuardBits;
  LogMagnitude e = log_e(n, wp);
  CorrectionFactor q = q_factor(n, wp);
  return {(e.log_value + log(q.q)).with_precision(precision), "E_n q_n"};
}

LogMagnitude bt_upper_estimate(Index n, Precision precision) {
  if (n < 1) throw DomainError("bt_upper_estimate needs n >= 1");
  Precision wp = precision + kAsymptoticGuardBits;
  HPReal base = HPReal::from_ratio(792, 1000, wp) * n / log(HPReal(n + 1, wp));
  return {(log(base) * n).with_precision(precision), "(0.792 n / ln(n+1))^n"};
}

}  // namespace bellcert
