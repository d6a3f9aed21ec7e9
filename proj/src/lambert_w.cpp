#include "bellcert/lambert_w.hpp"

#include <algorithm>
#include <string>

#include "bellcert/errors.hpp"

namespace bellcert {
namespace {

// RAII scratch for the raw Halley loop.
class Scratch {
 public:
  explicit Scratch(Precision prec) { mpfr_init2(v_, prec); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  ~Scratch() { mpfr_clear(v_); }
  operator mpfr_ptr() { return v_; }
  mpfr_ptr operator->() { return v_; }

 private:
  mpfr_t v_;
};

void initial_guess(mpfr_ptr w, mpfr_srcptr x, Precision prec) {
  Scratch l1(prec), l2(prec);
  // x / (1 + x)
  mpfr_add_ui(l1, x, 1, MPFR_RNDN);
  mpfr_div(w, x, l1, MPFR_RNDN);
  if (mpfr_cmp_ui(x, 1) > 0) {
    // ln x - ln ln x, when larger
    mpfr_log(l1, x, MPFR_RNDN);
    mpfr_log(l2, l1, MPFR_RNDN);
    mpfr_sub(l1, l1, l2, MPFR_RNDN);
    mpfr_max(w, w, l1, MPFR_RNDN);
  }
  if (mpfr_sgn(w) < 0) mpfr_set_zero(w, 1);
}

// Halley's iteration for w e^w = x; returns the iteration count used.
int halley(mpfr_ptr w, mpfr_srcptr x, Precision prec) {
  Scratch ew(prec), f(prec), fp(prec), corr(prec), t(prec), dw(prec);
  for (int it = 1; it <= kLambertMaxIterations; ++it) {
    mpfr_exp(ew, w, MPFR_RNDN);
    mpfr_mul(f, w, ew, MPFR_RNDN);
    mpfr_sub(f, f, x, MPFR_RNDN);
    if (mpfr_zero_p(f)) return it;
    // f' = e^w (w + 1), Halley denominator f' - (w + 2) f / (2w + 2)
    mpfr_add_ui(t, w, 1, MPFR_RNDN);
    mpfr_mul(fp, ew, t, MPFR_RNDN);
    mpfr_add_ui(corr, w, 2, MPFR_RNDN);
    mpfr_mul(corr, corr, f, MPFR_RNDN);
    mpfr_mul_2ui(t, t, 1, MPFR_RNDN);
    mpfr_div(corr, corr, t, MPFR_RNDN);
    mpfr_sub(fp, fp, corr, MPFR_RNDN);
    mpfr_div(dw, f, fp, MPFR_RNDN);
    mpfr_sub(w, w, dw, MPFR_RNDN);
    if (mpfr_sgn(w) < 0) mpfr_set_zero(w, 1);
    if (mpfr_zero_p(dw)) return it;
    // Converged when the step is below a few ulps of max(w, 1).
    long scale = mpfr_zero_p(w) ? 1 : std::max<long>(mpfr_get_exp(w), 1);
    if (mpfr_get_exp(dw) < scale - static_cast<long>(prec) + 4) return it;
  }
  return -1;
}

}  // namespace

WValue lambert_w(const HPReal& x, Precision precision) {
  if (!x.certainly_nonnegative()) {
    throw DomainError("lambert_w: argument must be >= 0 (only the principal branch on "
                      "[0, inf) is provided), got " + x.to_string());
  }
  const Precision wp = precision + kLambertCheckBits;
  HPReal x_mid = HPReal::point(x.mid(), wp);

  WValue out{HPReal(precision), x, HPReal(wp)};
  // W is 1/(x + e^W)-Lipschitz, and 1/(x_lo + 1) bounds that on the ball.
  HPReal x_spread = HPReal::point(x.rad(), wp) / (max(x.lower(), HPReal(0, wp)) + 1);

  if (mpfr_zero_p(x.mid())) {
    out.w.widen(x_spread.upper());
    return out;
  }

  Scratch w(wp);
  initial_guess(w, x_mid.mid(), wp);
  if (halley(w, x_mid.mid(), wp) < 0) {
    throw InternalError("lambert_w: Halley iteration did not converge for x = " +
                        x.to_string());
  }

  HPReal w_point = HPReal::point(w, precision);
  w_point = HPReal::point(w_point.mid(), wp);  // exact copy at wp
  HPReal residual = w_point * exp(w_point) - x_mid;
  HPReal residual_up = abs(residual).upper();

  // Tolerance max(x, 1) * 2^-(precision - guard).
  HPReal tol =
      (max(x_mid, HPReal(1, wp)).lower() * HPReal::pow2(-(precision - kLambertGuardBits), wp))
          .lower();
  if (!certainly_less_equal(residual_up, tol)) {
    throw InternalError("lambert_w: residual " + residual_up.to_string() +
                        " above tolerance for x = " + x.to_string());
  }

  // t e^t has slope (1 + t) e^t, increasing in t. With a <= min(W, w), the
  // mean value theorem gives |W - w| <= residual / ((1 + a) e^a). a = 0 is
  // always valid; a slightly smaller than w is used when a e^a <= x is certain.
  HPReal a(0, wp);
  HPReal cand = (w_point - max(w_point, HPReal(1, wp)) * HPReal::pow2(-(precision / 2), wp)).lower();
  if (cand.certainly_positive() && certainly_less_equal(cand * exp(cand), x_mid)) a = cand;
  HPReal slope = ((a + 1) * exp(a)).lower();
  HPReal err = (residual_up / slope).upper();
  err += x_spread.upper();

  out.w = w_point.with_precision(precision);
  out.w.widen(err.upper());
  out.residual = abs(residual);
  return out;
}

WValue lambert_w(long x, Precision precision) {
  return lambert_w(HPReal(x, precision + kLambertCheckBits), precision);
}

HPReal exp_w(const HPReal& x, Precision precision) {
  if (x.is_exact() && mpfr_zero_p(x.mid())) return HPReal(1, precision);
  if (!x.certainly_positive()) {
    throw DomainError("exp_w: argument must be > 0, got " + x.to_string());
  }
  WValue wv = lambert_w(x, precision);
  return (x / wv.w).with_precision(precision);
}

HPReal exp_w(long x, Precision precision) {
  return exp_w(HPReal(x, precision + kLambertCheckBits), precision);
}

HPReal w_integral(const HPReal& x, Precision precision) {
  if (x.is_exact() && mpfr_zero_p(x.mid())) return HPReal(0, precision);
  WValue wv = lambert_w(x, precision);
  HPReal ew = x / wv.w;
  return (ew + x * wv.w - x - 1).with_precision(precision);
}

}  // namespace bellcert
