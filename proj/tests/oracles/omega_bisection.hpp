#pragma once

#include <mpfr.h>

#include <string>

namespace oracle {

// Root of w e^w = x on [0, max(1, x)] by plain bisection; returns a decimal
// string with `digits` significant digits.
inline std::string lambert_w_bisection(double x, mpfr_prec_t prec, int digits) {
  mpfr_t lo, hi, mid, f;
  mpfr_inits2(prec, lo, hi, mid, f, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(lo, 0, MPFR_RNDN);
  mpfr_set_d(hi, x > 1 ? x : 1, MPFR_RNDN);
  for (mpfr_prec_t i = 0; i < prec + 8; ++i) {
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_exp(f, mid, MPFR_RNDN);
    mpfr_mul(f, f, mid, MPFR_RNDN);
    if (mpfr_cmp_d(f, x) < 0) {
      mpfr_set(lo, mid, MPFR_RNDN);
    } else {
      mpfr_set(hi, mid, MPFR_RNDN);
    }
  }
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), lo);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clears(lo, hi, mid, f, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace oracle
