#pragma once

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

// ln n! as sum_{k=2}^n ln k at the precision of `out`.
inline void log_factorial_sum(mpfr_ptr out, long n) {
  mpfr_t term;
  mpfr_init2(term, mpfr_get_prec(out));
  mpfr_set_ui(out, 0, MPFR_RNDN);
  for (long k = 2; k <= n; ++k) {
    mpfr_set_si(term, k, MPFR_RNDN);
    mpfr_log(term, term, MPFR_RNDN);
    mpfr_add(out, out, term, MPFR_RNDN);
  }
  mpfr_clear(term);
}

// ln n! from the exact factorial.
inline void log_factorial_exact(mpfr_ptr out, unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  mpfr_set_z(out, f.get_mpz_t(), MPFR_RNDN);
  mpfr_log(out, out, MPFR_RNDN);
}

}  // namespace oracle
