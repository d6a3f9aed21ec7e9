#include "bellcert/hp_real.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bellcert/big_nat.hpp"
#include "bellcert/errors.hpp"

namespace bellcert {
namespace {

// Precision of the radius. It only needs to be a faithful upper bound.
constexpr Precision kRadPrec = 32;

void ensure_exponent_range() {
  // MPFR keeps emin/emax per thread; quantities such as exp(e^R eps^4 / 22)
  // at R = 40 need the extended range.
  thread_local const bool done = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)done;
}

// Scratch radius-precision float.
class Mag {
 public:
  Mag() { mpfr_init2(v_, kRadPrec); mpfr_set_zero(v_, 1); }
  Mag(const Mag&) = delete;
  Mag& operator=(const Mag&) = delete;
  ~Mag() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }
  mpfr_ptr operator->() { return v_; }

 private:
  mpfr_t v_;
};

// rad += 2^(exp(mid) - prec) when the midpoint was rounded.
void add_rounding(mpfr_ptr rad, mpfr_srcptr mid, Precision prec, int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid)) return;
  Mag u;
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - prec, MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
}

void abs_up(mpfr_ptr out, mpfr_srcptr x) { mpfr_abs(out, x, MPFR_RNDU); }

}  // namespace

class BallOps {
 public:
  static HPReal make(Precision prec) { return HPReal(prec); }
  static mpfr_ptr mid(HPReal& x) { return x.mid_; }
  static mpfr_ptr rad(HPReal& x) { return x.rad_; }
  static void round(HPReal& x, int ternary) {
    add_rounding(x.rad_, x.mid_, x.prec_, ternary);
  }
};

HPReal::HPReal(Precision prec) : prec_(prec) {
  ensure_exponent_range();
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

HPReal::HPReal(long value, Precision prec) : HPReal(prec) {
  int t = mpfr_set_si(mid_, value, MPFR_RNDN);
  add_rounding(rad_, mid_, prec_, t);
}

HPReal::HPReal(const HPReal& other) : HPReal(other.prec_) {
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

HPReal::HPReal(HPReal&& other) noexcept : prec_(other.prec_) {
  // Leave `other` valid but empty-sized; mpfr_swap exchanges limb pointers.
  mpfr_init2(mid_, prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(mid_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this == &other) return *this;
  std::swap(prec_, other.prec_);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

HPReal::~HPReal() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

HPReal HPReal::from_double(double value, Precision prec) {
  HPReal r(prec);
  int t = mpfr_set_d(r.mid_, value, MPFR_RNDN);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

HPReal HPReal::from_big(const BigNat& value, Precision prec) {
  HPReal r(prec);
  int t = mpfr_set_z(r.mid_, value.raw().get_mpz_t(), MPFR_RNDN);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

HPReal HPReal::from_ratio(long num, long den, Precision prec) {
  if (den == 0) throw DomainError("from_ratio: zero denominator");
  return HPReal(num, prec) / den;
}

HPReal HPReal::from_string(std::string_view text, Precision prec) {
  HPReal r(prec);
  std::string s(text);
  char* end = nullptr;
  int t = mpfr_strtofr(r.mid_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw ConfigError("not a real number: '" + s + "'");
  }
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

HPReal HPReal::pi(Precision prec) {
  HPReal r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

HPReal HPReal::ln2(Precision prec) {
  HPReal r(prec);
  int t = mpfr_const_log2(r.mid_, MPFR_RNDN);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

HPReal HPReal::pow2(long exponent, Precision prec) {
  HPReal r(prec);
  mpfr_set_ui_2exp(r.mid_, 1, exponent, MPFR_RNDN);
  return r;
}

HPReal HPReal::point(mpfr_srcptr value, Precision prec) {
  HPReal r(prec);
  int t = mpfr_set(r.mid_, value, MPFR_RNDN);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

double HPReal::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double HPReal::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

HPReal HPReal::lower() const {
  HPReal r(prec_);
  mpfr_sub(r.mid_, mid_, rad_, MPFR_RNDD);
  return r;
}

HPReal HPReal::upper() const {
  HPReal r(prec_);
  mpfr_add(r.mid_, mid_, rad_, MPFR_RNDU);
  return r;
}

bool HPReal::is_reliable() const {
  if (!mpfr_number_p(mid_)) return false;
  Mag limit;
  abs_up(limit, mid_);
  if (mpfr_cmp_ui(limit, 1) < 0) mpfr_set_ui(limit, 1, MPFR_RNDU);
  mpfr_div_2si(limit, limit, prec_ / 2, MPFR_RNDD);
  return mpfr_lessequal_p(rad_, limit) != 0;
}

HPReal& HPReal::widen(const HPReal& extra) {
  Mag e;
  abs_up(e, extra.mid_);
  mpfr_add(e, e, extra.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  return *this;
}

HPReal& HPReal::widen_pow2(long exponent) {
  Mag e;
  mpfr_set_ui_2exp(e, 1, exponent, MPFR_RNDU);
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
  return *this;
}

HPReal HPReal::with_precision(Precision prec) const {
  HPReal r(prec);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  add_rounding(r.rad_, r.mid_, prec, t);
  return r;
}

bool HPReal::certainly_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool HPReal::certainly_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool HPReal::certainly_nonnegative() const {
  return mpfr_sgn(mid_) >= 0 && mpfr_cmpabs(mid_, rad_) >= 0;
}

bool HPReal::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool HPReal::contains(const HPReal& inner) const {
  return certainly_less_equal(lower(), inner.lower()) &&
         certainly_less_equal(inner.upper(), upper());
}

std::optional<long> HPReal::certain_nearest_long(double slack) const {
  if (!mpfr_number_p(mid_) || !mpfr_fits_slong_p(mid_, MPFR_RNDN)) return std::nullopt;
  long m = mpfr_get_si(mid_, MPFR_RNDN);
  HPReal target(m, prec_ + 64);
  HPReal lo = lower(), hi = upper();
  HPReal s = from_double(slack, prec_ + 64);
  // Need m - slack <= lo and hi <= m + slack.
  if (certainly_less_equal(target - s, lo) && certainly_less_equal(hi, target + s)) {
    return m;
  }
  return std::nullopt;
}

long HPReal::floor_of_lower() const {
  HPReal lo = lower();
  mpfr_t f;
  mpfr_init2(f, prec_);
  mpfr_floor(f, lo.mid_);
  long v = mpfr_get_si(f, MPFR_RNDD);
  mpfr_clear(f);
  return v;
}

long HPReal::floor_of_upper() const {
  HPReal hi = upper();
  mpfr_t f;
  mpfr_init2(f, prec_);
  mpfr_floor(f, hi.mid_);
  long v = mpfr_get_si(f, MPFR_RNDD);
  mpfr_clear(f);
  return v;
}

std::optional<long> HPReal::certain_floor() const {
  long a = floor_of_lower();
  long b = floor_of_upper();
  if (a == b) return a;
  return std::nullopt;
}

std::string HPReal::to_string(int digits) const {
  if (mpfr_zero_p(mid_)) return "0";
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), mid_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string HPReal::to_ball_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3Rg", rad_);
  std::string out = to_string(digits) + " +/- " + buf;
  mpfr_free_str(buf);
  return out;
}

HPReal& HPReal::operator+=(const HPReal& rhs) {
  if (rhs.prec_ > prec_) {
    mpfr_prec_round(mid_, rhs.prec_, MPFR_RNDN);
    prec_ = rhs.prec_;
  }
  int t = mpfr_add(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding(rad_, mid_, prec_, t);
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& rhs) {
  if (rhs.prec_ > prec_) {
    mpfr_prec_round(mid_, rhs.prec_, MPFR_RNDN);
    prec_ = rhs.prec_;
  }
  int t = mpfr_sub(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  add_rounding(rad_, mid_, prec_, t);
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& rhs) {
  Precision p = std::max(prec_, rhs.prec_);
  // |a|rb + |b|ra + ra rb
  Mag aa, bb, term;
  abs_up(aa, mid_);
  abs_up(bb, rhs.mid_);
  mpfr_mul(term, aa, rhs.rad_, MPFR_RNDU);
  mpfr_mul(bb, bb, rad_, MPFR_RNDU);
  mpfr_add(term, term, bb, MPFR_RNDU);
  mpfr_mul(aa, rad_, rhs.rad_, MPFR_RNDU);
  mpfr_add(term, term, aa, MPFR_RNDU);
  if (p > prec_) {
    mpfr_prec_round(mid_, p, MPFR_RNDN);
    prec_ = p;
  }
  int t = mpfr_mul(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_set(rad_, term, MPFR_RNDU);
  add_rounding(rad_, mid_, prec_, t);
  return *this;
}

HPReal& HPReal::operator/=(const HPReal& rhs) {
  if (rhs.contains_zero()) {
    throw DomainError("division by a ball containing zero");
  }
  Precision p = std::max(prec_, rhs.prec_);
  // (|a| rb + |b| ra) / (|b| (|b| - rb))
  Mag aa, bb, num, den;
  abs_up(aa, mid_);
  abs_up(bb, rhs.mid_);
  mpfr_mul(num, aa, rhs.rad_, MPFR_RNDU);
  mpfr_mul(den, bb, rad_, MPFR_RNDU);
  mpfr_add(num, num, den, MPFR_RNDU);
  mpfr_abs(bb, rhs.mid_, MPFR_RNDD);
  mpfr_sub(den, bb, rhs.rad_, MPFR_RNDD);
  mpfr_mul(den, den, bb, MPFR_RNDD);
  mpfr_div(num, num, den, MPFR_RNDU);
  if (p > prec_) {
    mpfr_prec_round(mid_, p, MPFR_RNDN);
    prec_ = p;
  }
  int t = mpfr_div(mid_, mid_, rhs.mid_, MPFR_RNDN);
  mpfr_set(rad_, num, MPFR_RNDU);
  add_rounding(rad_, mid_, prec_, t);
  return *this;
}

HPReal operator+(HPReal lhs, long rhs) {
  int t = mpfr_add_si(BallOps::mid(lhs), lhs.mid(), rhs, MPFR_RNDN);
  BallOps::round(lhs, t);
  return lhs;
}

HPReal operator-(HPReal lhs, long rhs) {
  int t = mpfr_sub_si(BallOps::mid(lhs), lhs.mid(), rhs, MPFR_RNDN);
  BallOps::round(lhs, t);
  return lhs;
}

HPReal operator-(long lhs, const HPReal& rhs) {
  HPReal r(rhs);
  int t = mpfr_si_sub(BallOps::mid(r), lhs, rhs.mid(), MPFR_RNDN);
  BallOps::round(r, t);
  return r;
}

HPReal operator*(HPReal lhs, long rhs) {
  mpfr_ptr rad = BallOps::rad(lhs);
  Mag k;
  mpfr_set_si(k, rhs, MPFR_RNDU);
  mpfr_abs(k, k, MPFR_RNDU);
  mpfr_mul(rad, rad, k, MPFR_RNDU);
  int t = mpfr_mul_si(BallOps::mid(lhs), lhs.mid(), rhs, MPFR_RNDN);
  BallOps::round(lhs, t);
  return lhs;
}

HPReal operator/(HPReal lhs, long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_ptr rad = BallOps::rad(lhs);
  Mag k;
  mpfr_set_si(k, rhs, MPFR_RNDD);
  mpfr_abs(k, k, MPFR_RNDD);
  mpfr_div(rad, rad, k, MPFR_RNDU);
  int t = mpfr_div_si(BallOps::mid(lhs), lhs.mid(), rhs, MPFR_RNDN);
  BallOps::round(lhs, t);
  return lhs;
}

HPReal operator/(long lhs, const HPReal& rhs) {
  return HPReal(lhs, rhs.precision()) / rhs;
}

HPReal HPReal::operator-() const {
  HPReal r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

HPReal abs(const HPReal& x) {
  HPReal r(x);
  mpfr_abs(BallOps::mid(r), r.mid(), MPFR_RNDN);
  return r;
}

HPReal exp(const HPReal& x) {
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_exp(BallOps::mid(r), x.mid(), MPFR_RNDN);
  // |exp(m + d) - mid| <= u + (|mid| + u) * expm1(rad)
  Mag g, u;
  if (!x.is_exact()) {
    mpfr_expm1(g, x.rad(), MPFR_RNDU);
    abs_up(u, r.mid());
    if (t != 0 && !mpfr_zero_p(r.mid())) {
      Mag ulp;
      mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(r.mid()) - r.precision(), MPFR_RNDU);
      mpfr_add(u, u, ulp, MPFR_RNDU);
    }
    mpfr_mul(g, g, u, MPFR_RNDU);
    mpfr_set(BallOps::rad(r), g, MPFR_RNDU);
  }
  BallOps::round(r, t);
  return r;
}

HPReal expm1(const HPReal& x) {
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_expm1(BallOps::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    // e^m = expm1(m) + 1; |expm1(m+d) - expm1(m)| <= e^m expm1(|d|)
    Mag g, u;
    mpfr_expm1(g, x.rad(), MPFR_RNDU);
    mpfr_add_ui(u, r.mid(), 1, MPFR_RNDU);
    mpfr_abs(u, u, MPFR_RNDU);
    if (t != 0 && !mpfr_zero_p(r.mid())) {
      Mag ulp;
      mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(r.mid()) - r.precision(), MPFR_RNDU);
      mpfr_add(u, u, ulp, MPFR_RNDU);
    }
    mpfr_mul(g, g, u, MPFR_RNDU);
    mpfr_set(BallOps::rad(r), g, MPFR_RNDU);
  }
  BallOps::round(r, t);
  return r;
}

HPReal log(const HPReal& x) {
  if (!x.certainly_positive()) throw DomainError("log of a ball not certainly positive");
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_log(BallOps::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    // |log(m + d) - log m| <= rad / (m - rad)
    Mag den;
    mpfr_sub(den, x.mid(), x.rad(), MPFR_RNDD);
    mpfr_div(BallOps::rad(r), x.rad(), den, MPFR_RNDU);
  }
  BallOps::round(r, t);
  return r;
}

HPReal log1p(const HPReal& x) {
  HPReal shifted = x + 1;
  if (!shifted.certainly_positive()) throw DomainError("log1p of a ball not certainly > -1");
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_log1p(BallOps::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    Mag den;
    mpfr_add_ui(den, x.mid(), 1, MPFR_RNDD);
    mpfr_sub(den, den, x.rad(), MPFR_RNDD);
    mpfr_div(BallOps::rad(r), x.rad(), den, MPFR_RNDU);
  }
  BallOps::round(r, t);
  return r;
}

HPReal sqrt(const HPReal& x) {
  if (!x.certainly_nonnegative()) throw DomainError("sqrt of a ball reaching below zero");
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_sqrt(BallOps::mid(r), x.mid(), MPFR_RNDN);
  if (!x.is_exact()) {
    if (mpfr_zero_p(x.mid())) {
      mpfr_sqrt(BallOps::rad(r), x.rad(), MPFR_RNDU);
    } else {
      // |sqrt(m + d) - sqrt(m)| <= rad / sqrt(m)
      Mag s;
      mpfr_sqrt(s, x.mid(), MPFR_RNDD);
      mpfr_div(BallOps::rad(r), x.rad(), s, MPFR_RNDU);
    }
  }
  BallOps::round(r, t);
  return r;
}

HPReal cos(const HPReal& x) {
  HPReal r = BallOps::make(x.precision());
  int t = mpfr_cos(BallOps::mid(r), x.mid(), MPFR_RNDN);
  mpfr_set(BallOps::rad(r), x.rad(), MPFR_RNDU);
  BallOps::round(r, t);
  return r;
}

HPReal square(const HPReal& x) { return x * x; }

HPReal pow(const HPReal& x, long exponent) {
  if (exponent < 0) return 1 / pow(x, -exponent);
  HPReal result(1, x.precision());
  HPReal base(x);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = square(base);
  }
  return result;
}

HPReal log_factorial(long n, Precision prec) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  HPReal r = BallOps::make(prec);
  if (n <= 1) return r;
  mpfr_set_si(BallOps::mid(r), n + 1, MPFR_RNDN);
  int t = mpfr_lngamma(BallOps::mid(r), r.mid(), MPFR_RNDN);
  BallOps::round(r, t);
  return r;
}

HPReal hull(const HPReal& lo, const HPReal& hi) {
  Precision p = std::max(lo.precision(), hi.precision());
  HPReal a = lo.lower().with_precision(p + 2);
  HPReal b = hi.upper().with_precision(p + 2);
  // Directed endpoints are exact at p bits, so the p+2 copies are exact too.
  HPReal r = BallOps::make(p);
  mpfr_add(BallOps::mid(r), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_div_2ui(BallOps::mid(r), r.mid(), 1, MPFR_RNDN);
  Mag d1, d2;
  mpfr_sub(d1, b.mid(), r.mid(), MPFR_RNDU);
  mpfr_sub(d2, r.mid(), a.mid(), MPFR_RNDU);
  mpfr_max(BallOps::rad(r), d1, d2, MPFR_RNDU);
  if (mpfr_sgn(BallOps::rad(r)) < 0) mpfr_set_zero(BallOps::rad(r), 1);
  return r;
}

HPReal min(const HPReal& a, const HPReal& b) {
  HPReal al = a.lower(), bl = b.lower(), au = a.upper(), bu = b.upper();
  const HPReal& lo = mpfr_lessequal_p(al.mid(), bl.mid()) ? al : bl;
  const HPReal& hi = mpfr_lessequal_p(au.mid(), bu.mid()) ? au : bu;
  return hull(lo, hi);
}

HPReal max(const HPReal& a, const HPReal& b) {
  HPReal al = a.lower(), bl = b.lower(), au = a.upper(), bu = b.upper();
  const HPReal& lo = mpfr_greaterequal_p(al.mid(), bl.mid()) ? al : bl;
  const HPReal& hi = mpfr_greaterequal_p(au.mid(), bu.mid()) ? au : bu;
  return hull(lo, hi);
}

bool certainly_less(const HPReal& a, const HPReal& b) {
  HPReal au = a.upper(), bl = b.lower();
  return mpfr_less_p(au.mid(), bl.mid()) != 0;
}

bool certainly_less_equal(const HPReal& a, const HPReal& b) {
  HPReal au = a.upper(), bl = b.lower();
  return mpfr_lessequal_p(au.mid(), bl.mid()) != 0;
}

Ordering compare(const HPReal& a, const HPReal& b) {
  if (certainly_less(a, b)) return Ordering::kLess;
  if (certainly_less(b, a)) return Ordering::kGreater;
  return Ordering::kOverlap;
}

}  // namespace bellcert
