#pragma once

// Midpoint-radius ("ball") real arithmetic on top of MPFR.
//
// An HPReal is a pair (mid, rad): the true value it stands for lies in
// [mid - rad, mid + rad]. The midpoint carries the working precision; the
// radius is a short float that is only ever rounded upwards. Every operation
// propagates the input radii and adds the rounding error of the midpoint, so
// the containment invariant survives arbitrary composition.

#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bellcert {

class BigNat;

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 192;

// Outcome of comparing two balls: decided either way or overlapping.
enum class Ordering { kLess, kGreater, kOverlap };

class HPReal {
 public:
  explicit HPReal(Precision prec = kDefaultPrecision);
  HPReal(long value, Precision prec);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  static HPReal from_double(double value, Precision prec);
  static HPReal from_big(const BigNat& value, Precision prec);
  static HPReal from_ratio(long num, long den, Precision prec);
  // Decimal or scientific literal; the parse rounding goes into the radius.
  static HPReal from_string(std::string_view text, Precision prec);
  static HPReal pi(Precision prec);
  static HPReal ln2(Precision prec);
  static HPReal pow2(long exponent, Precision prec);
  // `value` rounded to `prec`; radius zero unless rounding occurred.
  static HPReal point(mpfr_srcptr value, Precision prec);

  Precision precision() const { return prec_; }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  double mid_double() const;
  double rad_double() const;
  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }

  // Directed endpoints at the working precision.
  HPReal lower() const;
  HPReal upper() const;

  // True when the accumulated radius is small compared with the working
  // precision: rad <= max(1, |mid|) * 2^(-prec/2).
  bool is_reliable() const;

  // Adds `extra` (an absolute bound, >= 0) to the radius.
  HPReal& widen(const HPReal& extra);
  HPReal& widen_pow2(long exponent);
  HPReal with_precision(Precision prec) const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonnegative() const;
  bool contains_zero() const;
  bool contains(const HPReal& inner) const;

  // Nearest integer of the midpoint, if the whole ball rounds to it with the
  // given slack (|x - m| <= slack < 1/2 for every x in the ball).
  std::optional<long> certain_nearest_long(double slack) const;

  // floor of every point in the ball, when they all agree.
  std::optional<long> certain_floor() const;
  long floor_of_lower() const;
  long floor_of_upper() const;

  // Midpoint with `digits` significant digits.
  std::string to_string(int digits = 12) const;
  // "mid +/- rad".
  std::string to_ball_string(int digits = 12) const;

  HPReal& operator+=(const HPReal& rhs);
  HPReal& operator-=(const HPReal& rhs);
  HPReal& operator*=(const HPReal& rhs);
  HPReal& operator/=(const HPReal& rhs);

  friend HPReal operator+(HPReal lhs, const HPReal& rhs) { return lhs += rhs; }
  friend HPReal operator-(HPReal lhs, const HPReal& rhs) { return lhs -= rhs; }
  friend HPReal operator*(HPReal lhs, const HPReal& rhs) { return lhs *= rhs; }
  friend HPReal operator/(HPReal lhs, const HPReal& rhs) { return lhs /= rhs; }
  friend HPReal operator+(HPReal lhs, long rhs);
  friend HPReal operator-(HPReal lhs, long rhs);
  friend HPReal operator-(long lhs, const HPReal& rhs);
  friend HPReal operator+(long lhs, HPReal rhs) { return std::move(rhs) + lhs; }
  friend HPReal operator*(HPReal lhs, long rhs);
  friend HPReal operator*(long lhs, HPReal rhs) { return std::move(rhs) * lhs; }
  friend HPReal operator/(HPReal lhs, long rhs);
  friend HPReal operator/(long lhs, const HPReal& rhs);
  HPReal operator-() const;

 private:
  friend class BallOps;

  Precision prec_;
  mpfr_t mid_;
  mpfr_t rad_;
};

HPReal abs(const HPReal& x);
HPReal exp(const HPReal& x);
HPReal expm1(const HPReal& x);
HPReal log(const HPReal& x);
HPReal log1p(const HPReal& x);
HPReal sqrt(const HPReal& x);
HPReal cos(const HPReal& x);
HPReal square(const HPReal& x);
HPReal pow(const HPReal& x, long exponent);
// ln(n!) for a non-negative integer, correctly rounded by MPFR.
HPReal log_factorial(long n, Precision prec);

// Pointwise min/max of the true values: the result is a ball guaranteed to
// contain min(x, y) (resp. max) for every x, y in the inputs.
HPReal min(const HPReal& a, const HPReal& b);
HPReal max(const HPReal& a, const HPReal& b);

Ordering compare(const HPReal& a, const HPReal& b);
bool certainly_less(const HPReal& a, const HPReal& b);
bool certainly_less_equal(const HPReal& a, const HPReal& b);

// Ball [lo.lower, hi.upper] with no internal overlap assumptions.
HPReal hull(const HPReal& lo, const HPReal& hi);

}  // namespace bellcert
