#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>

namespace bellcert {

// Arbitrary-precision natural number. Thin value wrapper over GMP that
// refuses to go negative.
class BigNat {
 public:
  BigNat() = default;
  BigNat(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static BigNat from_string(const std::string& decimal);

  static BigNat factorial(unsigned long n);
  static BigNat binomial(unsigned long n, unsigned long k);
  static BigNat power(unsigned long base, unsigned long exponent);

  BigNat& operator+=(const BigNat& rhs) {
    mpz_add(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return *this;
  }
  BigNat& operator*=(const BigNat& rhs) {
    mpz_mul(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return *this;
  }
  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(10); }
  std::size_t bit_length() const;
  std::size_t decimal_digits() const;
  bool fits_ulong() const { return value_.fits_ulong_p(); }
  unsigned long to_ulong() const { return value_.get_ui(); }

  const mpz_class& raw() const { return value_; }

 private:
  explicit BigNat(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_;
};

}  // namespace bellcert
