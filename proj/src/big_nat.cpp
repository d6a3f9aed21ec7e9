#include "bellcert/big_nat.hpp"

#include "bellcert/errors.hpp"

namespace bellcert {

BigNat BigNat::from_string(const std::string& decimal) {
  mpz_class v;
  if (decimal.empty() || decimal[0] == '-' || v.set_str(decimal, 10) != 0) {
    throw ConfigError("not a natural number: '" + decimal + "'");
  }
  return BigNat(std::move(v));
}

BigNat BigNat::factorial(unsigned long n) {
  mpz_class v;
  mpz_fac_ui(v.get_mpz_t(), n);
  return BigNat(std::move(v));
}

BigNat BigNat::binomial(unsigned long n, unsigned long k) {
  mpz_class v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return BigNat(std::move(v));
}

BigNat BigNat::power(unsigned long base, unsigned long exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, exponent);
  return BigNat(std::move(v));
}

std::size_t BigNat::bit_length() const {
  if (sgn(value_) == 0) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t BigNat::decimal_digits() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  return value_.get_str(10).size();
}

}  // namespace bellcert
