#pragma once

// Exact Bell numbers and quantities derived from them.

#include <cstddef>
#include <vector>

#include "bellcert/big_nat.hpp"
#include "bellcert/hp_real.hpp"

namespace bellcert {

using Index = long;

struct Limits {
  // Largest index the Bell triangle may be built to.
  Index max_index = 20000;
};

// Process-wide default limits; the CLI overrides them from the environment.
Limits default_limits();
void set_default_limits(Limits limits);

// B_0..B_{n_max}, exact.
class BellTable {
 public:
  BellTable() = default;
  explicit BellTable(std::vector<BigNat> values) : values_(std::move(values)) {}

  Index n_max() const { return static_cast<Index>(values_.size()) - 1; }
  const BigNat& operator[](Index n) const { return values_.at(static_cast<std::size_t>(n)); }
  const std::vector<BigNat>& values() const { return values_; }

 private:
  std::vector<BigNat> values_;
};

// Bell triangle (Aitken array): O(n_max^2) big-integer additions.
// Throws ResourceLimitError when n_max exceeds limits.max_index.
BellTable bell_table(Index n_max, Limits limits = default_limits());

// Memoized B_n. The memo grows on demand and is safe to query from several
// threads.
const BigNat& bell(Index n);

// Makes sure the memo is filled through n (so later bell() calls are reads).
void prefetch_bell(Index n);

// Largest index currently memoized.
Index memoized_bell_max();

// Independent computation of B_n from the Dobinski series
// (1/e) sum_k k^n / k!, evaluated in ball arithmetic with a certified tail.
// Throws IndeterminateError when the final ball does not pin down a unique
// integer at the given precision.
BigNat bell_dobinski_oracle(Index n, Precision precision);

// Same, doubling the precision until the result is certified.
BigNat bell_dobinski_certified(Index n, Precision start_precision = 256);

// ln B_n from the exact value.
HPReal log_bell(Index n, Precision precision = kDefaultPrecision);

// B_n / B_{n-1} from the exact values, n >= 1.
HPReal bell_ratio_exact(Index n, Precision precision = kDefaultPrecision);

}  // namespace bellcert
