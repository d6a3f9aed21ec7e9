#include "bellcert/bell_exact.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "bellcert/errors.hpp"

namespace bellcert {
namespace {

std::atomic<Index> g_max_index{Limits{}.max_index};

void check_cap(Index n, const Limits& limits) {
  if (n < 0) throw DomainError("Bell index must be non-negative");
  if (n > limits.max_index) {
    throw ResourceLimitError("Bell index " + std::to_string(n) +
                             " exceeds the exact-table cap of " +
                             std::to_string(limits.max_index));
  }
}

// One step of the Aitken array: row has i+1 entries, next gets i+2.
void next_row(const std::vector<BigNat>& row, std::vector<BigNat>& next) {
  next.resize(row.size() + 1);
  next[0] = row.back();
  for (std::size_t j = 1; j < next.size(); ++j) {
    next[j] = next[j - 1];
    next[j] += row[j - 1];
  }
}

class BellMemo {
 public:
  BellMemo() {
    values_.emplace_back(1UL);
    row_.emplace_back(1UL);
  }

  const BigNat& get(Index n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<Index>(values_.size())) return values_[static_cast<std::size_t>(n)];
    }
    extend(n);
    std::shared_lock lock(mutex_);
    return values_[static_cast<std::size_t>(n)];
  }

  void extend(Index n) {
    check_cap(n, default_limits());
    std::unique_lock lock(mutex_);
    std::vector<BigNat> next;
    while (static_cast<Index>(values_.size()) <= n) {
      next_row(row_, next);
      row_.swap(next);
      values_.push_back(row_[0]);
    }
  }

  Index max() {
    std::shared_lock lock(mutex_);
    return static_cast<Index>(values_.size()) - 1;
  }

 private:
  std::shared_mutex mutex_;
  // deque: references handed out by get() stay valid while it grows.
  std::deque<BigNat> values_;
  std::vector<BigNat> row_;
};

BellMemo& memo() {
  static BellMemo instance;
  return instance;
}

}  // namespace

Limits default_limits() { return Limits{g_max_index.load()}; }

void set_default_limits(Limits limits) { g_max_index.store(limits.max_index); }

BellTable bell_table(Index n_max, Limits limits) {
  check_cap(n_max, limits);
  std::vector<BigNat> values;
  values.reserve(static_cast<std::size_t>(n_max) + 1);
  std::vector<BigNat> row{BigNat(1UL)};
  std::vector<BigNat> next;
  values.push_back(row[0]);
  for (Index i = 0; i < n_max; ++i) {
    next_row(row, next);
    row.swap(next);
    values.push_back(row[0]);
  }
  return BellTable(std::move(values));
}

const BigNat& bell(Index n) {
  if (n < 0) throw DomainError("Bell index must be non-negative");
  return memo().get(n);
}

void prefetch_bell(Index n) { memo().extend(n); }

Index memoized_bell_max() { return memo().max(); }

BigNat bell_dobinski_oracle(Index n, Precision precision) {
  if (n < 1) throw DomainError("Dobinski oracle needs n >= 1");
  const auto un = static_cast<unsigned long>(n);

  auto term = [&](unsigned long k) {
    return HPReal::from_big(BigNat::power(k, un), precision) /
           HPReal::from_big(BigNat::factorial(k), precision);
  };

  // Term ratios t_{k+1}/t_k = (1 + 1/k)^n / (k + 1) decrease in k, so once
  // one is below 1/2 the remaining tail is dominated by a geometric series.
  const HPReal half = HPReal::from_ratio(1, 2, precision);
  const HPReal tenth = HPReal::from_ratio(1, 10, precision);
  unsigned long k_max = 3 * static_cast<unsigned long>(std::max<Index>(n, 8));
  HPReal tail(precision);
  for (;; ++k_max) {
    HPReal t_k = term(k_max);
    HPReal ratio_here = t_k / term(k_max - 1);
    HPReal rho = term(k_max + 1) / t_k;
    if (!certainly_less(ratio_here, half) || !certainly_less(rho, half)) continue;
    tail = t_k * rho / (1 - rho);
    if (certainly_less(tail, tenth)) break;
  }

  HPReal sum(precision);
  for (unsigned long k = 1; k <= k_max; ++k) sum += term(k);
  // The tail is positive and below `tail`: fold it in as [0, tail].
  HPReal half_tail = tail.upper() / 2;
  sum += half_tail;
  sum.widen(half_tail);
  HPReal value = sum * exp(HPReal(-1, precision));

  mpz_class nearest;
  mpfr_get_z(nearest.get_mpz_t(), value.mid(), MPFR_RNDN);
  BigNat candidate = BigNat::from_string(nearest.get_str(10));
  HPReal offset = abs(value - HPReal::from_big(candidate, precision + 64));
  const HPReal budget = HPReal::from_ratio(2, 5, precision);
  if (!certainly_less(HPReal::point(value.rad(), precision), budget) ||
      !certainly_less(offset.upper(), half)) {
    throw IndeterminateError("Dobinski sum for n=" + std::to_string(n) +
                             " not certified at " + std::to_string(precision) +
                             " bits; raise the precision");
  }
  return candidate;
}

BigNat bell_dobinski_certified(Index n, Precision start_precision) {
  Precision p = start_precision;
  for (int attempt = 0; attempt < 8; ++attempt, p *= 2) {
    try {
      return bell_dobinski_oracle(n, p);
    } catch (const IndeterminateError&) {
    }
  }
  throw IndeterminateError("Dobinski sum not certified after escalation");
}

HPReal log_bell(Index n, Precision precision) {
  return log(HPReal::from_big(bell(n), precision));
}

HPReal bell_ratio_exact(Index n, Precision precision) {
  if (n < 1) throw DomainError("bell_ratio_exact needs n >= 1");
  return HPReal::from_big(bell(n), precision) / HPReal::from_big(bell(n - 1), precision);
}

}  // namespace bellcert
