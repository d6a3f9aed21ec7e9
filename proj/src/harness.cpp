#include "bellcert/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "bellcert/asymptotics.hpp"
#include "bellcert/errors.hpp"
#include "bellcert/lambert_w.hpp"

namespace bellcert {
namespace {

struct Bounds {
  std::optional<HPReal> lo;
  HPReal value;
  std::optional<HPReal> hi;
};

Verdict judge(const Bounds& b) {
  bool pass = true;
  bool fail = false;
  if (b.lo) {
    pass = pass && certainly_less_equal(*b.lo, b.value);
    fail = fail || certainly_less(b.value, *b.lo);
  }
  if (b.hi) {
    pass = pass && certainly_less_equal(b.value, *b.hi);
    fail = fail || certainly_less(*b.hi, b.value);
  }
  if (fail) return Verdict::kFail;
  return pass ? Verdict::kPass : Verdict::kIndeterminate;
}

Bounds from_enclosure(const Enclosure& e, HPReal value) {
  return {e.lo, std::move(value), e.hi};
}

Bounds evaluate(const std::string& id, Index n, Precision p) {
  const Precision wp = p + kAsymptoticGuardBits;
  if (id == "en-second-order") return from_enclosure(enclosure_master(n, p), log_bell(n, p));
  if (id == "en-relative") {
    HPReal e = log_e(n, wp).log_value;
    HPReal t = exp(-w_at(n + 1, wp)) / 11;
    return {e + log1p(-t), log_bell(n, p), e + log1p(t)};
  }
  if (id == "en-upper") return {std::nullopt, log_bell(n, p), log_e(n, p).log_value};
  if (id == "estar") return from_enclosure(enclosure_estar(n, p), log_bell(n, p));
  if (id == "elementary-lower") return {elementary_lower(n, p), log_bell(n, p), std::nullopt};
  if (id == "elementary-upper") return {std::nullopt, log_bell(n, p), elementary_upper(n, p)};
  if (id == "elementary-refined") {
    return {std::nullopt, log_bell(n, p), elementary_refined_upper(n, p)};
  }
  if (id == "en-vs-estar") {
    HPReal d = log_e(n, wp).log_value - log_e_star(n, wp).log_value;
    HPReal lo = log1p(-(HPReal(1, wp) / (2 * n)));
    return {lo, d, HPReal(0, wp)};
  }
  if (id == "en-ratio") {
    HPReal w = w_at(n, wp);
    HPReal ratio = exp(log_e(n, wp).log_value - log_e(n - 1, wp).log_value);
    return {-(1 / w), ratio - HPReal(n, wp) / w, HPReal(0, wp)};
  }
  if (id == "bell-ratio") return from_enclosure(ratio_enclosure(n, p), bell_ratio_exact(n, p));
  if (id == "q-range") {
    CorrectionFactor q = q_factor(n, wp);
    return {1 - exp(-q.r) / 12, q.q, HPReal(1, wp)};
  }
  if (id == "q-gap") {
    CorrectionFactor q = q_factor(n, wp);
    return {std::nullopt, q.q + exp(q.r * -2) * 8 / 5, HPReal(1, wp)};
  }
  if (id == "q-step") {
    CorrectionFactor q0 = q_factor(n, wp);
    CorrectionFactor q1 = q_factor(n + 1, wp);
    return {std::nullopt, abs(q1.q - q0.q), exp(-q0.r) / (10 * (n + 1))};
  }
  if (id == "bt-upper") return {std::nullopt, log_bell(n, p), bt_upper_estimate(n, p).log_value};
  throw InternalError("no evaluator for check " + id);
}

std::vector<CheckInfo> build_catalog() {
  const Index q_from = q_regime_start();
  return {
      {"en-second-order", "B_n/E_n within q_n +/- 1.6 e^{-2W(n+1)}", 1, true},
      {"en-relative", "|B_n/E_n - 1| <= e^{-W(n+1)}/11", 11, true},
      {"en-upper", "B_n <= E_n", 311, true},
      {"estar", "(1 - ln n/(5n)) E*_n <= B_n <= E*_n", 2, true},
      {"elementary-lower", "(n/(e ln n))^n <= B_n", 2, true},
      {"elementary-upper", "B_n <= (3n/(4 ln n))^n", 2, true},
      {"elementary-refined", "B_n <= ((n/(e ln n))(1 + 3 ln ln n/ln n))^n", 6, true},
      {"en-vs-estar", "(1 - 1/(2n)) E*_n <= E_n <= E*_n", 1, false},
      {"en-ratio", "-1/W(n) <= E_n/E_{n-1} - e^{W(n)} <= 0", 1, false},
      {"bell-ratio", "|B_n/B_{n-1} - e^{W(n)}| <= (8/7)/W(n)", 1, true},
      {"q-range", "1 - e^{-W(n+1)}/12 <= q_n <= 1", q_from, false},
      {"q-gap", "q_n + 1.6 e^{-2W(n+1)} <= 1", q_from, false},
      {"q-step", "|q_{n+1} - q_n| <= e^{-W(n+1)}/(10(n+1))", q_from, false},
      {"bt-upper", "B_n <= (0.792 n/ln(n+1))^n", 1, true},
  };
}

}  // namespace

Index q_regime_start() {
  // W(n+1) >= 5 iff n+1 >= 5e^5, which is not an integer.
  HPReal x = exp(HPReal(5, 128)) * 5;
  std::optional<long> f = x.certain_floor();
  if (!f) throw InternalError("5e^5 not resolved at 128 bits");
  return *f;
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = build_catalog();
  return catalog;
}

const CheckInfo* find_check(const std::string& id) {
  for (const CheckInfo& c : check_catalog()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

VerificationRecord run_check(const CheckInfo& check, Index n, Precision precision,
                             int max_escalations) {
  VerificationRecord rec;
  rec.n = n;
  rec.theorem = check.id;
  Precision p = precision;
  for (int attempt = 0;; ++attempt, p *= 2) {
    rec.precision_used = p;
    try {
      Bounds b = evaluate(check.id, n, p);
      rec.verdict = judge(b);
      rec.lo = std::move(b.lo);
      rec.value = std::move(b.value);
      rec.hi = std::move(b.hi);
    } catch (const IndeterminateError&) {
      rec.verdict = Verdict::kIndeterminate;
    }
    if (rec.verdict != Verdict::kIndeterminate || attempt >= max_escalations) break;
  }
  return rec;
}

VerifyResult verify_range(const RunConfig& config) {
  if (config.n_from > config.n_to) {
    throw ConfigError("--from " + std::to_string(config.n_from) + " exceeds --to " +
                      std::to_string(config.n_to));
  }
  if (config.n_from < 0) throw ConfigError("--from must be >= 0");
  if (config.precision < 32) throw ConfigError("precision must be at least 32 bits");

  std::vector<const CheckInfo*> selected;
  if (config.theorems.empty()) {
    for (const CheckInfo& c : check_catalog()) selected.push_back(&c);
  } else {
    for (const CheckInfo& c : check_catalog()) {
      if (std::find(config.theorems.begin(), config.theorems.end(), c.id) !=
          config.theorems.end()) {
        selected.push_back(&c);
      }
    }
    for (const std::string& id : config.theorems) {
      if (!find_check(id)) throw ConfigError("unknown theorem id '" + id + "'");
    }
  }

  VerifyResult result;
  struct Task {
    const CheckInfo* check;
    Index n;
  };
  std::vector<Task> tasks;
  Index bell_needed = -1;
  for (const CheckInfo* c : selected) {
    Index from = std::max(config.n_from, c->valid_from);
    if (from > config.n_to) {
      result.notes.push_back(c->id + ": skipped, valid from n = " + std::to_string(c->valid_from));
      continue;
    }
    if (from != config.n_from) {
      result.notes.push_back(c->id + ": clamped to n >= " + std::to_string(from));
    }
    if (c->needs_exact_bell) bell_needed = std::max(bell_needed, config.n_to);
    for (Index n = from; n <= config.n_to; ++n) tasks.push_back({c, n});
  }

  if (bell_needed >= 0) {
    Index cap = default_limits().max_index;
    if (bell_needed > cap) {
      throw ResourceLimitError("exact Bell numbers needed up to " + std::to_string(bell_needed) +
                               ", cap is " + std::to_string(cap));
    }
    prefetch_bell(bell_needed);
  }

  // Each task writes its own slot, so the output order is the task order
  // regardless of scheduling.
  result.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.records[i] =
            run_check(*tasks[i].check, tasks[i].n, config.precision, config.max_escalations);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  int jobs = std::clamp<int>(config.jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

int exit_status(const std::vector<VerificationRecord>& records) {
  bool indeterminate = false;
  for (const VerificationRecord& r : records) {
    if (r.verdict == Verdict::kFail) return 1;
    if (r.verdict == Verdict::kIndeterminate) indeterminate = true;
  }
  return indeterminate ? 3 : 0;
}

TrendRow trend_row(Index n, Precision precision) {
  if (n < 2) throw ValidityError("a_n needs n >= 2 (ln n in the denominator)");
  const Precision wp = precision + kAsymptoticGuardBits;
  HPReal scale = HPReal(n, wp) / log(HPReal(n, wp));
  HPReal rel = expm1(log_bell(n, wp) - log_e(n, wp).log_value);
  HPReal r = w_at(n + 1, wp);
  HPReal deficit = -q_deficit(r);  // q_n - 1
  HPReal slack = exp(r * -2) * 8 / 5;

  TrendRow row;
  row.n = n;
  row.a = (scale * rel).with_precision(precision);
  row.band_lo = (scale * (deficit - slack)).with_precision(precision);
  row.band_hi = (scale * (deficit + slack)).with_precision(precision);
  row.gap = (row.a + HPReal(1, precision) / 12).with_precision(precision);
  row.negative = row.a.certainly_negative()     ? Verdict::kPass
                 : row.a.certainly_nonnegative() ? Verdict::kFail
                                                 : Verdict::kIndeterminate;
  if (certainly_less(row.band_lo, row.a) && certainly_less(row.a, row.band_hi)) {
    row.in_band = Verdict::kPass;
  } else if (certainly_less_equal(row.a, row.band_lo) ||
             certainly_less_equal(row.band_hi, row.a)) {
    row.in_band = Verdict::kFail;
  } else {
    row.in_band = Verdict::kIndeterminate;
  }
  return row;
}

std::vector<TrendRow> trend_report(const std::vector<Index>& ns, Precision precision) {
  Index top = 0;
  for (Index n : ns) top = std::max(top, n);
  if (top > default_limits().max_index) {
    throw ResourceLimitError("trend needs exact B_" + std::to_string(top) + ", cap is " +
                             std::to_string(default_limits().max_index));
  }
  prefetch_bell(top);
  std::vector<TrendRow> rows;
  rows.reserve(ns.size());
  for (Index n : ns) rows.push_back(trend_row(n, precision));
  return rows;
}

std::string estimate_command(Index n, EstimateMode mode, Precision precision) {
  if (n < 0) throw DomainError("n must be >= 0");
  std::ostringstream out;
  switch (mode) {
    case EstimateMode::kExact: {
      Index cap = default_limits().max_index;
      if (n > cap) {
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the exact cap " +
                                 std::to_string(cap) +
                                 "; use --mode enclosure or --mode digits instead");
      }
      out << bell(n).to_string() << "\n";
      break;
    }
    case EstimateMode::kEnclosure: {
      Enclosure e = best_enclosure(n, precision);
      HPReal ln10 = log(HPReal(10, precision));
      out << "ln B_" << n << " in [" << e.lo.lower().to_string(17) << ", "
          << e.hi.upper().to_string(17) << "]\n";
      out << "log10 B_" << n << " in [" << (e.lo / ln10).lower().to_string(17) << ", "
          << (e.hi / ln10).upper().to_string(17) << "]\n";
      for (const std::string& c : e.contributors) out << "  from: " << c << "\n";
      break;
    }
    case EstimateMode::kDigits: {
      DigitRange d = n == 0 ? DigitRange{1, 1} : digit_count(n, precision);
      out << "digits of B_" << n << ": lo=" << d.lo << " hi=" << d.hi << "\n";
      break;
    }
  }
  return out.str();
}

std::vector<EpsilonScanRow> epsilon_scan(const HPReal& r_from, const HPReal& r_to, int steps,
                                         Precision precision) {
  if (steps < 1) throw ConfigError("--steps must be >= 1");
  if (certainly_less(r_to, r_from)) throw ConfigError("--r-to must be >= --r-from");
  std::vector<EpsilonScanRow> rows;
  for (int i = 0; i < steps; ++i) {
    HPReal r = steps == 1 ? r_from.with_precision(precision)
                          : r_from + (r_to - r_from) * i / (steps - 1);
    r = r.with_precision(precision);
    EpsilonScanRow row{optimize_epsilon(r, {}, precision), HPReal(precision), HPReal(precision)};
    row.c_scale = row.optimum.eps_scale();
    row.standard_total = total_error_coefficient(r, standard_epsilon(r), precision).total_coefficient;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bellcert
