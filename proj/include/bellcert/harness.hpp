#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bellcert/bell_exact.hpp"
#include "bellcert/certified_bounds.hpp"
#include "bellcert/epsilon_bounds.hpp"
#include "bellcert/hp_real.hpp"

namespace bellcert {

struct CheckInfo {
  std::string id;
  std::string statement;
  Index valid_from;
  bool needs_exact_bell;
};

// All checks in reporting order.
const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& id);

// First n with W(n+1) >= 5, derived from a certified evaluation of 5e^5.
Index q_regime_start();

struct VerificationRecord {
  Index n = 0;
  std::string theorem;
  std::optional<HPReal> lo;  // absent for one-sided checks
  HPReal value{kDefaultPrecision};
  std::optional<HPReal> hi;
  Verdict verdict = Verdict::kIndeterminate;
  Precision precision_used = kDefaultPrecision;
};

enum class OutputFormat { kTable, kCsv, kJson };

struct RunConfig {
  std::vector<std::string> theorems;  // empty selects every check
  Index n_from = 1;
  Index n_to = 2000;
  Precision precision = kDefaultPrecision;
  OutputFormat format = OutputFormat::kTable;
  int jobs = 1;
  int max_escalations = 4;
};

struct VerifyResult {
  std::vector<VerificationRecord> records;  // sorted by (catalog order, n)
  std::vector<std::string> notes;           // clamps and skipped checks
};

// Evaluates one check at one n, doubling precision while INDETERMINATE.
VerificationRecord run_check(const CheckInfo& check, Index n, Precision precision,
                             int max_escalations = 4);

// Throws ConfigError for unknown ids or an empty range and
// ResourceLimitError when exact Bell numbers beyond the cap are needed.
VerifyResult verify_range(const RunConfig& config);

// 0 all PASS, 1 any FAIL, 3 INDETERMINATE without FAIL.
int exit_status(const std::vector<VerificationRecord>& records);

struct TrendRow {
  Index n = 0;
  HPReal a{kDefaultPrecision};  // (n / ln n)(B_n / E_n - 1)
  HPReal band_lo{kDefaultPrecision};
  HPReal band_hi{kDefaultPrecision};
  HPReal gap{kDefaultPrecision};  // a_n + 1/12
  Verdict negative = Verdict::kIndeterminate;
  Verdict in_band = Verdict::kIndeterminate;
};

// Needs n >= 2 and exact B_n.
TrendRow trend_row(Index n, Precision precision = kDefaultPrecision);
std::vector<TrendRow> trend_report(const std::vector<Index>& ns,
                                   Precision precision = kDefaultPrecision);

enum class EstimateMode { kExact, kEnclosure, kDigits };

// Human-readable result; exact mode throws ResourceLimitError past the cap.
std::string estimate_command(Index n, EstimateMode mode, Precision precision = kDefaultPrecision);

struct EpsilonScanRow {
  EpsilonBoundReport optimum;
  HPReal c_scale{kEpsilonPrecision};       // eps* e^{r/4}
  HPReal standard_total{kEpsilonPrecision};  // coefficient at eps = 1.5 e^{-r/4}
};

// steps evenly spaced values from r_from to r_to inclusive.
std::vector<EpsilonScanRow> epsilon_scan(const HPReal& r_from, const HPReal& r_to, int steps,
                                         Precision precision = kEpsilonPrecision);

}  // namespace bellcert
