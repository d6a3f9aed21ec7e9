// Command-line front end: verify / estimate / ratio / lambertw / trend / eps-scan.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellcert/asymptotics.hpp"
#include "bellcert/errors.hpp"
#include "bellcert/harness.hpp"
#include "bellcert/lambert_w.hpp"
#include "bellcert/report.hpp"

using namespace bellcert;

namespace {

constexpr int kExitUsage = 2;

long env_long(const char* name, long fallback, long min_value) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || v < min_value) {
    throw ConfigError(std::string(name) + " must be an integer >= " + std::to_string(min_value) +
                      ", got '" + raw + "'");
  }
  return v;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::kTable;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + s + "'");
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int trend_status(const std::vector<TrendRow>& rows) {
  bool indeterminate = false;
  for (const TrendRow& r : rows) {
    for (Verdict v : {r.negative, r.in_band}) {
      if (v == Verdict::kFail) return 1;
      if (v == Verdict::kIndeterminate) indeterminate = true;
    }
  }
  return indeterminate ? 3 : 0;
}

int run(int argc, char** argv) {
  Limits limits = default_limits();
  limits.max_index = env_long("BELLCERT_MAX_N", limits.max_index, 0);
  set_default_limits(limits);
  const long default_precision = env_long("BELLCERT_PRECISION", kDefaultPrecision, 32);

  CLI::App app{"Certified checks of Bell number asymptotics"};
  app.require_subcommand(1);

  std::string theorem = "all";
  long from = 1, to = 2000, precision = default_precision;
  std::string format = "table";
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "check bounds against exact values over a range");
  verify->add_option("--theorem", theorem, "check id, comma list, or 'all'");
  verify->add_option("--from", from, "first index")->capture_default_str();
  verify->add_option("--to", to, "last index")->capture_default_str();
  verify->add_option("--precision", precision, "working precision in bits");
  verify->add_option("--format", format, "table, csv or json")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag_callback("--list", [] {
    for (const CheckInfo& c : check_catalog()) {
      std::cout << c.id << "  n >= " << c.valid_from << "  " << c.statement << "\n";
    }
    throw CLI::Success();
  }, "print the check ids and exit");

  long est_n = 0;
  std::string mode = "exact";
  auto* estimate = app.add_subcommand("estimate", "exact value, enclosure or digit count of B_n");
  estimate->add_option("--n", est_n, "index")->required();
  estimate->add_option("--mode", mode, "exact, enclosure or digits")->capture_default_str();
  estimate->add_option("--precision", precision, "working precision in bits");

  long ratio_n = 1;
  auto* ratio = app.add_subcommand("ratio", "B_n/B_{n-1} against its enclosure");
  ratio->add_option("--n", ratio_n, "index")->required();
  ratio->add_option("--precision", precision, "working precision in bits");

  std::string x_text;
  auto* lw = app.add_subcommand("lambertw", "principal branch of Lambert W");
  lw->add_option("--x", x_text, "argument (decimal)")->required();
  lw->add_option("--precision", precision, "working precision in bits");

  std::vector<long> ns;
  auto* trend = app.add_subcommand("trend", "scaled deviation a_n = (n/ln n)(B_n/E_n - 1)");
  trend->add_option("--ns", ns, "indices, comma separated")->required()->delimiter(',');
  trend->add_option("--format", format, "table, csv or json");
  trend->add_option("--precision", precision, "working precision in bits");

  std::string r_from = "5", r_to = "5";
  int steps = 1;
  auto* eps = app.add_subcommand("eps-scan", "optimal segment half-width per radius");
  eps->add_option("--r-from", r_from, "first radius")->capture_default_str();
  eps->add_option("--r-to", r_to, "last radius")->capture_default_str();
  eps->add_option("--steps", steps, "number of radii")->capture_default_str();
  eps->add_option("--format", format, "table, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  if (precision < 32) throw ConfigError("precision must be at least 32 bits");
  const OutputFormat fmt = parse_format(format);

  if (*verify) {
    RunConfig config;
    if (theorem != "all") config.theorems = split_ids(theorem);
    if (theorem != "all" && config.theorems.empty()) throw ConfigError("empty --theorem");
    config.n_from = from;
    config.n_to = to;
    config.precision = precision;
    config.format = fmt;
    config.jobs = jobs;
    VerifyResult result = verify_range(config);
    for (const std::string& note : result.notes) std::cerr << "note: " << note << "\n";
    write_records(std::cout, result.records, fmt);
    return exit_status(result.records);
  }
  if (*estimate) {
    EstimateMode m;
    if (mode == "exact") m = EstimateMode::kExact;
    else if (mode == "enclosure") m = EstimateMode::kEnclosure;
    else if (mode == "digits") m = EstimateMode::kDigits;
    else throw ConfigError("unknown mode '" + mode + "'");
    std::cout << estimate_command(est_n, m, precision);
    return 0;
  }
  if (*ratio) {
    CheckInfo check = *find_check("bell-ratio");
    if (ratio_n < check.valid_from) throw ValidityError("ratio needs n >= 1");
    if (ratio_n > default_limits().max_index) {
      throw ResourceLimitError("n exceeds the exact cap " + std::to_string(default_limits().max_index));
    }
    VerificationRecord rec = run_check(check, ratio_n, precision);
    std::cout << "B_n/B_{n-1} = " << rec.value.to_string(17) << "\n"
              << "enclosure   = [" << rec.lo->to_string(17) << ", " << rec.hi->to_string(17) << "]\n"
              << "verdict     = " << to_string(rec.verdict) << "\n";
    return exit_status({rec});
  }
  if (*lw) {
    HPReal x = HPReal::from_string(x_text, precision);
    WValue v = lambert_w(x, precision);
    int digits = static_cast<int>(precision * 0.30103) - 2;
    std::cout << "W(x)     = " << v.w.to_string(digits) << "\n"
              << "radius   = " << v.w.rad_double() << "\n"
              << "residual = " << v.residual.upper().mid_double() << "\n";
    return 0;
  }
  if (*trend) {
    std::vector<TrendRow> rows = trend_report(ns, precision);
    write_trend(std::cout, rows, fmt);
    return trend_status(rows);
  }
  if (*eps) {
    std::vector<EpsilonScanRow> rows =
        epsilon_scan(HPReal::from_string(r_from, kEpsilonPrecision),
                     HPReal::from_string(r_to, kEpsilonPrecision), steps);
    write_epsilon_scan(std::cout, rows, fmt);
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Success&) {
    return 0;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
