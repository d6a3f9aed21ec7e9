// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bellcert/asymptotics.hpp"
#include "bellcert/bell_exact.hpp"
#include "bellcert/certified_bounds.hpp"
#include "bellcert/epsilon_bounds.hpp"
#include "bellcert/harness.hpp"
#include "bellcert/lambert_w.hpp"
#include "oracles/omega_bisection.hpp"
#include "oracles/w_quadrature.hpp"

using namespace bellcert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs the harness over [from, to] for the given ids; summarizes non-PASS records.
Outcome harness_range(const std::vector<std::string>& ids, Index from, Index to) {
  RunConfig c;
  c.theorems = ids;
  c.n_from = from;
  c.n_to = to;
  c.jobs = jobs();
  VerifyResult r = verify_range(c);
  std::size_t bad = 0;
  std::string first;
  for (const auto& rec : r.records) {
    if (rec.verdict != Verdict::kPass) {
      if (bad++ == 0) first = rec.theorem + " n=" + std::to_string(rec.n) + " " + to_string(rec.verdict);
    }
  }
  std::ostringstream d;
  d << r.records.size() << " records";
  if (bad) d << ", " << bad << " not PASS, first " << first;
  return {bad == 0, d.str()};
}

void merge(Outcome& into, const Outcome& part, const std::string& label) {
  into.ok = into.ok && part.ok;
  if (!into.detail.empty()) into.detail += "; ";
  into.detail += label + ": " + part.detail;
}

Outcome exactness() {
  Outcome o;
  bool ten = bell(10) == BigNat(115975);
  int mismatches = 0;
  for (Index n = 1; n <= 50; ++n) mismatches += !(bell_dobinski_certified(n) == bell(n));
  o.ok = ten && mismatches == 0;
  o.detail = std::string("B_10 ") + (ten ? "= 115975" : "wrong") + ", Dobinski mismatches " +
             std::to_string(mismatches);
  return o;
}

Outcome prop_main() {
  Outcome o;
  merge(o, harness_range({"en-relative"}, 11, 2000), "relative");
  merge(o, harness_range({"en-upper"}, 311, 2000), "upper");
  VerificationRecord b = run_check(*find_check("en-upper"), 311, kDefaultPrecision);
  o.ok = o.ok && b.verdict == Verdict::kPass;
  o.detail += std::string("; n=311 ") + to_string(b.verdict);
  return o;
}

Outcome elementary() {
  Outcome o;
  merge(o, harness_range({"elementary-lower", "elementary-upper"}, 2, 2000), "two-sided");
  merge(o, harness_range({"elementary-refined"}, 6, 2000), "refined");
  const Precision p = kDefaultPrecision;
  HPReal v = exp(log(HPReal::from_ratio(739, 100, p) / log(HPReal(10, p))) * 10);
  bool below = certainly_less(v, HPReal(115975, p));
  o.ok = o.ok && below;
  o.detail += "; (0.739*10/ln 10)^10 = " + v.to_string(9) + (below ? " < B_10" : " not below B_10");
  return o;
}

Outcome lambert() {
  Outcome o;
  const Precision p = 192;
  int bad = 0;
  double worst = 0;
  const int points = 10000;
  for (int i = 0; i < points; ++i) {
    // x = 0, then a log grid from 1e-20 to 1e12.
    double x = i == 0 ? 0.0 : std::pow(10.0, -20.0 + 32.0 * (i - 1) / (points - 2));
    WValue w = lambert_w(HPReal::from_double(x, p), p);
    double scale = std::max(x, 1.0);
    double res = w.residual.upper().mid_double() / scale;
    worst = std::max(worst, res);
    bad += res > std::ldexp(1.0, -160);
  }
  std::string om = lambert_w(1, p).w.to_string(42);
  std::string bis = oracle::lambert_w_bisection(1.0, 320, 42);
  bool omega_ok = om.substr(0, 42) == bis.substr(0, 42) && om.rfind("0.567", 0) == 0;
  double worst_quad = 0;
  for (double x : {1.0, 10.0, 1000.0}) {
    double q = static_cast<double>(oracle::w_integral_quadrature(x));
    double ours = w_integral(HPReal::from_double(x, p), p).mid_double();
    worst_quad = std::max(worst_quad, std::abs(q - ours));
  }
  o.ok = bad == 0 && omega_ok && worst_quad <= 1e-10;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d grid points, worst residual/max(x,1) = %.3g (limit 2^-160 = %.3g); "
                "W(1) = %s (%s); worst |quadrature - identity| = %.3g",
                points, worst, std::ldexp(1.0, -160), om.substr(0, 20).c_str(),
                omega_ok ? "40 digits agree" : "disagrees", worst_quad);
  o.detail = buf;
  return o;
}

Outcome epsilon_constants() {
  Outcome o;
  const Precision p = kEpsilonPrecision;
  HPReal limit = HPReal::from_ratio(16, 10, p);
  int bad = 0;
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    HPReal r = HPReal(5, p) + HPReal(35, p) * i / 999;
    EpsilonBoundReport rep = total_error_coefficient(r, standard_epsilon(r), p);
    worst = std::max(worst, rep.total_coefficient.upper().mid_double());
    bad += !certainly_less_equal(rep.total_coefficient, limit);
  }
  HPReal r5(5, p);
  EpsilonBoundReport at5 = total_error_coefficient(r5, standard_epsilon(r5), p);
  bool j1_ok = certainly_less_equal(at5.j1_coefficient, HPReal::from_ratio(155, 100, p));
  bool j234_ok = certainly_less_equal(at5.j234_coefficient, HPReal::from_ratio(5, 100, p));
  EpsilonBoundReport opt = optimize_epsilon(r5, {}, p);
  double c = opt.eps_scale().mid_double();
  bool c_ok = c >= 1.3 && c <= 1.5;
  o.ok = bad == 0 && j1_ok && j234_ok && c_ok;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "grid max total = %.6f (%d above 1.6); r=5: j1 part %.6f, j234 part %.6f; "
                "optimize_epsilon(5): C = %.6f (want [1.3, 1.5]), coefficient %.6f",
                worst, bad, at5.j1_coefficient.mid_double(), at5.j234_coefficient.mid_double(),
                c, opt.total_coefficient.mid_double());
  o.detail = buf;
  return o;
}

Outcome trend() {
  Outcome o;
  int not_negative = 0, outside = 0, deviation = 0;
  Index first_nonneg = -1, last_nonneg = -1;
  prefetch_bell(2000);
  for (Index n = 100; n <= 2000; ++n) {
    TrendRow row = trend_row(n);
    if (row.negative != Verdict::kPass) {
      ++not_negative;
      if (first_nonneg < 0) first_nonneg = n;
      last_nonneg = n;
    }
    outside += row.in_band != Verdict::kPass;
    // |a_n - s (q_n - 1)| <= 1.6 s e^{-2R}, with s = n / ln n.
    const Precision p = kDefaultPrecision;
    HPReal s = HPReal(n, p) / log(HPReal(n, p));
    HPReal r = w_at(n + 1, p + 32);
    HPReal lhs = abs(row.a + s * q_deficit(r));
    HPReal rhs = s * exp(r * -2) * 8 / 5;
    deviation += !certainly_less_equal(lhs, rhs);
  }
  o.ok = not_negative == 0 && outside == 0 && deviation == 0;
  std::ostringstream d;
  d << "n=100..2000: a_n not negative at " << not_negative << " indices";
  if (not_negative) d << " (n=" << first_nonneg << ".." << last_nonneg << ")";
  d << ", outside band at " << outside << ", deviation bound violated at " << deviation;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // runtime limit, 0 when none is stated
    std::function<Outcome()> run;
  };
  const Index q_from = q_regime_start();
  std::vector<Criterion> criteria = {
      {1, "exactness", 1.0, exactness},
      {2, "second-order enclosure n=1..2000", 300.0,
       [] { return harness_range({"en-second-order"}, 1, 2000); }},
      {3, "E* enclosure n=2..2000", 0, [] { return harness_range({"estar"}, 2, 2000); }},
      {4, "relative and upper E_n bounds", 0, prop_main},
      {5, "elementary bounds", 0, elementary},
      {6, "consecutive ratio n=1..2000", 0, [] { return harness_range({"bell-ratio"}, 1, 2000); }},
      {7, "E_n vs E*_n and E_n/E_{n-1}, n=1..1e5", 120.0,
       [] { return harness_range({"en-vs-estar", "en-ratio"}, 1, 100000); }},
      {8, "q_n properties n=742..1e5", 0,
       [q_from] {
         Outcome o = harness_range({"q-range", "q-gap", "q-step"}, 742, 100000);
         o.ok = o.ok && q_from == 742;
         o.detail += "; regime starts at n=" + std::to_string(q_from);
         return o;
       }},
      {9, "Lambert W", 0, lambert},
      {10, "saddle-point constants", 0, epsilon_constants},
      {11, "scaled deviation a_n, n=100..2000", 0, trend},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.budget_s == 0 || secs < c.budget_s;
    bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("[%s] criterion %d %s: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs,
                c.budget_s == 0 ? "" : (in_time ? ", within budget" : ", over budget"));
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
