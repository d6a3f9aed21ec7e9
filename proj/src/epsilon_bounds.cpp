#include "bellcert/epsilon_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "bellcert/errors.hpp"

namespace bellcert {
namespace {

void require(bool ok, const std::string& condition) {
  if (!ok) throw ValidityError("precondition violated: " + condition);
}

void require_r_at_least(const HPReal& r, long bound) {
  require(certainly_less_equal(HPReal(bound, r.precision()), r), "R >= " + std::to_string(bound));
}

void require_eps_below(const HPReal& eps, long num, long den, const std::string& text) {
  require(eps.certainly_positive(), "eps > 0");
  require(certainly_less(eps, HPReal::from_ratio(num, den, eps.precision())), "eps < " + text);
}

}  // namespace

HPReal j1_error_rhs(const HPReal& r_in, const HPReal& eps_in, Precision precision) {
  HPReal r = r_in.with_precision(precision);
  HPReal eps = eps_in.with_precision(precision);
  require_r_at_least(r, 5);
  require_eps_below(eps, 1, 1, "1");
  HPReal spread = square(eps) * exp(r);  // eps^2 e^R
  require(certainly_less(HPReal(5, precision), spread), "eps^2 e^R > 5");

  HPReal two_over_pi = HPReal(2, precision) / HPReal::pi(precision);
  HPReal first = sqrt(two_over_pi) / eps * exp(-spread / 2 - r / 2);
  HPReal second = exp(exp(r) * pow(eps, 4) / 22 - r * 2) * 6 / 5;
  HPReal third = pow(eps, 7) * exp(-spread / 2 + r * 5 / 2) / ((spread - 5) * 30);
  return first + second + third;
}

HPReal j23_rhs(const HPReal& r_in, const HPReal& eps_in, Precision precision) {
  HPReal r = r_in.with_precision(precision);
  HPReal eps = eps_in.with_precision(precision);
  require_r_at_least(r, 5);
  require_eps_below(eps, 1, 2, "1/2");
  return exp(exp(r) * (cos(eps) - 1) - r * (1 - square(eps)) / 2);
}

HPReal j4_rhs(const HPReal& r_in, const HPReal& eps_in, Precision precision) {
  HPReal r = r_in.with_precision(precision);
  HPReal eps = eps_in.with_precision(precision);
  require_r_at_least(r, 4);
  require_eps_below(eps, 1, 2, "1/2");
  HPReal er = exp(r);
  HPReal arc = exp(er * (cos(eps) - 1) - r / 2);
  HPReal far = r * exp(-(er * 2) / r + r / 2);
  return (arc + far) * 3;
}

HPReal j234_rhs(const HPReal& r_in, const HPReal& eps_in, Precision precision) {
  HPReal r = r_in.with_precision(precision);
  HPReal eps = eps_in.with_precision(precision);
  require_r_at_least(r, 5);
  require_eps_below(eps, 1, 2, "1/2");
  HPReal er = exp(r);
  HPReal near = exp(-(square(eps) * er * 11 / 24) - r * 3 / 8) * 4;
  HPReal far = r * 3 * exp(-(er * 2) / r + r / 2);
  return near + far;
}

HPReal EpsilonBoundReport::eps_scale() const { return eps * exp(r / 4); }

EpsilonBoundReport total_error_coefficient(const HPReal& r, const HPReal& eps,
                                           Precision precision) {
  HPReal j1 = j1_error_rhs(r, eps, precision);
  HPReal j234 = j234_rhs(r, eps, precision);
  HPReal scale = exp(r.with_precision(precision) * 2);
  HPReal c1 = j1 * scale;
  HPReal c234 = j234 * scale;
  HPReal total = c1 + c234;
  return EpsilonBoundReport{r.with_precision(precision),
                            eps.with_precision(precision),
                            std::move(j1),
                            std::move(j234),
                            std::move(c1),
                            std::move(c234),
                            std::move(total)};
}

HPReal standard_epsilon(const HPReal& r) {
  return exp(-r / 4) * 3 / 2;
}

HPReal epsilon_lower_guard(const HPReal& r) {
  return sqrt(HPReal::from_ratio(501, 100, r.precision()) * exp(-r));
}

EpsilonBoundReport optimize_epsilon(const HPReal& r, OptimizeOptions options,
                                    Precision precision) {
  require_r_at_least(r, 5);
  const double t_lo = std::log(epsilon_lower_guard(r).upper().mid_double());
  const double t_hi = std::log(0.5);

  auto evaluate = [&](double t) {
    return total_error_coefficient(r, HPReal::from_double(std::exp(t), precision), precision);
  };
  auto better = [](const EpsilonBoundReport& a, const EpsilonBoundReport& b) {
    return mpfr_less_p(a.total_coefficient.mid(), b.total_coefficient.mid()) != 0;
  };

  auto golden = [&](double a, double b) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    EpsilonBoundReport fc = evaluate(c);
    EpsilonBoundReport fd = evaluate(d);
    // |d ln eps| = |d eps| / eps, so the t-width is the relative eps width.
    while (b - a > options.rel_tol) {
      if (better(fc, fd)) {
        b = d;
        d = c;
        fd = std::move(fc);
        c = b - g * (b - a);
        fc = evaluate(c);
      } else {
        a = c;
        c = d;
        fc = std::move(fd);
        d = a + g * (b - a);
        fd = evaluate(d);
      }
    }
    return better(fc, fd) ? fc : fd;
  };

  EpsilonBoundReport best = golden(t_lo, t_hi);

  // Unimodality is not established, so compare against a uniform scan.
  const int m = options.scan_points;
  int best_i = 0;
  std::optional<EpsilonBoundReport> scan_best;
  for (int i = 0; i < m; ++i) {
    double t = t_lo + (t_hi - t_lo) * (i + 0.5) / m;
    EpsilonBoundReport rep = evaluate(t);
    if (!scan_best || better(rep, *scan_best)) {
      scan_best = std::move(rep);
      best_i = i;
    }
  }
  HPReal threshold = scan_best->total_coefficient * HPReal::from_double(1.0 + options.disagreement, precision);
  if (mpfr_greater_p(best.total_coefficient.mid(), threshold.mid())) {
    double step = (t_hi - t_lo) / m;
    double a = t_lo + step * std::max(0, best_i - 1) + step * 0.5;
    double b = t_lo + step * std::min(m - 1, best_i + 1) + step * 0.5;
    EpsilonBoundReport local = golden(a, b);
    best = better(local, *scan_best) ? std::move(local) : std::move(*scan_best);
  }
  return best;
}

}  // namespace bellcert
