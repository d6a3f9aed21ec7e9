#include "bellcert/certified_bounds.hpp"

#include <string>

#include "bellcert/errors.hpp"
#include "bellcert/lambert_w.hpp"

namespace bellcert {
namespace {

constexpr Index kRelativeFrom = 11;
constexpr Index kUpperByEnFrom = 311;
constexpr Index kRefinedFrom = 6;

void require(Index n, Index from, const char* what) {
  if (n < from) {
    throw ValidityError(std::string(what) + " holds for n >= " + std::to_string(from) +
                        ", got n = " + std::to_string(n));
  }
}

Precision guard(Precision p) { return p + kAsymptoticGuardBits; }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kIndeterminate: return "INDETERMINATE";
  }
  return "?";
}

Verdict Enclosure::check(const HPReal& value) const {
  if (certainly_less_equal(lo, value) && certainly_less_equal(value, hi)) return Verdict::kPass;
  if (certainly_less(value, lo) || certainly_less(hi, value)) return Verdict::kFail;
  return Verdict::kIndeterminate;
}

HPReal Enclosure::width() const { return hi - lo; }

Enclosure enclosure_master(Index n, Precision precision) {
  require(n, 1, "the second-order enclosure");
  const Precision wp = guard(precision);
  HPReal e = log_e(n, wp).log_value;
  HPReal r = w_at(n + 1, wp);
  HPReal q = q_of_r(r);
  HPReal slack = exp(r * -2) * 8 / 5;
  return Enclosure{(e + log(q - slack)).with_precision(precision),
                   (e + log(q + slack)).with_precision(precision),
                   "B_n/E_n = q_n +/- 1.6 e^{-2W(n+1)}",
                   1,
                   Scale::kLog,
                   {}};
}

Enclosure enclosure_prop_main(Index n, Precision precision) {
  require(n, kRelativeFrom, "|B_n/E_n - 1| <= e^{-W(n+1)}/11");
  const Precision wp = guard(precision);
  HPReal e = log_e(n, wp).log_value;
  HPReal t = exp(-w_at(n + 1, wp)) / 11;
  HPReal lo = e + log1p(-t);
  HPReal hi = n >= kUpperByEnFrom ? e : e + log1p(t);
  return Enclosure{lo.with_precision(precision), hi.with_precision(precision),
                   n >= kUpperByEnFrom ? "E_n (1 - e^{-W(n+1)}/11) <= B_n <= E_n"
                                         : "|B_n/E_n - 1| <= e^{-W(n+1)}/11",
                   kRelativeFrom, Scale::kLog, {}};
}

Enclosure enclosure_estar(Index n, Precision precision) {
  require(n, 2, "(1 - ln n/(5n)) E*_n <= B_n <= E*_n");
  const Precision wp = guard(precision);
  HPReal es = log_e_star(n, wp).log_value;
  HPReal shrink = log(HPReal(n, wp)) / (5 * n);
  return Enclosure{(es + log1p(-shrink)).with_precision(precision), es.with_precision(precision),
                   "(1 - ln n/(5n)) E*_n <= B_n <= E*_n", 2, Scale::kLog, {}};
}

HPReal elementary_lower(Index n, Precision precision) {
  require(n, 2, "(n/(e ln n))^n <= B_n");
  const Precision wp = guard(precision);
  HPReal ln_n = log(HPReal(n, wp));
  return ((ln_n - 1 - log(ln_n)) * n).with_precision(precision);
}

HPReal elementary_upper(Index n, Precision precision) {
  require(n, 2, "B_n <= (3n/(4 ln n))^n");
  const Precision wp = guard(precision);
  HPReal ln_n = log(HPReal(n, wp));
  return (log(HPReal(3 * n, wp) / (ln_n * 4)) * n).with_precision(precision);
}

HPReal elementary_refined_upper(Index n, Precision precision) {
  require(n, kRefinedFrom, "B_n <= ((n/(e ln n))(1 + 3 ln ln n/ln n))^n");
  const Precision wp = guard(precision);
  HPReal ln_n = log(HPReal(n, wp));
  HPReal lnln = log(ln_n);
  return ((ln_n - 1 - lnln + log1p(lnln * 3 / ln_n)) * n).with_precision(precision);
}

Enclosure enclosure_elementary(Index n, Precision precision) {
  require(n, 2, "the elementary enclosure");
  HPReal hi = elementary_upper(n, precision);
  std::string label = "(n/(e ln n))^n <= B_n <= (3n/(4 ln n))^n";
  if (n >= kRefinedFrom) {
    hi = min(hi, elementary_refined_upper(n, precision));
    label += ", refined upper";
  }
  return Enclosure{elementary_lower(n, precision), std::move(hi), label, 2, Scale::kLog, {}};
}

Enclosure ratio_enclosure(Index n, Precision precision) {
  require(n, 1, "the consecutive-ratio enclosure");
  const Precision wp = guard(precision);
  HPReal w = w_at(n, wp);
  HPReal center = HPReal(n, wp) / w;
  HPReal half_width = 8 / (w * 7);
  return Enclosure{(center - half_width).with_precision(precision),
                   (center + half_width).with_precision(precision),
                   "|B_n/B_{n-1} - e^{W(n)}| <= (8/7)/W(n)", 1, Scale::kLinear, {}};
}

Enclosure best_enclosure(Index n, Precision precision) {
  require(n, 1, "best_enclosure");
  std::vector<Enclosure> parts;
  parts.push_back(enclosure_master(n, precision));
  if (n >= 2) {
    parts.push_back(enclosure_estar(n, precision));
    parts.push_back(enclosure_elementary(n, precision));
  }
  if (n >= kRelativeFrom) parts.push_back(enclosure_prop_main(n, precision));

  // Every true value is >= each lo and <= each hi, so the directed endpoints
  // bound it.
  HPReal lo = parts.front().lo.lower();
  HPReal hi = parts.front().hi.upper();
  Enclosure out{HPReal(precision), HPReal(precision), "intersection", 1, Scale::kLog, {}};
  for (const Enclosure& e : parts) {
    HPReal l = e.lo.lower();
    HPReal h = e.hi.upper();
    if (mpfr_greater_p(l.mid(), lo.mid())) lo = std::move(l);
    if (mpfr_less_p(h.mid(), hi.mid())) hi = std::move(h);
    out.contributors.push_back(e.theorem);
  }
  if (mpfr_greater_p(lo.mid(), hi.mid())) {
    throw InternalError("best_enclosure: empty intersection at n = " + std::to_string(n) +
                        " (lo " + lo.to_string() + " > hi " + hi.to_string() + ")");
  }
  out.lo = std::move(lo);
  out.hi = std::move(hi);
  return out;
}

DigitRange digit_count(Index n, Precision precision) {
  Enclosure e = best_enclosure(n, precision);
  const Precision wp = guard(precision);
  HPReal ln10 = log(HPReal(10, wp));
  HPReal lo10 = e.lo.with_precision(wp) / ln10;
  HPReal hi10 = e.hi.with_precision(wp) / ln10;
  // B_n >= 1 always has at least one digit.
  long lo = std::max(1L, lo10.floor_of_lower() + 1);
  long hi = std::max(1L, hi10.floor_of_upper() + 1);
  return {lo, hi};
}

}  // namespace bellcert
