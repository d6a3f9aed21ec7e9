#pragma once

// Theorem-backed enclosures for B_n (log scale) and B_n / B_{n-1}
// (linear scale).

#include <string>
#include <utility>
#include <vector>

#include "bellcert/asymptotics.hpp"
#include "bellcert/bell_exact.hpp"
#include "bellcert/hp_real.hpp"

namespace bellcert {

enum class Verdict { kPass, kFail, kIndeterminate };

const char* to_string(Verdict v);

enum class Scale { kLog, kLinear };

struct Enclosure {
  HPReal lo;
  HPReal hi;
  std::string theorem;
  Index valid_from = 1;
  Scale scale = Scale::kLog;
  // For intersections: the enclosures that took part.
  std::vector<std::string> contributors;

  // PASS when lo <= value <= hi is decided by the balls, FAIL when a
  // violation is decided, INDETERMINATE otherwise.
  Verdict check(const HPReal& value) const;
  // hi - lo (log scale: log of the max/min ratio).
  HPReal width() const;
};

// B_n / E_n within q_n +/- 1.6 e^{-2R}, n >= 1.
Enclosure enclosure_master(Index n, Precision precision = kDefaultPrecision);

// B_n / E_n within 1 +/- e^{-W(n+1)}/11 for n >= 11; upper end E_n itself
// once n >= 311.
Enclosure enclosure_prop_main(Index n, Precision precision = kDefaultPrecision);

// (1 - ln n / (5n)) E*_n <= B_n <= E*_n, n >= 2.
Enclosure enclosure_estar(Index n, Precision precision = kDefaultPrecision);

// (n / (e ln n))^n <= B_n <= (3n / (4 ln n))^n, n >= 2, with the upper end
// tightened to ((n / (e ln n))(1 + 3 ln ln n / ln n))^n from n = 6.
Enclosure enclosure_elementary(Index n, Precision precision = kDefaultPrecision);

// Pieces of the elementary enclosure, as log values.
HPReal elementary_lower(Index n, Precision precision = kDefaultPrecision);
HPReal elementary_upper(Index n, Precision precision = kDefaultPrecision);
HPReal elementary_refined_upper(Index n, Precision precision = kDefaultPrecision);

// B_n / B_{n-1} within e^{W(n)} +/- (8/7) / W(n), linear scale, n >= 1.
Enclosure ratio_enclosure(Index n, Precision precision = kDefaultPrecision);

// Intersection of every log-scale enclosure valid at n. Throws
// InternalError if the intersection is empty.
Enclosure best_enclosure(Index n, Precision precision = kDefaultPrecision);

struct DigitRange {
  long lo = 0;
  long hi = 0;
};

// Bounds on the number of decimal digits of B_n.
DigitRange digit_count(Index n, Precision precision = kDefaultPrecision);

}  // namespace bellcert
