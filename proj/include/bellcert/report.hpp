#pragma once

#include <iosfwd>
#include <vector>

#include "bellcert/harness.hpp"

namespace bellcert {

// Columns: theorem,n,lo,value,hi,verdict,precision_bits. Numbers are ball
// midpoints with 12 significant digits; absent bounds are empty (CSV),
// null (JSON) or "-" (table).
void write_records(std::ostream& out, const std::vector<VerificationRecord>& records,
                   OutputFormat format);

void write_trend(std::ostream& out, const std::vector<TrendRow>& rows, OutputFormat format);

void write_epsilon_scan(std::ostream& out, const std::vector<EpsilonScanRow>& rows,
                        OutputFormat format);

}  // namespace bellcert
