#include "bellcert/report.hpp"

#include <iomanip>
#include <ostream>
#include <string>

namespace bellcert {
namespace {

constexpr int kDigits = 12;

using Row = std::vector<std::string>;

std::string num(const HPReal& x) { return x.to_string(kDigits); }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Cells marked numeric are emitted bare in JSON; empty numeric cells become null.
void emit(std::ostream& out, OutputFormat format, const Row& header,
          const std::vector<bool>& numeric, const std::vector<Row>& rows) {
  switch (format) {
    case OutputFormat::kCsv: {
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << "\n";
      for (const Row& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
      }
      break;
    }
    case OutputFormat::kJson: {
      out << "[";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        out << (k ? ",\n " : "\n ") << "{";
        for (std::size_t i = 0; i < header.size(); ++i) {
          out << (i ? ", " : "") << "\"" << header[i] << "\": ";
          const std::string& cell = rows[k][i];
          if (!numeric[i]) {
            out << "\"" << json_escape(cell) << "\"";
          } else {
            out << (cell.empty() ? "null" : cell);
          }
        }
        out << "}";
      }
      out << (rows.empty() ? "]\n" : "\n]\n");
      break;
    }
    case OutputFormat::kTable: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
      for (const Row& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], std::max<std::size_t>(r[i].size(), 1));
      }
      auto line = [&](const Row& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
              << (r[i].empty() ? "-" : r[i]);
        }
        out << "\n";
      };
      line(header);
      for (const Row& r : rows) line(r);
      break;
    }
  }
}

}  // namespace

void write_records(std::ostream& out, const std::vector<VerificationRecord>& records,
                   OutputFormat format) {
  std::vector<Row> rows;
  rows.reserve(records.size());
  for (const VerificationRecord& r : records) {
    rows.push_back({r.theorem, std::to_string(r.n), r.lo ? num(*r.lo) : "", num(r.value),
                    r.hi ? num(*r.hi) : "", to_string(r.verdict), std::to_string(r.precision_used)});
  }
  emit(out, format, {"theorem", "n", "lo", "value", "hi", "verdict", "precision_bits"},
       {false, true, true, true, true, false, true}, rows);
}

void write_trend(std::ostream& out, const std::vector<TrendRow>& rows, OutputFormat format) {
  std::vector<Row> cells;
  for (const TrendRow& r : rows) {
    cells.push_back({std::to_string(r.n), num(r.a), num(r.band_lo), num(r.band_hi), num(r.gap),
                     to_string(r.negative), to_string(r.in_band)});
  }
  emit(out, format, {"n", "a_n", "band_lo", "band_hi", "gap_to_limit", "negative", "in_band"},
       {true, true, true, true, true, false, false}, cells);
}

void write_epsilon_scan(std::ostream& out, const std::vector<EpsilonScanRow>& rows,
                        OutputFormat format) {
  std::vector<Row> cells;
  for (const EpsilonScanRow& r : rows) {
    const EpsilonBoundReport& o = r.optimum;
    cells.push_back({num(o.r), num(o.eps), num(r.c_scale), num(o.j1_coefficient),
                     num(o.j234_coefficient), num(o.total_coefficient), num(r.standard_total)});
  }
  emit(out, format, {"r", "eps_opt", "c_opt", "j1_coeff", "j234_coeff", "total_coeff", "total_at_standard_eps"},
       {true, true, true, true, true, true, true}, cells);
}

}  // namespace bellcert
