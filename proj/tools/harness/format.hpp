#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace cvdj::harness {

/// Shortest decimal that round-trips to the same double. inf and nan are
/// written as "inf", "-inf" and "nan".
std::string format_double(double value);

/// Fixed precision for human-readable tables.
std::string format_fixed(double value, int digits);

using CsvCell = std::variant<double, long long, std::string_view>;

/// One comma-separated line terminated by '\n'. Text cells are written
/// verbatim and must not contain commas or quotes.
void write_csv_row(std::ostream& out, std::span<const CsvCell> cells);

inline void write_csv_row(std::ostream& out, std::initializer_list<CsvCell> cells) {
  write_csv_row(out, std::span<const CsvCell>(cells.begin(), cells.size()));
}

}  // namespace cvdj::harness
