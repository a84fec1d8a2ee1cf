#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcshms/stats.hpp"

namespace mcshms::io {

/// Malformed input; the message names the source and the offending row/column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t row, std::size_t column, const std::string& what);

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// Plain comma-separated document (no quoting). Row numbers in errors are
/// 1-based file lines; columns are 1-based.
struct CsvDocument {
    std::string source;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  // source line of each row

    std::size_t line_of(std::size_t row) const { return line_numbers.at(row); }

    /// Index of a header column; throws ParseError if missing.
    std::size_t column_index(std::string_view name) const;

    double number(std::size_t row, std::size_t column) const;
    long long integer(std::size_t row, std::size_t column) const;
};

CsvDocument parse_csv(std::istream& in, const std::string& source);
CsvDocument read_csv(const std::filesystem::path& path);

/// Result table layout: `function,<alg 1>,...,<alg m>`, one row per function.
stats::ResultTable parse_result_table(std::istream& in, const std::string& source);
stats::ResultTable read_result_table(const std::filesystem::path& path);
void write_result_table(std::ostream& out, const stats::ResultTable& table);

/// Shortest round-trip-exact decimal with 17 significant digits.
std::string format_double(double value);

std::vector<std::string> split(std::string_view text, char delimiter);
std::string_view trim(std::string_view text);

}  // namespace mcshms::io
