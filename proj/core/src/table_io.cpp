#include "mcshms/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace mcshms::io {

namespace {

std::string describe(const std::string& source, std::size_t row, std::size_t column, const std::string& what) {
    std::string msg = source + ": row " + std::to_string(row);
    if (column > 0) msg += ", column " + std::to_string(column);
    return msg + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t row, std::size_t column, const std::string& what)
    : std::runtime_error(describe(source, row, column, what)), row_(row), column_(column) {}

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view text, char delimiter) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(delimiter, start);
        out.emplace_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::size_t CsvDocument::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw ParseError(source, 1, 0, "missing column '" + std::string(name) + "'");
}

double CsvDocument::number(std::size_t row, std::size_t column) const {
    const std::string& cell = rows.at(row).at(column);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
        throw ParseError(source, line_of(row), column + 1, "not a number: '" + cell + "'");
    }
    return value;
}

long long CsvDocument::integer(std::size_t row, std::size_t column) const {
    const std::string& cell = rows.at(row).at(column);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
        throw ParseError(source, line_of(row), column + 1, "not an integer: '" + cell + "'");
    }
    return value;
}

CsvDocument parse_csv(std::istream& in, const std::string& source) {
    CsvDocument doc;
    doc.source = source;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto cells = split(line, ',');
        if (!have_header) {
            if (line_no != 1) throw ParseError(source, line_no, 0, "header must be on the first line");
            doc.header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != doc.header.size()) {
            throw ParseError(source, line_no, 0,
                             "expected " + std::to_string(doc.header.size()) + " fields, found " +
                                 std::to_string(cells.size()));
        }
        doc.rows.push_back(std::move(cells));
        doc.line_numbers.push_back(line_no);
    }
    if (!have_header) throw ParseError(source, 1, 0, "empty file");
    return doc;
}

CsvDocument read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
    return parse_csv(in, path.string());
}

stats::ResultTable parse_result_table(std::istream& in, const std::string& source) {
    const CsvDocument doc = parse_csv(in, source);
    if (doc.header.size() < 2 || doc.header.front() != "function") {
        throw ParseError(source, 1, 1, "result table header must start with 'function' followed by algorithms");
    }
    stats::ResultTable table;
    table.algorithms.assign(doc.header.begin() + 1, doc.header.end());
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        if (doc.rows[r][0].empty()) throw ParseError(source, doc.line_of(r), 1, "missing function name");
        table.functions.push_back(doc.rows[r][0]);
        std::vector<double> row;
        for (std::size_t c = 1; c < doc.header.size(); ++c) {
            const double v = doc.number(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                throw ParseError(source, doc.line_of(r), c + 1, "error values must be finite and non-negative");
            }
            row.push_back(v);
        }
        table.values.push_back(std::move(row));
    }
    if (table.values.empty()) throw ParseError(source, 2, 0, "result table has no rows");
    return table;
}

stats::ResultTable read_result_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
    return parse_result_table(in, path.string());
}

void write_result_table(std::ostream& out, const stats::ResultTable& table) {
    out << "function";
    for (const auto& a : table.algorithms) out << ',' << a;
    out << '\n';
    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        out << table.functions[f];
        for (double v : table.values[f]) out << ',' << format_double(v);
        out << '\n';
    }
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

}  // namespace mcshms::io
