#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "mcshms/table_io.hpp"

using namespace mcshms;
using namespace mcshms::io;

TEST(ParseCsv, HeaderRowsAndLineNumbers) {
    std::istringstream in("a, b ,c\n1,2,3\n\n4,5,6\n");
    const auto doc = parse_csv(in, "mem");
    EXPECT_EQ(doc.header, (std::vector<std::string>{"a", "b", "c"}));
    ASSERT_EQ(doc.rows.size(), 2u);
    EXPECT_EQ(doc.line_of(1), 4u);
    EXPECT_EQ(doc.column_index("c"), 2u);
    EXPECT_EQ(doc.number(1, 1), 5.0);
    EXPECT_EQ(doc.integer(0, 2), 3);
}

TEST(ParseCsv, FieldCountErrorNamesRow) {
    std::istringstream in("a,b\n1,2\n3\n");
    try {
        parse_csv(in, "bad.csv");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.row(), 3u);
        EXPECT_NE(std::string(e.what()).find("bad.csv: row 3"), std::string::npos);
    }
}

TEST(ParseCsv, BadNumberNamesRowAndColumn) {
    std::istringstream in("a,b\n1,x2\n");
    const auto doc = parse_csv(in, "mem");
    try {
        doc.number(0, 1);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.row(), 2u);
        EXPECT_EQ(e.column(), 2u);
    }
    EXPECT_THROW(doc.column_index("zzz"), ParseError);
}

TEST(ParseCsv, EmptyInput) {
    std::istringstream in("");
    EXPECT_THROW(parse_csv(in, "empty"), ParseError);
}

TEST(ResultTableIo, ParsesScientificNotation) {
    std::istringstream in("function,A,B\nF1,7.16E+07,1.37E+04\nF2,5.00E+02,4.90E+02\n");
    const auto t = parse_result_table(in, "mem");
    EXPECT_EQ(t.algorithms, (std::vector<std::string>{"A", "B"}));
    EXPECT_EQ(t.functions, (std::vector<std::string>{"F1", "F2"}));
    EXPECT_EQ(t.values[0][0], 7.16e7);
    EXPECT_EQ(t.values[1][1], 490.0);
}

TEST(ResultTableIo, RejectsNegativeAndBadHeader) {
    std::istringstream neg("function,A\nF1,-1\n");
    try {
        parse_result_table(neg, "neg.csv");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.row(), 2u);
        EXPECT_EQ(e.column(), 2u);
    }
    std::istringstream header("name,A\nF1,1\n");
    EXPECT_THROW(parse_result_table(header, "h.csv"), ParseError);
    std::istringstream no_rows("function,A\n");
    EXPECT_THROW(parse_result_table(no_rows, "n.csv"), ParseError);
}

TEST(ResultTableIo, RoundTrip) {
    stats::ResultTable t{{"F1", "F2"}, {"A", "B"}, {{0.1, 1.0 / 3.0}, {2e-300, 12345678.901234567}}};
    std::ostringstream out;
    write_result_table(out, t);
    std::istringstream in(out.str());
    const auto back = parse_result_table(in, "rt");
    EXPECT_EQ(back.values, t.values);
    EXPECT_EQ(back.algorithms, t.algorithms);
}

TEST(FormatDouble, RoundTripExact) {
    for (double v : {0.0, 0.1, 1.0 / 3.0, 1e-310, 6.02214076e23, 418.9828872724337}) {
        const auto s = format_double(v);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << s;
    }
    EXPECT_EQ(format_double(2.0), "2");
}

TEST(Split, TrimsCells) {
    EXPECT_EQ(split(" a , b,,c ", ','), (std::vector<std::string>{"a", "b", "", "c"}));
    EXPECT_EQ(trim("  x \t"), "x");
}
