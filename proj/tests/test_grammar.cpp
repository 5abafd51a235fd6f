#include <gtest/gtest.h>

#include "smallknot/grammar.hpp"

using namespace smallknot;

namespace {

std::size_t column_of(auto&& fn) {
  try {
    fn();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    return e.column();
  }
  ADD_FAILURE() << "no parse_error";
  return 0;
}

}  // namespace

TEST(Grammar, Slopes) {
  EXPECT_EQ(parse_slope("inf"), extended_slope::infinity());
  EXPECT_EQ(parse_slope(" empty "), extended_slope::empty());
  EXPECT_EQ(parse_slope("-10/4"), extended_slope(fraction(-5, 2)));
  EXPECT_EQ(parse_slope("+3"), extended_slope(3));
  EXPECT_EQ(parse_fraction("6/-4"), fraction(-3, 2));
}

TEST(Grammar, BigIntegers) {
  EXPECT_EQ(parse_integer("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Grammar, ContinuedFractions) {
  EXPECT_EQ(parse_cf("2,4,-2"), (continued_fraction{2, 4, -2}));
  EXPECT_EQ(parse_cf(" 2 , 3 "), (continued_fraction{2, 3}));
  EXPECT_EQ(format_terms({2, 3, 2}), "[2,3,2]");
}

TEST(Grammar, Pairs) {
  EXPECT_EQ(parse_pair("(inf,-5/1)"), slope_pair(extended_slope::infinity(), -5));
  EXPECT_EQ(parse_pair("( empty , -12 )"), slope_pair(extended_slope::empty(), -12));
  EXPECT_THROW(parse_pair("(empty,empty)"), error);
}

TEST(Grammar, ErrorColumns) {
  EXPECT_EQ(column_of([] { parse_slope("3/0"); }), 1u);
  EXPECT_EQ(column_of([] { parse_slope("infinity"); }), 1u);
  EXPECT_EQ(column_of([] { parse_cf("2,0,3"); }), 3u);
  EXPECT_EQ(column_of([] { parse_cf("2,,3"); }), 3u);
  EXPECT_EQ(column_of([] { parse_pair("(1;2)"); }), 3u);
  EXPECT_EQ(column_of([] { parse_integer("12x"); }), 3u);
  EXPECT_EQ(column_of([] { parse_fraction(""); }), 1u);
}

TEST(Grammar, SlopeLists) {
  auto v = parse_slope_list("# comment\ninf, 0 1\n2,3 # trailing\n\n4\n");
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], extended_slope::infinity());
  EXPECT_EQ(v[5], extended_slope(4));
  try {
    parse_slope_list("1, 2\n3/0\n");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}
