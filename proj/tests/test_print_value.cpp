#include <gtest/gtest.h>

#include "rvec/corpus.hpp"
#include "rvec/print_value.hpp"

using namespace rvec;

namespace {
std::string show(const std::string& src) { return run_source(src).output; }
}  // namespace

TEST(Print, Scalars) {
  EXPECT_EQ(show("5"), "[1] 5\n");
  EXPECT_EQ(show("-0.5"), "[1] -0.5\n");
  EXPECT_EQ(show("TRUE"), "[1] TRUE\n");
  EXPECT_EQ(show("NA"), "[1] NA\n");
  EXPECT_EQ(show("\"a\\\"b\""), "[1] \"a\\\"b\"\n");
  EXPECT_EQ(show("NULL"), "NULL\n");
}

TEST(Print, CommonWidth) {
  EXPECT_EQ(show("c(1, NA, 3, 4)"), "[1]  1 NA  3  4\n");
  EXPECT_EQ(show("c(1, 10, 100)"), "[1]   1  10 100\n");
  EXPECT_EQ(show("c(-1, 1)"), "[1] -1  1\n");
  EXPECT_EQ(show("c(TRUE, NA, FALSE)"), "[1]  TRUE    NA FALSE\n");
  EXPECT_EQ(show("c(0.5, 100)"), "[1]   0.5 100.0\n");
  EXPECT_EQ(show("c(1, 1/0, -1/0, 0/0)"), "[1]    1  Inf -Inf  NaN\n");
}

TEST(Print, CharactersAreLeftAligned) {
  EXPECT_EQ(show("c(\"a\", \"bbb\")"), "[1] \"a\"   \"bbb\"\n");
}

TEST(Print, EmptyVectors) {
  EXPECT_EQ(show("c(1, 2)[0]"), "numeric(0)\n");
  EXPECT_EQ(show("c(TRUE)[0]"), "logical(0)\n");
  EXPECT_EQ(show("c(\"a\")[0]"), "character(0)\n");
}

TEST(Print, WrapsAtEightyColumns) {
  std::string src = "c(";
  for (int i = 1; i <= 40; ++i) src += (i > 1 ? "," : "") + std::to_string(i * 100);
  src += ")";
  EXPECT_EQ(show(src),
            " [1]  100  200  300  400  500  600  700  800  900 1000 1100 1200 1300 1400 1500\n"
            "[16] 1600 1700 1800 1900 2000 2100 2200 2300 2400 2500 2600 2700 2800 2900 3000\n"
            "[31] 3100 3200 3300 3400 3500 3600 3700 3800 3900 4000\n");
}

TEST(Print, Matrices) {
  EXPECT_EQ(show("matrix(c(1,2,3,4), c(2,2))"), "     [,1] [,2]\n[1,]    1    3\n[2,]    2    4\n");
  EXPECT_EQ(show("matrix(c(\"a\",\"bb\"), c(1,2))"), "     [,1] [,2]\n[1,] \"a\"  \"bb\"\n");
  EXPECT_EQ(show("matrix(c(1000000,2), c(2,1))"), "      [,1]\n[1,] 1e+06\n[2,] 2e+00\n");
  EXPECT_EQ(show("matrix(c(1), c(0,0))"), "<0 x 0 matrix>\n");
}

TEST(Print, Arrays) {
  EXPECT_EQ(show("array(c(1,2), c(2))"), "[1] 1 2\n");
  EXPECT_EQ(show("array(c(1,2,3,4), c(1,2,2))"),
            ", , 1\n\n     [,1] [,2]\n[1,]    1    2\n\n, , 2\n\n     [,1] [,2]\n[1,]    3    4\n\n");
}

TEST(Print, Functions) {
  EXPECT_EQ(show("c"), "function (...)  .Primitive(\"c\")\n");
  EXPECT_EQ(show("function(a)   a + 1"), "function(a)   a + 1\n");
}

TEST(Print, QuoteString) {
  EXPECT_EQ(quote_string("a\tb\\"), "\"a\\tb\\\\\"");
}
