#include <gtest/gtest.h>

#include "rvec/corpus.hpp"
#include "rvec/interp.hpp"
#include "rvec/print_value.hpp"

using namespace rvec;

namespace {

std::vector<EvalOutcome> eval(const std::string& src, EvalOptions options = {}) {
  return eval_program(parse_source(src), options);
}

std::string out(const std::string& src) { return run_source(src).output; }

}  // namespace

TEST(Interp, LiteralsAreLengthOneVectors) {
  auto r = eval("5\nTRUE\n\"a\"\nNA\nNULL");
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(mode_of(*r[0].result), "numeric");
  EXPECT_EQ(mode_of(*r[1].result), "logical");
  EXPECT_EQ(mode_of(*r[2].result), "character");
  EXPECT_EQ(mode_of(*r[3].result), "logical");
  EXPECT_TRUE(is_null(*r[4].result));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(length_of(*r[i].result), 1u);
}

TEST(Interp, AssignmentIsInvisible) {
  auto r = eval("a <- c(1,2,3,4)\na\na[1] <- 9\n(a[1] <- 9)\n(b <- 2)");
  EXPECT_FALSE(r[0].visible);
  EXPECT_TRUE(r[1].visible);
  EXPECT_FALSE(r[2].visible);
  EXPECT_TRUE(r[3].visible);
  EXPECT_TRUE(r[4].visible);
  EXPECT_EQ(length_of(*r[2].result), 1u);
}

TEST(Interp, ErrorsAbortOnlyTheirStatement) {
  auto r = eval("x <- 1\nx + \"a\"\nx + 1");
  EXPECT_TRUE(r[0].ok());
  EXPECT_FALSE(r[1].ok());
  EXPECT_TRUE(r[2].ok());
}

TEST(Interp, StopOnError) {
  EvalOptions o;
  o.stop_on_error = true;
  EXPECT_EQ(eval("x + 1\n2", o).size(), 1u);
}

TEST(Interp, ClosuresCaptureTheirDefiningEnvironment) {
  EXPECT_EQ(out("make <- function(n) function(x) x + n\nadd2 <- make(2)\nn <- 100\nadd2(1)"), "[1] 3\n");
  EXPECT_EQ(out("x <- 1\nf <- function() x\nx <- 5\nf()"), "[1] 5\n");
}

TEST(Interp, LocalAssignmentDoesNotLeak) {
  EXPECT_EQ(out("x <- 1\nf <- function() { x <- 2; x }\nf()\nx"), "[1] 2\n[1] 1\n");
}

TEST(Interp, ArgumentsAreMissingOnlyWhenUsed) {
  EXPECT_EQ(out("f <- function(a, b) a\nf(1)"), "[1] 1\n");
  EXPECT_EQ(out("f <- function(a, b) b\nf(1)"), "Error in f(1) : argument \"b\" is missing, with no default\n");
}

TEST(Interp, ArityErrors) {
  EXPECT_EQ(out("f <- function(a) a\nf(1, 2, c(3, 4))"), "Error in f(1, 2, c(3, 4)) : unused arguments (2, c(3, 4))\n");
  EXPECT_EQ(out("length(1, 2)"), "Error in length(1, 2) : unused argument (2)\n");
}

TEST(Interp, CalleeErrors) {
  EXPECT_EQ(out("x <- 1\nx(2)"), "Error: attempt to apply non-function\n");
  EXPECT_EQ(out("nope(2)"), "Error in nope(2) : could not find function \"nope\"\n");
}

TEST(Interp, BuiltinsAreFirstClass) {
  EXPECT_EQ(out("f <- c\nf(1, 2)"), "[1] 1 2\n");
  EXPECT_EQ(out("apply1 <- function(g, x) g(x)\napply1(length, c(1, 2, 3))"), "[1] 3\n");
  EXPECT_EQ(out("mode(mode)"), "[1] \"function\"\n");
}

TEST(Interp, UserBindingsShadowBuiltins) {
  EXPECT_EQ(out("length <- function(x) 42\nlength(c(1, 2))"), "[1] 42\n");
}

TEST(Interp, ReplacementValueIsTheStatementValue) {
  auto r = eval("a <- c(1, 2, 3)\na[c(1, 2)] <- 0");
  ASSERT_TRUE(r[1].result);
  EXPECT_EQ(length_of(*r[1].result), 1u);
}

TEST(Interp, SubscriptAssignmentInsideFunctionIsLocal) {
  EXPECT_EQ(out("a <- c(1, 2)\nf <- function() { a[1] <- 9; a }\nf()\na"), "[1] 9 2\n[1] 1 2\n");
}

TEST(Interp, GrowthOption) {
  EvalOptions o;
  o.r_compat_growth = true;
  auto r = eval("a <- c(1, 2)\na[4] <- 9\na", o);
  EXPECT_EQ(print_value(*r[2].result), "[1]  1  2 NA  9\n");
  EXPECT_EQ(eval("a <- c(1, 2)\na[4] <- 9")[1].error->code, Code::E_OOB_ASSIGN);
}

TEST(Interp, RecursionLimit) {
  auto r = eval("f <- function(x) f(x)\nf(1)");
  ASSERT_FALSE(r[1].ok());
  EXPECT_EQ(r[1].error->code, Code::E_RECURSION_LIMIT);
}

TEST(Interp, DiagnosticSpans) {
  auto r = eval("x <- 1\n  x + \"a\"");
  const Diagnostic& d = *r[1].error;
  EXPECT_EQ(d.phase, Phase::Runtime);
  EXPECT_EQ(d.span.start_line, 2);
  EXPECT_EQ(d.span.start_col, 5);
  EXPECT_EQ(d.call, "x + \"a\"");

  auto w = eval("c(1, 2) + c(1, 2, 3)");
  ASSERT_EQ(w[0].warnings.size(), 1u);
  EXPECT_EQ(w[0].warnings[0].code, Code::W_NONMULTIPLE);
  EXPECT_EQ(w[0].warnings[0].span.start_col, 9);
}

TEST(Interp, WarningsInsideFunctionsNameTheInnerCall) {
  EXPECT_EQ(out("f <- function(x) x + c(1, 2, 3)\nf(c(1, 2))"),
            "[1] 2 4 4\nWarning message:\nIn x + c(1, 2, 3) :\n  longer object length is not a multiple of shorter object length\n");
}

TEST(Interp, WarningsBeforeAnErrorAreReported) {
  EXPECT_EQ(out("(c(1, 2) + c(1, 2, 3)) + \"a\""),
            "Error in (c(1, 2) + c(1, 2, 3)) + \"a\" : \n  non-numeric argument to binary operator\n"
            "In addition: Warning message:\nIn c(1, 2) + c(1, 2, 3) :\n"
            "  longer object length is not a multiple of shorter object length\n");
}

TEST(Interp, ApplyFunction) {
  Interpreter interp;
  auto p = parse_source("f <- function(a, b) c(b, a)");
  interp.eval_statement(*p.exprs[0], p.source);
  const RValue* f = nullptr;
  ASSERT_EQ(interp.global_env()->lookup("f", &f), LookupStatus::Found);
  Warnings w;
  RValue r = interp.apply_function(*f, {num_vector({1}), num_vector({2})}, w);
  EXPECT_TRUE(values_identical(r, num_vector({2, 1})));
  EXPECT_THROW(interp.apply_function(num_vector({1}), {}, w), RError);
}

TEST(Interp, DeterministicAcrossRuns) {
  const std::string src = "a <- c(1, NA, 3)\nb <- a * c(2, 3)\nb[c(TRUE, NA)]\nb[-2] <- 0\nb";
  std::string first = out(src);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(out(src), first);
}
