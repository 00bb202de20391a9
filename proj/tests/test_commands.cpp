#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "rvec/commands.hpp"

using namespace rvec;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result check(const std::string& src, CheckCommandOptions o = {}) {
  std::ostringstream out, err;
  int code = check_text(src, "t.R", o, out, err);
  return {code, out.str(), err.str()};
}

Result run(const std::string& src, RunCommandOptions o = {}) {
  std::ostringstream out, err;
  int code = run_text(src, "t.R", o, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CheckCommand, ExitCodes) {
  EXPECT_EQ(check("a <- c(1,2)").code, kExitClean);
  EXPECT_EQ(check("c(1,2) + c(1,2,3)").code, kExitWarnings);
  EXPECT_EQ(check("a <- 1; a[1] = NULL").code, kExitErrors);
  Result syntax = check("a <- (");
  EXPECT_EQ(syntax.code, kExitSyntax);
  EXPECT_NE(syntax.err.find("t.R:1:"), std::string::npos);
  EXPECT_EQ(check("a <- 1 @ 2").code, kExitSyntax);
}

TEST(CheckCommand, StrictRecycle) {
  CheckCommandOptions o;
  o.strict_recycle = true;
  EXPECT_EQ(check("c(1,2) + c(1,2,3)", o).code, kExitErrors);
  EXPECT_EQ(check("a <- c(1,2,3)\na[c(1,2)] <- c(1,2,3)", o).code, kExitErrors);
}

TEST(CheckCommand, Json) {
  CheckCommandOptions o;
  o.json = true;
  Result r = check("c(1,2) + c(1,2,3)", o);
  json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["code"], "W_NONMULTIPLE");
  EXPECT_EQ(j[0]["span"]["start_col"], 8);
  EXPECT_EQ(check("c(1,2) + c(1,2,3)", o).out, r.out);
}

TEST(CheckCommand, Types) {
  CheckCommandOptions o;
  o.types = true;
  Result r = check("a <- c(1,2)\na + c(1,2,3,4)\nf <- function(x) x", o);
  EXPECT_NE(r.out.find("statement 1 (line 1): vector<numeric>[2]"), std::string::npos);
  EXPECT_NE(r.out.find("statement 2 (line 2): vector<numeric>[4]"), std::string::npos);
  EXPECT_NE(r.out.find("statement 3 (line 3): function(x)"), std::string::npos);
  o.json = true;
  json j = json::parse(check("a <- c(1,2)", o).out);
  EXPECT_TRUE(j["diagnostics"].empty());
  EXPECT_EQ(j["types"][0]["type"], "vector<numeric>[2]");
  EXPECT_EQ(j["types"][0]["precise"], true);
}

TEST(RunCommand, OutputAndExitCodes) {
  Result r = run("array(c(1,2), c(3,3))");
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "     [,1] [,2] [,3]\n[1,]    1    2    1\n[2,]    2    1    2\n[3,]    1    2    1\n");
  EXPECT_EQ(run("c(\"a\",\"b\",\"c\")[c(-1,-3)]").out, "[1] \"b\"\n");
  EXPECT_EQ(run("c(1,2) + c(1,2,3)").code, kExitWarnings);
  EXPECT_EQ(run("\"cat\" + 1").code, kExitErrors);
  EXPECT_EQ(run("\"cat\" +").code, kExitSyntax);
}

TEST(RunCommand, Json) {
  RunCommandOptions o;
  o.json = true;
  Result r = run("x <- c(1, 2)\nx\nx + \"a\"\nx", o);
  EXPECT_EQ(r.code, kExitErrors);
  json j = json::parse(r.out);
  ASSERT_EQ(j["statements"].size(), 3u);
  EXPECT_EQ(j["statements"][0]["visible"], false);
  EXPECT_EQ(j["statements"][1]["printed"], "[1] 1 2\n");
  EXPECT_EQ(j["statements"][1]["length"], 2);
  EXPECT_EQ(j["statements"][2]["ok"], false);
  ASSERT_EQ(j["diagnostics"].size(), 1u);
  EXPECT_EQ(j["diagnostics"][0]["phase"], "runtime");
}

TEST(RunCommand, Growth) {
  RunCommandOptions o;
  o.r_compat_growth = true;
  EXPECT_EQ(run("a <- c(1,2)\na[3] <- 3\na", o).out, "[1] 1 2 3\n");
  EXPECT_EQ(run("a <- c(1,2)\na[3] <- 3\na").code, kExitErrors);
}

TEST(Files, IoFailures) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_check("/nonexistent/x.R", {}, out, err), kExitIo);
  EXPECT_EQ(cmd_run("/nonexistent/x.R", {}, out, err), kExitIo);
  EXPECT_EQ(cmd_diff("/nonexistent/dir", {}, out, err), kExitIo);
  EXPECT_FALSE(err.str().empty());
}

TEST(Files, CorpusCaseFilesRunOnlyTheirSource) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_run(std::string(RVEC_CORPUS_DIR) + "/06_array_recycled.R", {}, out, err), kExitClean);
  EXPECT_EQ(out.str().find("#>"), std::string::npos);
}

TEST(DiffCommand, CorpusIsClean) {
  std::ostringstream out, err;
  DiffCommandOptions o;
  o.self_test = true;
  EXPECT_EQ(cmd_diff(RVEC_CORPUS_DIR, o, out, err), kExitClean) << out.str() << err.str();
  EXPECT_NE(out.str().find(" 0 MISMATCH"), std::string::npos);
  EXPECT_NE(out.str().find("self-test"), std::string::npos);
}
