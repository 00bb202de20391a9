#pragma once

// Random literal-only programs over c(), arithmetic, comparison, indexing and
// subscript-assignment, for the soundness fuzz and round-trip properties.

#include <cstdint>
#include <random>
#include <string>

namespace rvec::testgen {

struct GenOptions {
  int max_depth = 4;
  int max_statements = 4;
  // Probability weight of producing NA / 0 / negative literals.
  bool allow_na = true;
  bool allow_strings = false;
};

class ProgramGen {
 public:
  explicit ProgramGen(std::uint64_t seed, GenOptions options = {}) : rng_(seed), opt_(options) {}

  std::string program();
  std::string expression(int depth);

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string literal();
  std::string number();
  std::string subscript(int depth);
  std::string combine(int depth, int min_args = 0);

  std::mt19937_64 rng_;
  GenOptions opt_;
  int vars_ = 0;
};

}  // namespace rvec::testgen
