#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simpade/solver.hpp"

namespace simpade::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kNoSolution = 3;
inline constexpr int kCheckFailed = 4;

// algo is one of direct, duality, recursive, oracle. An empty output path
// writes to `out`.
int cmd_solve(const std::string& input_path, const std::string& algo,
              const std::string& output_path, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& input_path, const std::string& spec_path,
               std::ostream& out, std::ostream& err);

struct BenchOptions {
  int64_t n = 4;
  int64_t d = 256;
  uint64_t p = 97;
  uint64_t seed = 1;
  std::vector<std::string> algos{"direct", "recursive"};
};

// Random instance used by bench: g_i = x^d, N_0 = min(ceil(d/2)+1, d),
// N_i = ceil(d/2), coefficients of S_i from mt19937_64(seed).
ProblemInstance bench_instance(size_t n, size_t d, uint64_t p, uint64_t seed);

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

// Entry point used by the simpade binary.
int run(int argc, char** argv);

}  // namespace simpade::cli
