#include "simpade/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "simpade/io.hpp"
#include "simpade/oracle.hpp"
#include "simpade/solver.hpp"

namespace simpade::cli {

namespace {

bool known_algo(const std::string& a) {
  return a == "direct" || a == "duality" || a == "recursive" || a == "oracle";
}

SolutionSpec run_solver(const std::string& algo, const ProblemInstance& inst) {
  if (algo == "direct") return direct_sim_pade(inst);
  if (algo == "duality") return duality_sim_pade(inst);
  return recursive_sim_pade(inst);
}

bool write_output(const std::string& path, const std::string& text, std::ostream& out,
                  std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

// Loads and validates an instance, reporting failures on err.
bool load_instance(const std::string& path, ProblemInstance* inst, std::ostream& err) {
  try {
    *inst = parse_instance(read_text_file(path));
    return true;
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "error: " << path << ": invalid instance: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  }
  return false;
}

}  // namespace

int cmd_solve(const std::string& input_path, const std::string& algo,
              const std::string& output_path, std::ostream& out, std::ostream& err) {
  if (!known_algo(algo)) {
    err << "error: unknown algorithm '" << algo << "'\n";
    return kInputError;
  }
  ProblemInstance inst{Field(2), {}, {}, {}};
  if (!load_instance(input_path, &inst, err)) return kInputError;

  if (algo == "oracle") {
    SolutionSpace space;
    try {
      space = oracle_solution_space(inst);
    } catch (const OracleSizeError& e) {
      err << "error: " << e.what() << "\n";
      return kPrecondition;
    }
    if (!write_output(output_path, emit_solution_space(space, inst), out, err))
      return kInputError;
    return space.dim() == 0 ? kNoSolution : kOk;
  }

  SolutionSpec spec;
  try {
    spec = run_solver(algo, inst);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  if (!write_output(output_path, emit_spec(spec, inst), out, err)) return kInputError;
  return spec.count() == 0 ? kNoSolution : kOk;
}

int cmd_verify(const std::string& input_path, const std::string& spec_path,
               std::ostream& out, std::ostream& err) {
  ProblemInstance inst{Field(2), {}, {}, {}};
  if (!load_instance(input_path, &inst, err)) return kInputError;
  SpecFile file;
  try {
    file = parse_spec(read_text_file(spec_path), inst.field);
  } catch (const std::exception& e) {
    err << "error: " << spec_path << ": " << e.what() << "\n";
    return kInputError;
  }
  const SolutionSpec& spec = file.spec;

  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    all_ok = all_ok && ok;
  };

  if (!file.instance_hash.empty()) {
    const std::string expected = instance_hash(inst);
    report("instance-hash", file.instance_hash == expected,
           file.instance_hash == expected ? "" : "spec was written for " + file.instance_hash +
                                                     ", instance is " + expected);
  }

  bool negative = true;
  for (int64_t d : spec.deltas) negative = negative && d < 0;
  report("negative-deltas", negative);

  const PolyMatrix completion = complete(spec.lambdas, inst);
  const Shift neg_bounds = inst.negated_bounds();
  std::string bad_rows;
  for (size_t i = 0; i < completion.rows(); ++i)
    if (!verify_solution(completion.row(i), inst)) bad_rows += " " + std::to_string(i);
  report("solutions", bad_rows.empty(),
         bad_rows.empty() ? "" : "congruence/degree bounds violated by rows" + bad_rows);

  report("row-reduced", is_row_reduced(completion, neg_bounds) || completion.rows() == 0);

  const RowDegrees degs = shifted_row_degrees(completion, neg_bounds);
  report("deltas-match", degs == spec.deltas);

  if (oracle_feasible(inst)) {
    const SolutionSpace space = oracle_solution_space(inst);
    const bool ok = spec_matches_oracle(spec, inst);
    report("completeness", ok,
           ok ? "" : "oracle dimension " + std::to_string(space.dim()) + ", spec spans " +
                         std::to_string(spec.dimension()));
  } else {
    out << "SKIP completeness: instance exceeds the oracle size guard\n";
  }
  return all_ok ? kOk : kCheckFailed;
}

ProblemInstance bench_instance(size_t n, size_t d, uint64_t p, uint64_t seed) {
  const Field field(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> coeff(0, p - 1);
  std::vector<Poly> series, moduli;
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint64_t> c(d);
    for (auto& v : c) v = coeff(rng);
    series.emplace_back(field, std::move(c));
    moduli.push_back(Poly::x_power(field, d));
  }
  // N_0 = ceil(d/2) + 1 is capped at d so that d = 1 stays a valid instance.
  const int64_t half = (static_cast<int64_t>(d) + 1) / 2;
  std::vector<int64_t> bounds{std::min<int64_t>(half + 1, static_cast<int64_t>(d))};
  for (size_t i = 0; i < n; ++i) bounds.push_back(half);
  return validate_instance(field, std::move(series), std::move(moduli), std::move(bounds));
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n < 1 || opts.d < 1) {
    err << "error: n and d must be positive\n";
    return kInputError;
  }
  if (!is_prime(opts.p) || opts.p >= Field::kMaxModulus) {
    err << "error: p = " << opts.p << " is not a supported prime\n";
    return kInputError;
  }
  for (const auto& a : opts.algos) {
    if (!known_algo(a)) {
      err << "error: unknown algorithm '" << a << "'\n";
      return kInputError;
    }
  }
  const ProblemInstance inst = bench_instance(static_cast<size_t>(opts.n),
                                              static_cast<size_t>(opts.d), opts.p, opts.seed);
  const size_t n = inst.size(), d = static_cast<size_t>(opts.d);

  out << "algo,n,d,seconds,k,sum_neg_delta\n";
  for (const auto& algo : opts.algos) {
    const auto start = std::chrono::steady_clock::now();
    size_t k = 0;
    int64_t dim = 0;
    try {
      if (algo == "oracle") {
        const SolutionSpace space = oracle_solution_space(inst);
        k = space.dim();
        dim = static_cast<int64_t>(space.dim());
      } else {
        const SolutionSpec spec = run_solver(algo, inst);
        k = spec.count();
        dim = spec.dimension();
      }
    } catch (const std::exception& e) {
      err << "error: " << algo << ": " << e.what() << "\n";
      return kInputError;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", secs);
    out << algo << "," << n << "," << d << "," << buf << "," << k << "," << dim << "\n";
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Simultaneous Pade approximation over prime fields"};
  app.require_subcommand(1);

  std::string input, algo = "direct", output, spec_path;
  auto* solve = app.add_subcommand("solve", "Compute a solution specification");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--algo", algo, "direct | duality | recursive | oracle")
      ->check(CLI::IsMember({"direct", "duality", "recursive", "oracle"}));
  solve->add_option("--output", output, "Output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check a solution specification");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--spec", spec_path, "Spec file")->required();

  BenchOptions bench_opts;
  std::string algo_list = "direct,recursive";
  auto* bench = app.add_subcommand("bench", "Time solvers on random x^d instances");
  bench->add_option("--n", bench_opts.n, "Number of series");
  bench->add_option("--d", bench_opts.d, "Precision d (moduli x^d)");
  bench->add_option("--p", bench_opts.p, "Prime modulus");
  bench->add_option("--seed", bench_opts.seed, "Random seed");
  bench->add_option("--algos", algo_list, "Comma separated algorithms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*solve) return cmd_solve(input, algo, output, std::cout, std::cerr);
  if (*verify) return cmd_verify(input, spec_path, std::cout, std::cerr);
  bench_opts.algos.clear();
  std::stringstream ss(algo_list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) bench_opts.algos.push_back(item);
  return cmd_bench(bench_opts, std::cout, std::cerr);
}

}  // namespace simpade::cli
