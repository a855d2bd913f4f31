#include <algorithm>
#include <random>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "simpade/cli.hpp"
#include "simpade/io.hpp"
#include "simpade/oracle.hpp"
#include "support/fixtures.hpp"

using namespace simpade;
using namespace simpade::testing;
namespace fs = std::filesystem;

namespace {

std::string data_path(const std::string& name) {
  return std::string(SIMPADE_TEST_DATA) + "/" + name;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("simpade_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    const std::string p = (path / name).string();
    if (!contents.empty()) std::ofstream(p) << contents;
    return p;
  }
};

struct Run {
  int code;
  std::string out, err;
};

Run solve(const std::string& input, const std::string& algo, const std::string& output = "") {
  std::ostringstream out, err;
  const int code = cli::cmd_solve(input, algo, output, out, err);
  return {code, out.str(), err.str()};
}

Run verify(const std::string& input, const std::string& spec) {
  std::ostringstream out, err;
  const int code = cli::cmd_verify(input, spec, out, err);
  return {code, out.str(), err.str()};
}

Run bench(cli::BenchOptions opts) {
  std::ostringstream out, err;
  const int code = cli::cmd_bench(opts, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve writes a spec") {
  const Run r = solve(data_path("example1.json"), "direct");
  REQUIRE(r.code == cli::kOk);
  const SpecFile spec = parse_spec(r.out, kGF2);
  CHECK(spec.spec.deltas == std::vector<int64_t>{-1, -1});
  CHECK(spec.instance_hash == instance_hash(example1()));
  CHECK(solve(data_path("example1.json"), "direct").out == r.out);
}

TEST_CASE("each algorithm passes verification") {
  TempDir tmp;
  for (std::string algo : {"direct", "duality", "recursive"}) {
    const std::string out = tmp.file(algo + ".json");
    REQUIRE(solve(data_path("example1.json"), algo, out).code == cli::kOk);
    const Run v = verify(data_path("example1.json"), out);
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("PASS completeness") != std::string::npos);
  }
  const std::string basis = tmp.file("oracle.json");
  REQUIRE(solve(data_path("example1.json"), "oracle", basis).code == cli::kOk);
  CHECK(read_text_file(basis).find("\"dim\": 2") != std::string::npos);
}

TEST_CASE("solve error paths") {
  TempDir tmp;
  CHECK(solve(data_path("mixed_moduli.json"), "duality").code == cli::kPrecondition);
  CHECK(solve(data_path("mixed_moduli.json"), "direct").code != cli::kPrecondition);
  CHECK(solve(data_path("example1.json"), "quantum").code == cli::kInputError);
  CHECK(solve(tmp.file("missing.json"), "direct").code == cli::kInputError);
  const Run bad = solve(tmp.file("bad.json", R"({"p": 2, "S": [[1]], "g": [[0, 1]]})"), "direct");
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("'N'") != std::string::npos);
  const Run invalid =
      solve(tmp.file("inv.json", R"({"p": 2, "S": [[0, 1]], "g": [[0, 1]], "N": [1, 1]})"), "direct");
  CHECK(invalid.code == cli::kInputError);
  CHECK(invalid.err.find("S[0]") != std::string::npos);
  const std::string none =
      tmp.file("none.json", R"({"p": 2, "S": [[0, 1]], "g": [[0, 0, 1]], "N": [1, 1]})");
  CHECK(solve(none, "direct").code == cli::kNoSolution);
  CHECK(solve(none, "oracle").code == cli::kNoSolution);
}

TEST_CASE("verify catches bad specs") {
  TempDir tmp;
  const std::string inst = data_path("example1.json");
  const Run wrong = verify(inst, tmp.file("x4.json", R"({"lambdas": [[0, 0, 0, 0, 1]], "deltas": [-1]})"));
  CHECK(wrong.code == cli::kCheckFailed);
  CHECK(wrong.out.find("FAIL solutions") != std::string::npos);

  const Run empty = verify(inst, tmp.file("empty.json", R"({"lambdas": [], "deltas": []})"));
  CHECK(empty.code == cli::kCheckFailed);
  CHECK(empty.out.find("FAIL completeness") != std::string::npos);

  const Run partial =
      verify(inst, tmp.file("part.json", R"({"lambdas": [[1, 0, 0, 0, 1]], "deltas": [-1]})"));
  CHECK(partial.code == cli::kCheckFailed);
  CHECK(partial.out.find("PASS solutions") != std::string::npos);

  const Run hash = verify(inst, tmp.file("hash.json", R"({"lambdas": [[1, 0, 0, 0, 1], [0, 1, 0, 1]],
      "deltas": [-1, -1], "instance_hash": "0000000000000000"})"));
  CHECK(hash.code == cli::kCheckFailed);
  CHECK(hash.out.find("FAIL instance-hash") != std::string::npos);

  const Run deltas = verify(inst, tmp.file("d.json", R"({"lambdas": [[1, 0, 0, 0, 1], [0, 1, 0, 1]],
      "deltas": [-2, -1]})"));
  CHECK(deltas.code == cli::kCheckFailed);
  CHECK(deltas.out.find("FAIL deltas-match") != std::string::npos);

  CHECK(verify(inst, tmp.file("syntax.json", "{")).code == cli::kInputError);
}

TEST_CASE("bench") {
  const Run r = bench({4, 256, 97, 1, {"direct", "recursive"}});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string header, a, b;
  std::getline(lines, header);
  std::getline(lines, a);
  std::getline(lines, b);
  CHECK(header == "algo,n,d,seconds,k,sum_neg_delta");
  auto tail = [](const std::string& row) {
    size_t pos = row.size();
    for (int i = 0; i < 2; ++i) pos = row.rfind(',', pos - 1);
    return row.substr(pos);
  };
  CHECK(a.rfind("direct,4,256,", 0) == 0);
  CHECK(b.rfind("recursive,4,256,", 0) == 0);
  CHECK(tail(a) == tail(b));

  CHECK(bench({1, 4, 91, 1, {"direct"}}).code == cli::kInputError);
  CHECK(bench({1, 0, 97, 1, {"direct"}}).code == cli::kInputError);
  CHECK(bench({1, 4, 97, 1, {"nope"}}).code == cli::kInputError);
  const Run smallest = bench({1, 1, 2, 1, {"direct", "duality", "recursive"}});
  CHECK(smallest.code == cli::kOk);
  CHECK(std::count(smallest.out.begin(), smallest.out.end(), '\n') == 4);
}
