#pragma once

// Text file formats. Both are JSON objects; polynomials are ascending
// coefficient lists (constant term first) of integers in [0, p).
//
//   instance: {"p": 2, "S": [[...], ...], "g": [[...], ...], "N": [N0, ...]}
//   spec:     {"lambdas": [[...], ...], "deltas": [-1, ...],
//              "instance_hash": "<16 hex digits>"}
//   oracle:   {"basis": [[...], ...], "dim": k, "instance_hash": "..."}

#include <stdexcept>
#include <string>
#include <string_view>

#include "simpade/oracle.hpp"
#include "simpade/solver.hpp"

namespace simpade {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);  // ParseError if unreadable

// Syntax and structure problems raise ParseError (with line/column or the
// offending field); Problem constraints raise ValidationError.
RawInstance parse_raw_instance(std::string_view text);
ProblemInstance parse_instance(std::string_view text);
std::string emit_instance(const ProblemInstance& inst);

// FNV-1a 64 of the canonical instance text, as 16 lowercase hex digits.
std::string instance_hash(const ProblemInstance& inst);

struct SpecFile {
  SolutionSpec spec;
  std::string instance_hash;  // empty if absent
};

SpecFile parse_spec(std::string_view text, const Field& field);
std::string emit_spec(const SolutionSpec& spec, const ProblemInstance& inst);
std::string emit_solution_space(const SolutionSpace& space, const ProblemInstance& inst);

}  // namespace simpade
