#include "simpade/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace simpade {

namespace {

using json = nlohmann::json;

std::string location(std::string_view text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("top level must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    throw ParseError("syntax error at " + location(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<uint64_t> coefficient_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("field '" + where + "' must be a list of integers");
  std::vector<uint64_t> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned())
      throw ParseError("field '" + where + "[" + std::to_string(i) +
                       "]' must be a nonnegative integer");
    out.push_back(j[i].get<uint64_t>());
  }
  return out;
}

std::vector<std::vector<uint64_t>> poly_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("field '" + where + "' must be a list of lists");
  std::vector<std::vector<uint64_t>> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(coefficient_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int64_t> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("field '" + where + "' must be a list of integers");
  std::vector<int64_t> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw ParseError("field '" + where + "[" + std::to_string(i) + "]' must be an integer");
    out.push_back(j[i].get<int64_t>());
  }
  return out;
}

std::string format_list(const std::vector<uint64_t>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string format_list(const std::vector<int64_t>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string format_polys(const std::vector<Poly>& polys) {
  if (polys.empty()) return "[]";
  std::string out = "[\n";
  for (size_t i = 0; i < polys.size(); ++i) {
    out += "    " + format_list(polys[i].coeffs());
    out += i + 1 < polys.size() ? ",\n" : "\n";
  }
  return out + "  ]";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RawInstance parse_raw_instance(std::string_view text) {
  const json doc = parse_document(text);
  RawInstance raw;
  const json& p = require(doc, "p");
  if (!p.is_number_unsigned()) throw ParseError("field 'p' must be a positive integer");
  raw.p = p.get<uint64_t>();
  raw.series = poly_list(require(doc, "S"), "S");
  raw.moduli = poly_list(require(doc, "g"), "g");
  raw.bounds = int_list(require(doc, "N"), "N");
  return raw;
}

ProblemInstance parse_instance(std::string_view text) {
  return validate_instance(parse_raw_instance(text));
}

std::string emit_instance(const ProblemInstance& inst) {
  std::string out = "{\n";
  out += "  \"p\": " + std::to_string(inst.field.modulus()) + ",\n";
  out += "  \"S\": " + format_polys(inst.series) + ",\n";
  out += "  \"g\": " + format_polys(inst.moduli) + ",\n";
  out += "  \"N\": " + format_list(inst.bounds) + "\n";
  return out + "}\n";
}

std::string instance_hash(const ProblemInstance& inst) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : emit_instance(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

SpecFile parse_spec(std::string_view text, const Field& field) {
  const json doc = parse_document(text);
  SpecFile file;
  const auto lambdas = poly_list(require(doc, "lambdas"), "lambdas");
  file.spec.deltas = int_list(require(doc, "deltas"), "deltas");
  if (lambdas.size() != file.spec.deltas.size())
    throw ParseError("fields 'lambdas' and 'deltas' have different lengths");
  for (size_t i = 0; i < lambdas.size(); ++i) {
    for (size_t j = 0; j < lambdas[i].size(); ++j)
      if (lambdas[i][j] >= field.modulus())
        throw ParseError("field 'lambdas[" + std::to_string(i) + "][" + std::to_string(j) +
                         "]' is not below p = " + std::to_string(field.modulus()));
    file.spec.lambdas.emplace_back(field, lambdas[i]);
  }
  if (auto it = doc.find("instance_hash"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("field 'instance_hash' must be a string");
    file.instance_hash = it->get<std::string>();
  }
  return file;
}

std::string emit_spec(const SolutionSpec& spec, const ProblemInstance& inst) {
  std::string out = "{\n";
  out += "  \"lambdas\": " + format_polys(spec.lambdas) + ",\n";
  out += "  \"deltas\": " + format_list(spec.deltas) + ",\n";
  out += "  \"instance_hash\": \"" + instance_hash(inst) + "\"\n";
  return out + "}\n";
}

std::string emit_solution_space(const SolutionSpace& space, const ProblemInstance& inst) {
  std::vector<Poly> basis;
  for (const auto& v : space.basis) basis.emplace_back(inst.field, v);
  std::string out = "{\n";
  out += "  \"basis\": " + format_polys(basis) + ",\n";
  out += "  \"dim\": " + std::to_string(space.dim()) + ",\n";
  out += "  \"instance_hash\": \"" + instance_hash(inst) + "\"\n";
  return out + "}\n";
}

}  // namespace simpade
