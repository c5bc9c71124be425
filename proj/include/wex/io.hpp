#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wex/verdict.hpp"

namespace wex {

struct GroupSpec {
  int conductor = 1;
  int degree = 1;
  std::vector<Matrix> generators;
  std::string name;
  std::string provenance;
};

/// Throws ParseError for malformed JSON or literals, ValidationError for
/// shape problems.
GroupSpec parse_group_spec(const std::string& text);
nlohmann::json group_spec_json(const GroupSpec& spec);
std::string emit_group_spec(const GroupSpec& spec);

/// Character table with a natural character. Sizes, power maps and
/// orthogonality are checked on load.
CharacterTable parse_table_spec(const std::string& text);
nlohmann::json table_spec_json(const CharacterTable& table);
std::string emit_table_spec(const CharacterTable& table);

enum class Format { Json, Text };

struct PipelineOptions {
  bool table = false;
  RuleHint hint;
  std::optional<std::size_t> cap;  // defaults to WEX_CAP or kDefaultCap
  bool timings = false;
};

struct PipelineResult {
  VerdictReport report;
  std::map<std::string, double> timings_ms;
};

/// Closure cap from WEX_CAP, falling back to kDefaultCap.
std::size_t cap_from_env();

RuleHint parse_rule(const std::string& text);

PipelineResult run_pipeline(const std::string& text, const PipelineOptions& opts);

nlohmann::json report_json(const VerdictReport& report);
std::string emit_report(const PipelineResult& result, Format format, bool timings = false);

/// Polynomial as [{"monomial": [...], "coeff": literal}] in lex monomial order.
nlohmann::json polynomial_json(const Vector& coeffs, int variables, int degree, int conductor);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace wex
