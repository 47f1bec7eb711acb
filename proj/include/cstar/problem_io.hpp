// JSON problem files and transform outputs.
//
// Problem: {"field", "variables", ["quotient"], "sop", "complex"}; complex
// twists are R(t) shifts (generator degree -t) and map k is a row-major
// rank(F_{k-1}) x rank(F_k) array of polynomial strings.
// Transform output adds "labels", "top_vanished", "source" (the input
// complex) and "report".
#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

#include "cstar/report.hpp"
#include "cstar/star.hpp"

namespace cstar {

using Json = nlohmann::ordered_json;

struct Problem {
  RingPtr ring;
  SopData sop;
  FreeComplex complex;
};

/// Parses a field spec "rational" or "p:<prime>"; ValidationError otherwise.
Field parse_field_spec(const std::string& spec);

/// ParseError for malformed input, ValidationError for inconsistent data.
/// `field` overrides the file's field when given.
Problem problem_from_json(const Json& j, std::optional<Field> field = std::nullopt);
Problem read_problem(const std::filesystem::path& path,
                     std::optional<Field> field = std::nullopt);
Json problem_to_json(const Problem& p);

struct StarFile {
  Problem problem;  // the source complex and its sop
  StarComplex star;
  VerificationReport report;
};

Json report_to_json(const VerificationReport& r);
Json star_to_json(const StarFile& s);
StarFile star_from_json(const Json& j);
StarFile read_star(const std::filesystem::path& path);

Json label_to_json(const StarLabel& l);
StarLabel label_from_json(const Json& j);

std::string dump_json(const Json& j);
/// Reads and parses a JSON file; std::runtime_error on I/O failure,
/// ParseError on malformed JSON.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace cstar
