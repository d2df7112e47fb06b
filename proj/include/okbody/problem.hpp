#pragma once

#include "okbody/lattice.hpp"
#include "okbody/laurent.hpp"
#include "okbody/polytope.hpp"
#include "okbody/valuation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

using Json = nlohmann::json;

inline constexpr int problem_schema_version = 1;
inline constexpr std::uint64_t default_seed = 1;

inline const std::vector<std::string> subcommands{"body",         "hilbert", "mixedvol", "bkk", "curve",
                                                  "inequalities", "sagbi",   "lattice"};

struct RunOptions {
  std::optional<unsigned> d_max;     // overrides the file
  std::optional<std::uint64_t> seed; // overrides the file
  unsigned threads = 1;
  std::uint64_t cap_points = default_point_cap;
  std::size_t cap_dim = default_dimension_cap;
};

struct CsvTable {
  std::string name; // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct RunResult {
  Json report;
  std::vector<CsvTable> tables;
  bool verdict_failed = false; // an inequality came out violated
};

// Throws ValidationError on malformed input, ResourceError on caps.
RunResult run_problem(const std::string& subcommand, const Json& problem, const RunOptions& options = {});

// Exact scalars: strings "p/q" or JSON integers. Floats are rejected.
BigRational parse_scalar(const Json& j);
// arity 0 infers it from the first term.
ExponentVector parse_exponent(const Json& j, std::size_t arity = 0);
// [[coefficient, [e1, ..., en]], ...]
LaurentPolynomial parse_polynomial(const Json& j, std::size_t arity = 0);
Json polynomial_to_json(const LaurentPolynomial& p);
RationalPoint parse_point(const Json& j, std::size_t arity = 0);
Json point_to_json(const RationalPoint& p);
Json polytope_to_json(const Polytope& p);
// "lex", "grlex" or a square weight matrix; missing means lex.
TermOrder parse_order(const Json& j, std::size_t arity);
VarietyModel parse_model(const Json& j);

std::string csv_text(const CsvTable& table);

} // namespace okbody
