#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "mtvrp/instance.hpp"
#include "mtvrp/solution.hpp"
#include "mtvrp/validator.hpp"

namespace mtvrp {

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFormat : public ParseError {
 public:
  using ParseError::ParseError;
};

// Deterministic text: fixed key order, 17 significant digits, unbounded
// values written as the string "inf".
std::string instance_to_json(const Instance& instance);
// Throws ParseError on unknown schema_version, missing fields, NaN, or any
// violated instance invariant.
Instance instance_from_json(const std::string& text);

void write_instance(const Instance& instance, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);

std::string solution_to_json(const Solution& solution, const std::string& instance_id = "");
Solution solution_from_json(const Instance& instance, const std::string& text);
Solution read_solution(const Instance& instance, const std::filesystem::path& path);

std::string verdict_to_json(const Verdict& verdict);

// Classic CVRPLIB (EUC_2D) file. Coordinates are shifted to the origin and
// divided by the larger of the x/y extents; demands are divided by CAPACITY;
// the depot becomes node 0. Instance::scale() maps costs back to file units.
Instance read_cvrplib(const std::filesystem::path& path);
Instance parse_cvrplib(const std::string& text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// %.17g formatting used by every writer.
std::string format_number(double value);

}  // namespace mtvrp
