#pragma once

// Named verification suites over one parameter choice, producing JSON reports.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sklyanin/presentation.hpp"

namespace sklyanin {

enum class AlgebraChoice { Sklyanin, Twist, Both };

struct RunConfig {
  Rational beta = 2;
  Rational gamma = 3;
  std::optional<Rational> alpha;  // derived from beta and gamma when absent
  std::size_t degree = 6;
  std::size_t module_degree = 5;
  AlgebraChoice algebra = AlgebraChoice::Both;
};

enum class Status { Pass, Fail, Assumption };
std::string to_string(Status s);

struct CheckReport {
  std::string name;
  Status status = Status::Fail;
  nlohmann::json details;
  double ms = 0;
};

nlohmann::json to_json(const CheckReport& r);

/// Parameters of the config; throws ConstraintViolated / DegenerateParameter.
Parameters config_parameters(const RunConfig& config);

/// relations, hilbert, center, nilpotent, points, modules, isomorphisms.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"); reports are sorted by name. Throws Precondition for
/// an unknown suite. Arithmetic errors propagate; other failures inside a check
/// are reported as status fail.
std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& config);

}  // namespace sklyanin
