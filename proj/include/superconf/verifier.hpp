#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superconf/sampling.hpp"
#include "superconf/serialize.hpp"

namespace superconf {

struct CheckConfig {
  int generator_count = 4;
  int max_degree = 3;
  int coefficient_bound = 5;
  long trials = 1000;
  std::uint64_t seed = 0;
  // Check names; empty or {"all"} selects the whole registry.
  std::vector<std::string> suite;
  // Worker threads; the report does not depend on it.
  int threads = 1;

  SampleParams sample_params() const {
    return {generator_count, max_degree, coefficient_bound};
  }
  // Throws Error(InvalidConfig) or Error(UnknownCheck).
  void validate() const;
  std::vector<std::string> selected() const;
};

// Assertive checks decide the exit status. Measure checks only report a rate
// (for claims the construction does not guarantee).
enum class CheckRole { Assertive, Measure };

struct CheckResult {
  std::string name;
  std::string anchor;
  CheckRole role = CheckRole::Assertive;
  long trials = 0;
  long passes = 0;
  long failures = 0;
  long redraws = 0;
  // Inputs of the failing trial with the lowest index.
  std::optional<long> counterexample_trial;
  Json counterexample;
  // Failure counts per sub-claim, in first-seen order.
  Json details = Json::object();
  double millis = 0;

  bool ok() const { return role == CheckRole::Measure || failures == 0; }
  // Combines two partial results over disjoint trial ranges.
  void merge(const CheckResult& other);
};

struct CheckReport {
  CheckConfig config;
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

struct CheckInfo {
  std::string name;
  std::string anchor;
  CheckRole role;
};
const std::vector<CheckInfo>& check_registry();

CheckReport run_suite(const CheckConfig& config);
CheckResult run_check(const std::string& name, const CheckConfig& config);

// Runs `trials` random composites T2∘T1 with one factor drawn from `first`
// and the other from `second`, and tests whether the chain-rule matrix lies
// in `first`. "first-map-first": T1 is drawn from `first` (it acts first).
// "outer-map-first": T2 is drawn from `first`.
struct ShapeClosureResult {
  MatrixSet first;
  MatrixSet second;
  long trials = 0;
  long first_map_first_failures = 0;
  long outer_map_first_failures = 0;
  Json first_map_first_counterexample;
  Json outer_map_first_counterexample;
};
ShapeClosureResult shape_closure(MatrixSet first, MatrixSet second, long trials,
                                 std::uint64_t seed, SampleParams params = {});

// Emitters. Timing is omitted when `with_timing` is false, which makes the
// JSON a pure function of the configuration.
Json report_to_json(const CheckReport& report, bool with_timing = true);
std::string report_to_text(const CheckReport& report, bool with_timing = true);

}  // namespace superconf
