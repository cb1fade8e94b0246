// Acceptance gate: one PASS/FAIL line per criterion. Every criterion is exact
// (zero tolerance): a criterion passes only with 0 failures.
//
// Usage: superconf_acceptance [criterion ...]   (no arguments runs all)

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "superconf/error.hpp"
#include "superconf/verifier.hpp"

using namespace superconf;

namespace {

constexpr int kGenerators = 4;
constexpr int kMaxDegree = 3;
constexpr int kBound = 5;
constexpr std::uint64_t kSeed = 0;
constexpr double kBudgetMillis = 60000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  // Counts toward the time budget shared by the property suites.
  bool budgeted = true;
};

CheckConfig config(std::vector<std::string> suite, long trials) {
  CheckConfig c;
  c.generator_count = kGenerators;
  c.max_degree = kMaxDegree;
  c.coefficient_bound = kBound;
  c.seed = kSeed;
  c.trials = trials;
  c.suite = std::move(suite);
  return c;
}

std::string failed_claims(const CheckResult& r) {
  std::string out;
  for (const auto& [claim, counts] : r.details.items()) {
    if (!counts.contains("failed") || counts["failed"] == 0) continue;
    out += (out.empty() ? "" : "; ") + claim + " " + counts["failed"].dump() + "/" +
           counts["checked"].dump();
  }
  return out;
}

std::string summary(const CheckReport& report) {
  std::string out;
  for (const CheckResult& r : report.checks) {
    out += (out.empty() ? "" : ", ") + r.name + " " + std::to_string(r.failures) + "/" +
           std::to_string(r.trials);
    if (r.failures > 0) out += " [" + failed_claims(r) + "]";
  }
  return out;
}

bool zero_failures(const CheckReport& report) {
  for (const CheckResult& r : report.checks) {
    if (r.failures != 0 || r.trials == 0) return false;
  }
  return !report.checks.empty();
}

// Every listed check must report 0 failures, whatever its role.
Criterion suite(int id, std::string name, std::vector<std::string> checks, long trials) {
  return {id, std::move(name), [checks, trials] {
            const CheckReport report = run_suite(config(checks, trials));
            return Outcome{zero_failures(report), "failures/trials: " + summary(report)};
          }};
}

struct Process {
  int status;
  std::string out;
};

Process run_process(const std::string& command) {
  Process p{-1, ""};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return p;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) p.out.append(buffer, n);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

std::string cli_flags(const std::string& suite, long trials) {
  std::ostringstream s;
  s << " verify --generators " << kGenerators << " --max-degree " << kMaxDegree << " --bound "
    << kBound << " --seed " << kSeed << " --trials " << trials << " --suite " << suite
    << " --format json 2>/dev/null";
  return s.str();
}

Outcome structural_relations() {
  const CheckReport report =
      run_suite(config({"q-minus-ddelta", "delta-split", "d-delta0-general"}, 1000));
  // Context for a failure: the same relations restricted to Q = 0, and the
  // general forms carrying the Q terms.
  const CheckReport context =
      run_suite(config({"d-delta0", "partial-delta0", "structural-general"}, 1000));
  return {zero_failures(report), "failures/trials: " + summary(report) +
                                     "; context: " + summary(context)};
}

Outcome shape_closures() {
  const SampleParams params{kGenerators, kMaxDegree, kBound};
  constexpr long kTrials = 500;
  bool pass = true;
  std::string detail;
  auto name = [](MatrixSet a, MatrixSet b) {
    return std::string("P_") + to_string(a) + "*P_" + to_string(b);
  };
  for (const auto& [a, b] : {std::pair{MatrixSet::S, MatrixSet::S},
                             std::pair{MatrixSet::T, MatrixSet::S},
                             std::pair{MatrixSet::D, MatrixSet::D}}) {
    const ShapeClosureResult r = shape_closure(a, b, kTrials, kSeed, params);
    pass = pass && r.first_map_first_failures == 0;
    detail += name(a, b) + " first-map-first " + std::to_string(r.first_map_first_failures) +
              "/" + std::to_string(kTrials) + ", ";
  }
  for (const MatrixSet b : {MatrixSet::A, MatrixSet::S, MatrixSet::T}) {
    const ShapeClosureResult r = shape_closure(MatrixSet::D, b, kTrials, kSeed, params);
    std::string holds;
    if (r.first_map_first_failures == 0) holds += "first-map-first";
    if (r.outer_map_first_failures == 0) {
      holds += std::string(holds.empty() ? "" : "+") + "outer-map-first";
    }
    if (b == MatrixSet::A) pass = pass && !holds.empty();
    detail += name(MatrixSet::D, b) + " in P_D: first-map-first " +
              std::to_string(r.first_map_first_failures) + "/" + std::to_string(kTrials) +
              ", outer-map-first " + std::to_string(r.outer_map_first_failures) + "/" +
              std::to_string(kTrials) + " (holds in " + (holds.empty() ? "none" : holds) + ")";
    if (b != MatrixSet::T) detail += ", ";
  }
  return {pass, detail};
}

// The checks behind criteria 2 to 11.
const std::vector<std::string> kPropertySuites = {
    "d-squared", "graded-leibniz", "quotient-rule", "ber-addition", "ber-explicit-vs-matrix",
    "q-minus-ddelta", "delta-split", "d-delta0", "partial-delta0", "structural-general",
    "reduced-satisfy-condition", "tpt-noninvertible", "ber-scf", "ber-tpt-three-forms",
    "ber-tpt-nilpotent", "eq-bu", "parity-twist", "chain-rule", "ber-multiplicative",
    "star-vs-compose", "spin-rule", "deg-star-second-row", "cocycle-standard",
    "cocycle-mixed", "deg-both-cocycles"};

Outcome mutation_guard() {
  std::string list;
  for (const std::string& s : kPropertySuites) list += (list.empty() ? "" : ",") + s;
  constexpr long kTrials = 20;
  const Process real = run_process(std::string(SUPERCONF_CLI_PATH) + cli_flags(list, kTrials));
  const Process mutant =
      run_process(std::string(SUPERCONF_MUTANT_CLI_PATH) + cli_flags(list, kTrials));
  std::string caught;
  try {
    const Json report = parse_json(mutant.out);
    for (const Json& c : report["checks"]) {
      if (c["failures"].get<long>() > 0) {
        caught += (caught.empty() ? "" : ", ") + c["name"].get<std::string>();
      }
    }
  } catch (const Error& e) {
    return {false, std::string("mutant report unreadable: ") + e.what()};
  }
  return {real.status == 0 && mutant.status == 1 && !caught.empty(),
          "unmutated exit " + std::to_string(real.status) + ", mutant exit " +
              std::to_string(mutant.status) + ", mutant caught by: " +
              (caught.empty() ? "none" : caught)};
}

Outcome reproducibility() {
  const std::string command = std::string(SUPERCONF_CLI_PATH) + cli_flags("all", 10);
  const Process a = run_process(command);
  const Process b = run_process(command);
  const bool same = a.status == 0 && !a.out.empty() && a.out == b.out;
  return {same, std::to_string(a.out.size()) + " and " + std::to_string(b.out.size()) +
                    " bytes, " + (a.out == b.out ? "identical" : "different")};
}

std::vector<Criterion> criteria() {
  return {
      suite(1, "algebra soundness", {"algebra-axioms"}, 1000),
      suite(2, "calculus soundness", {"d-squared", "graded-leibniz", "quotient-rule"}, 1000),
      suite(3, "Berezinian addition", {"ber-addition"}, 1000),
      suite(4, "explicit vs matrix Berezinian", {"ber-explicit-vs-matrix"}, 1000),
      {5, "structural relations", structural_relations},
      suite(6, "reduction builders", {"reduced-satisfy-condition", "tpt-noninvertible"}, 500),
      suite(7, "reduced Berezinians",
            {"ber-scf", "ber-tpt-three-forms", "ber-tpt-nilpotent", "eq-bu"}, 500),
      suite(8, "parity twist", {"parity-twist"}, 500),
      suite(9, "chain rule and multiplicativity", {"chain-rule", "ber-multiplicative"}, 500),
      suite(10, "star law", {"star-vs-compose", "spin-rule", "deg-star-second-row"}, 500),
      suite(11, "cocycles", {"cocycle-standard", "cocycle-mixed", "deg-both-cocycles"}, 500),
      {12, "shape closures", shape_closures},
      suite(13, "determinant addition", {"det-addition-footnote"}, 1000),
      {14, "mutation guard", mutation_guard, false},
      {15, "reproducibility", reproducibility, false},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  std::cout << "config: L = " << kGenerators << ", max degree " << kMaxDegree
            << ", coefficient bound " << kBound << ", seed " << kSeed
            << "; tolerance: exact, 0 failures\n";
  bool all_pass = true;
  bool all_budgeted = true;
  double budgeted_millis = 0;
  for (const Criterion& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) {
      all_budgeted = all_budgeted && !c.budgeted;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budgeted) budgeted_millis += millis;
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %2d %s (%.0f ms): %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), millis, o.detail.c_str());
    std::fflush(stdout);
  }
  if (all_budgeted) {
    const bool in_budget = budgeted_millis < kBudgetMillis;
    all_pass = all_pass && in_budget;
    std::printf("%s time budget: criteria 1-13 took %.1f s (limit < %.0f s)\n",
                in_budget ? "PASS" : "FAIL", budgeted_millis / 1000, kBudgetMillis / 1000);
  }
  return all_pass ? 0 : 1;
}
