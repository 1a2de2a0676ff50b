#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordvec/random_instances.hpp"

namespace ordvec::suite {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::size_t cases = 0;
  std::string reason;
  nlohmann::json counterexample;  // null unless failed
};

enum class Mutant {
  None,
  /// Negate one coefficient of every p_M witness before it is verified.
  FlipWitness,
};

struct Options {
  std::uint64_t seed = 42;
  InstanceBounds bounds;
  Mutant mutant = Mutant::None;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct Check {
  std::string name;
  std::string statement;
  std::function<CheckResult(Sampler&, const Options&)> run;
};

/// Every theorem-keyed check, sorted by name.
const std::vector<Check>& all_checks();

/// Runs one check with its own sampler stream derived from the seed and the
/// check name. Exceptions are reported as failures.
CheckResult run_check(const Check& check, const Options& opts);

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;
  [[nodiscard]] bool passed() const;
};

/// Runs the selected checks (all when `names` is empty) in parallel; the
/// report is ordered by check name.
Report run_suite(const Options& opts, const std::vector<std::string>& names = {});

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace ordvec::suite
