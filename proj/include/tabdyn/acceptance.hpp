#pragma once

// The acceptance suite: eight exact checks and twelve seeded Monte Carlo
// checks, each reported as one pass/fail line.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tabdyn/constants.hpp"
#include "tabdyn/experiments.hpp"

namespace tabdyn {

enum class Suite { Exact, MonteCarlo, All };
enum class Scale { Small, Full };

Suite parse_suite(std::string_view s);  ///< exact | mc | all; throws Usage
Scale parse_scale(std::string_view s);  ///< small | full; throws Usage

struct CriterionResult {
  int id = 0;
  std::string title;
  bool exact = false;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<ExperimentReport> reports;
};

struct AcceptanceOptions {
  Suite suite = Suite::All;
  Scale scale = Scale::Full;
  std::uint64_t seed = constants::kDefaultSeed;
  int jobs = 1;
  /// Only these criteria when nonempty.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 20;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// "PASS  9  title: detail (1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace tabdyn
