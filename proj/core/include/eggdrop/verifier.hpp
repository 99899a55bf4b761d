#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eggdrop/capacity.hpp"
#include "eggdrop/policy.hpp"

namespace eggdrop {

struct Drop {
  std::uint64_t floor = 0;
  DropOutcome outcome = DropOutcome::kSurvived;

  friend bool operator==(const Drop&, const Drop&) = default;
};

/// One run of the policy against a fixed highest safe floor h. An item
/// dropped from floor f breaks iff f > h.
struct ThresholdTrace {
  std::uint64_t h = 0;
  std::vector<Drop> drops;
  std::uint64_t tests_used = 0;
  std::uint32_t breaks_used = 0;
  std::uint64_t identified = 0;
};

ThresholdTrace simulate(const ProblemInstance& instance, std::uint64_t h);

struct SimulationReport {
  std::uint64_t floors = 0;
  std::uint32_t items = 0;
  std::uint64_t t_star = 0;
  std::uint64_t max_tests = 0;
  std::uint64_t worst_h = 0;  // smallest h whose run takes max_tests drops
  std::uint64_t total_leaves = 0;
  std::uint64_t nodes_visited = 0;
  std::uint32_t max_breaks = 0;
  std::vector<std::uint64_t> depth_histogram;  // leaves per depth
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Walks the whole decision tree once, depth first, carrying PolicyState
/// values on an explicit stack. Leaves must come out as h = 0, 1, ..., N in
/// order, the deepest leaf must sit at depth T*, and no path may use more
/// than K breaks; anything else is recorded in `violations`.
SimulationReport map_policy_tree(const ProblemInstance& instance);

inline constexpr std::uint64_t kOptimalityMaxFloors = 100000;

/// Tree depth equals the solver's T*, and the solver agrees with the slow DP
/// wherever that oracle is affordable. Requires N <= 10^5.
bool check_optimality(const ProblemInstance& instance);

}  // namespace eggdrop
