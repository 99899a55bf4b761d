#include "eggdrop/verifier.hpp"

#include <stdexcept>

#include "eggdrop/analytic_solver.hpp"
#include "eggdrop/baselines.hpp"
#include "eggdrop/errors.hpp"

namespace eggdrop {

ThresholdTrace simulate(const ProblemInstance& instance, std::uint64_t h) {
  validate(instance);
  if (h > instance.floors) throw std::invalid_argument("simulate: h must be in [0, N]");

  ThresholdTrace trace;
  trace.h = h;
  PolicyState state = init_policy(instance);
  while (state.mode != PolicyMode::kResolved) {
    const std::uint64_t floor = next_drop(state);
    const DropOutcome outcome = floor > h ? DropOutcome::kBroke : DropOutcome::kSurvived;
    trace.drops.push_back({floor, outcome});
    if (outcome == DropOutcome::kBroke) ++trace.breaks_used;
    state = apply_outcome(state, floor, outcome);
  }
  trace.tests_used = trace.drops.size();
  trace.identified = *resolved_threshold(state);
  return trace;
}

SimulationReport map_policy_tree(const ProblemInstance& instance) {
  validate(instance);
  SimulationReport report;
  report.floors = instance.floors;
  report.items = instance.items;
  report.t_star = solve_analytic(instance).t_star;

  struct Frame {
    PolicyState state;
    std::uint64_t depth;
    std::uint32_t breaks;
  };
  std::vector<Frame> stack;
  stack.push_back({init_policy(instance), 0, 0});
  std::uint64_t next_leaf = 0;

  try {
    while (!stack.empty()) {
      const Frame frame = stack.back();
      stack.pop_back();
      ++report.nodes_visited;
      const PolicyState& s = frame.state;

      if (s.mode == PolicyMode::kResolved) {
        if (s.f_safe != next_leaf) {
          report.violations.push_back("leaf h=" + std::to_string(s.f_safe) + " visited, expected h=" +
                                      std::to_string(next_leaf));
        }
        next_leaf = s.f_safe + 1;
        ++report.total_leaves;
        if (report.depth_histogram.size() <= frame.depth) report.depth_histogram.resize(frame.depth + 1, 0);
        ++report.depth_histogram[frame.depth];
        if (frame.depth > report.max_tests || report.total_leaves == 1) {
          report.max_tests = frame.depth;
          report.worst_h = s.f_safe;
        }
        if (frame.breaks > report.max_breaks) report.max_breaks = frame.breaks;
        continue;
      }

      const std::uint64_t floor = next_drop(s);
      if (floor <= s.f_safe || floor >= s.f_break) {
        report.violations.push_back("drop at floor " + std::to_string(floor) + " outside (" +
                                    std::to_string(s.f_safe) + ", " + std::to_string(s.f_break) + ")");
        continue;
      }
      // Survive subtree pushed first so the break subtree (lower h) is walked first.
      stack.push_back({apply_outcome(s, floor, DropOutcome::kSurvived), frame.depth + 1, frame.breaks});
      stack.push_back({apply_outcome(s, floor, DropOutcome::kBroke), frame.depth + 1, frame.breaks + 1});
    }
  } catch (const ContractViolation& e) {
    report.violations.push_back(std::string("contract violation: ") + e.what());
  }

  if (report.total_leaves != instance.floors + 1) {
    report.violations.push_back("expected " + std::to_string(instance.floors + 1) + " leaves, saw " +
                                std::to_string(report.total_leaves));
  }
  if (report.max_tests != report.t_star) {
    report.violations.push_back("deepest leaf at depth " + std::to_string(report.max_tests) +
                                ", T* = " + std::to_string(report.t_star));
  }
  if (report.max_breaks > instance.items) {
    report.violations.push_back("a path uses " + std::to_string(report.max_breaks) + " breaks");
  }
  return report;
}

bool check_optimality(const ProblemInstance& instance) {
  validate(instance);
  if (instance.floors > kOptimalityMaxFloors) {
    throw std::invalid_argument("check_optimality is limited to N <= 100000");
  }
  const SimulationReport report = map_policy_tree(instance);
  if (!report.ok()) return false;
  const std::uint64_t t_star = solve_analytic(instance).t_star;
  if (report.max_tests != t_star) return false;
  if (instance.floors <= kSlowDpMaxFloors && instance.items <= kSlowDpMaxItems) {
    return solve_dp_slow(instance) == t_star;
  }
  return true;
}

}  // namespace eggdrop
