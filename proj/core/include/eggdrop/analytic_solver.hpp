#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "eggdrop/capacity.hpp"

namespace eggdrop {

/// Exact (E(T*, K), C(T*, K)) left behind by the incremental scan. The policy
/// engine descends the decision tree from here.
struct TerminalState {
  std::uint64_t tests = 0;
  std::uint32_t items = 0;
  Cap capacity;
  Cap boundary;

  friend bool operator==(const TerminalState&, const TerminalState&) = default;
};

enum class Phase {
  kTrivial,  // N <= 1 or K == 1
  kPhase1,   // K >= ceil(log2(N + 1)): plain binary search suffices
  kPhase3,   // multiplier search followed by the incremental scan
};

std::string_view to_string(Phase phase);

struct SolveOutcome {
  std::uint64_t t_star = 0;
  std::optional<TerminalState> terminal;
  Phase phase = Phase::kTrivial;
  std::uint32_t phase2_splits = 0;
  std::uint32_t phase3_steps = 0;
};

/// T* = min{T : E(T, K) >= N} in O(log N). Accepts N = 0 (returns 0);
/// throws std::invalid_argument for items outside [1, 2^16].
SolveOutcome solve_analytic(const ProblemInstance& instance);

/// M_max = 2^ceil(T_ideal / K). Requires K < ideal_tests(N).
std::uint64_t phase2_bound(std::uint64_t floors, std::uint32_t items);

struct Phase2Result {
  CapacityState cached;  // exact state at T = K * (multiplier - 1)
  std::uint64_t multiplier = 0;
  std::uint32_t splits = 0;
};

/// Binary search for the least M in [1, M_max] with E(K * M, K) >= N, caching
/// the last evaluation that fell short. Requires K < ideal_tests(N).
Phase2Result phase2_search(std::uint64_t floors, std::uint32_t items);

struct Phase3Result {
  TerminalState terminal;
  std::uint32_t steps = 0;
};

/// Advances `cached` one test at a time until E >= N. At most K steps are
/// allowed; more means the cache was wrong and raises ContractViolation.
Phase3Result phase3_scan(std::uint64_t floors, std::uint32_t items, const CapacityState& cached);

}  // namespace eggdrop
