#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "eggdrop/capacity.hpp"

namespace eggdrop {

enum class PolicyMode {
  kAnalytic,  // descending the capacity tree with exact (E, B)
  kBisect,    // items cover the remaining interval; plain midpoints
  kResolved,  // f_break == f_safe + 1
};

enum class DropOutcome { kBroke, kSurvived };

std::string_view to_string(PolicyMode mode);
std::string_view to_string(DropOutcome outcome);

/// Live state of the drop policy. The threshold h (highest safe floor) is
/// known to satisfy f_safe <= h < f_break. `capacity` and `boundary` are
/// E(tests, items) and C(tests, items) while in analytic mode and are zeroed
/// once the policy switches to bisection.
struct PolicyState {
  std::uint64_t tests = 0;
  std::uint32_t items = 0;
  Cap capacity;
  Cap boundary;
  std::uint64_t f_safe = 0;
  std::uint64_t f_break = 1;
  PolicyMode mode = PolicyMode::kResolved;

  [[nodiscard]] std::uint64_t candidates() const { return f_break - f_safe; }

  friend bool operator==(const PolicyState&, const PolicyState&) = default;
};

/// Root of the decision tree for N >= 1 floors. Unconstrained instances
/// (K >= ceil(log2(N + 1))) start in bisect mode; everything else starts in
/// analytic mode from the solver's terminal state.
PolicyState init_policy(const ProblemInstance& instance);

struct SplitCapacities {
  Cap stay_capacity;   // E(t-1, k)
  Cap stay_boundary;   // C(t-1, k)
  Cap break_capacity;  // E(t-1, k-1)
  Cap break_boundary;  // C(t-1, k-1)

  friend bool operator==(const SplitCapacities&, const SplitCapacities&) = default;
};

/// Splits exact (E(t, k), C(t, k)) into the two child subtrees:
///   C(t-1, k-1) = B k / t,   C(t-1, k) = B - C(t-1, k-1),
///   E(t-1, k) = (E + C(t-1, k) - 1) / 2,   E(t-1, k-1) = E - E(t-1, k) - 1.
/// Both divisions must be exact; a remainder raises ContractViolation.
SplitCapacities split_state(Cap capacity, Cap boundary, std::uint64_t tests, std::uint32_t items);

/// Next floor to test, strictly inside (f_safe, f_break). Throws
/// std::invalid_argument for a resolved state.
std::uint64_t next_drop(const PolicyState& state);

/// Transition after testing `floor` (which must equal next_drop(state)).
PolicyState apply_outcome(const PolicyState& state, std::uint64_t floor, DropOutcome outcome);

/// The highest safe floor once resolved, otherwise nullopt.
std::optional<std::uint64_t> resolved_threshold(const PolicyState& state);

}  // namespace eggdrop
