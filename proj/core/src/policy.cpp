#include "eggdrop/policy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eggdrop/analytic_solver.hpp"
#include "eggdrop/errors.hpp"

namespace eggdrop {
namespace {

// ceil(log2(n)) for n >= 1.
std::uint32_t ceil_log2(std::uint64_t n) {
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

void check_invariants(const PolicyState& s) {
  if (s.f_safe >= s.f_break) throw ContractViolation("policy: f_safe must stay below f_break");
  if (s.mode == PolicyMode::kResolved) {
    if (s.candidates() != 1) throw ContractViolation("policy: resolved with an open interval");
    return;
  }
  if (s.candidates() < 2) throw ContractViolation("policy: unresolved with a single candidate");
  if (s.items == 0) throw ContractViolation("policy: out of items before resolution");
  if (s.mode == PolicyMode::kAnalytic &&
      (s.capacity.saturated || s.capacity.value < s.candidates() - 1)) {
    throw ContractViolation("policy: remaining capacity " + to_string(s.capacity.value) +
                            " cannot cover " + std::to_string(s.candidates() - 1) + " floors");
  }
}

}  // namespace

std::string_view to_string(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::kAnalytic:
      return "analytic";
    case PolicyMode::kBisect:
      return "bisect";
    case PolicyMode::kResolved:
      return "resolved";
  }
  return "unknown";
}

std::string_view to_string(DropOutcome outcome) {
  return outcome == DropOutcome::kBroke ? "broke" : "survived";
}

PolicyState init_policy(const ProblemInstance& instance) {
  validate(instance);
  const SolveOutcome solved = solve_analytic(instance);

  PolicyState state;
  state.tests = solved.t_star;
  state.items = instance.items;
  state.f_safe = 0;
  state.f_break = instance.floors + 1;

  if (instance.items >= ideal_tests(instance.floors)) {
    state.mode = PolicyMode::kBisect;
  } else if (solved.terminal) {
    state.capacity = solved.terminal->capacity;
    state.boundary = solved.terminal->boundary;
    state.mode = PolicyMode::kAnalytic;
  } else {
    // K = 1: E(N, 1) = C(N, 1) = N, sequential testing from the bottom.
    state.capacity = Cap::exact(instance.floors);
    state.boundary = Cap::exact(instance.floors);
    state.mode = PolicyMode::kAnalytic;
  }
  check_invariants(state);
  return state;
}

SplitCapacities split_state(Cap capacity, Cap boundary, std::uint64_t tests, std::uint32_t items) {
  if (capacity.saturated || boundary.saturated) {
    throw ContractViolation("split_state: saturated input");
  }
  if (tests < 1 || items < 1) throw ContractViolation("split_state: needs t >= 1 and k >= 1");
  const u128 e = capacity.value;
  const u128 b = boundary.value;

  const Cap b_break = scale_exact(b, items, tests);
  if (b_break.saturated || b_break.value > b) throw ContractViolation("split_state: bad B k / t");
  const u128 b_stay = b - b_break.value;

  if (e == 0) throw ContractViolation("split_state: E(t, k) must be positive");
  const u128 twice_stay = e + b_stay - 1;
  if (twice_stay < e - 1) throw ContractViolation("split_state: overflow in parity sum");
  if (twice_stay % 2 != 0) {
    throw ContractViolation("split_state: E + B_stay - 1 is odd (" + to_string(twice_stay) + ")");
  }
  const u128 e_stay = twice_stay / 2;
  if (e_stay + 1 > e) throw ContractViolation("split_state: E_stay exceeds E - 1");

  return SplitCapacities{Cap::exact(e_stay), Cap::exact(b_stay), Cap::exact(e - e_stay - 1),
                         b_break};
}

std::uint64_t next_drop(const PolicyState& state) {
  if (state.mode == PolicyMode::kResolved) {
    throw std::invalid_argument("next_drop: the threshold is already resolved");
  }
  if (state.candidates() < 2) throw ContractViolation("next_drop: interval already closed");

  if (state.mode == PolicyMode::kBisect) {
    return state.f_safe + state.candidates() / 2;
  }
  const SplitCapacities split = split_state(state.capacity, state.boundary, state.tests, state.items);
  const u128 analytic = u128{state.f_safe} + split.break_capacity.value + 1;
  return static_cast<std::uint64_t>(std::min<u128>(state.f_break - 1, analytic));
}

PolicyState apply_outcome(const PolicyState& state, std::uint64_t floor, DropOutcome outcome) {
  const std::uint64_t expected = next_drop(state);
  if (floor != expected) {
    throw ContractViolation("apply_outcome: policy prescribes floor " + std::to_string(expected) +
                            ", got " + std::to_string(floor));
  }
  if (state.tests == 0) throw ContractViolation("apply_outcome: test budget exhausted");

  PolicyState next = state;
  next.tests = state.tests - 1;
  const bool broke = outcome == DropOutcome::kBroke;
  if (broke) {
    next.f_break = floor;
    next.items = state.items - 1;
  } else {
    next.f_safe = floor;
  }

  if (state.mode == PolicyMode::kAnalytic) {
    const SplitCapacities split = split_state(state.capacity, state.boundary, state.tests, state.items);
    next.capacity = broke ? split.break_capacity : split.stay_capacity;
    next.boundary = broke ? split.break_boundary : split.stay_boundary;
  }

  if (next.candidates() == 1) {
    next.mode = PolicyMode::kResolved;
  } else if (next.mode == PolicyMode::kAnalytic && next.items >= ceil_log2(next.candidates())) {
    next.mode = PolicyMode::kBisect;
  }
  if (next.mode != PolicyMode::kAnalytic) {
    next.capacity = Cap{};
    next.boundary = Cap{};
  }
  check_invariants(next);
  return next;
}

std::optional<std::uint64_t> resolved_threshold(const PolicyState& state) {
  if (state.mode != PolicyMode::kResolved) return std::nullopt;
  return state.f_safe;
}

}  // namespace eggdrop
