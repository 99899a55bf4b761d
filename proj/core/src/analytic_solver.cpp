#include "eggdrop/analytic_solver.hpp"

#include <stdexcept>

#include "eggdrop/errors.hpp"

namespace eggdrop {
namespace {

void require_constrained(std::uint64_t floors, std::uint32_t items) {
  if (items < 1 || items >= ideal_tests(floors)) {
    throw std::invalid_argument("multiplier search requires 1 <= K < ceil(log2(N + 1))");
  }
}

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kTrivial:
      return "trivial";
    case Phase::kPhase1:
      return "phase1";
    case Phase::kPhase3:
      return "phase3";
  }
  return "unknown";
}

std::uint64_t phase2_bound(std::uint64_t floors, std::uint32_t items) {
  require_constrained(floors, items);
  return std::uint64_t{1} << ceil_div(ideal_tests(floors), items);
}

Phase2Result phase2_search(std::uint64_t floors, std::uint32_t items) {
  const std::uint64_t bound = phase2_bound(floors, items);
  std::uint64_t lo = 1;
  std::uint64_t hi = bound;
  std::optional<CapacityState> cached;
  std::uint32_t splits = 0;

  while (lo < hi) {
    ++splits;
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const std::uint64_t tests = std::uint64_t{items} * mid;
    const CapacityTerm eval = capacity_with_term(tests, items, floors);
    if (eval.capacity.reaches(floors)) {
      hi = mid;
    } else {
      lo = mid + 1;
      cached = CapacityState{eval.capacity, eval.term, tests};
    }
  }

  if (!cached) {
    // E(K, K) = 2^K - 1 < N whenever K < T_ideal, so M = 1 always falls short.
    throw ContractViolation("phase2_search: no short-falling multiplier was cached");
  }
  return Phase2Result{*cached, lo, splits};
}

Phase3Result phase3_scan(std::uint64_t floors, std::uint32_t items, const CapacityState& cached) {
  CapacityState state = cached;
  std::uint32_t steps = 0;
  while (!state.capacity.reaches(floors)) {
    if (steps == items) {
      throw ContractViolation("phase3_scan: exceeded K incremental steps from T = " +
                              std::to_string(cached.tests));
    }
    state = advance_state(state, items);
    ++steps;
  }
  if (state.capacity.saturated || state.boundary.saturated) {
    throw ContractViolation("phase3_scan: terminal state lost exactness");
  }
  return Phase3Result{TerminalState{state.tests, items, state.capacity, state.boundary}, steps};
}

SolveOutcome solve_analytic(const ProblemInstance& instance) {
  validate(instance, /*allow_empty=*/true);
  const std::uint64_t n = instance.floors;
  const std::uint32_t k = instance.items;

  SolveOutcome out;
  if (n <= 1 || k == 1) {
    out.t_star = n;
    out.phase = Phase::kTrivial;
    return out;
  }

  const std::uint32_t ideal = ideal_tests(n);
  if (k >= ideal) {
    out.t_star = ideal;
    out.phase = Phase::kPhase1;
    return out;
  }

  const Phase2Result coarse = phase2_search(n, k);
  const Phase3Result fine = phase3_scan(n, k, coarse.cached);
  out.t_star = fine.terminal.tests;
  out.terminal = fine.terminal;
  out.phase = Phase::kPhase3;
  out.phase2_splits = coarse.splits;
  out.phase3_steps = fine.steps;
  return out;
}

}  // namespace eggdrop
