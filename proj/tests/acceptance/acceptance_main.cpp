// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are exact everywhere; the time limits are the stated
// wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eggdrop/eggdrop.hpp"
#include "../oracles.hpp"

namespace {

using namespace eggdrop;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBigN = 1000000000000000000ULL;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string label(const ProblemInstance& p) {
  return "N=" + std::to_string(p.floors) + " K=" + std::to_string(p.items);
}

// Instances shared by criteria 1, 2, 4 and 5.
std::vector<ProblemInstance> grid_instances() {
  std::vector<ProblemInstance> out;
  for (std::uint64_t n = 0; n <= 500; ++n) {
    for (std::uint32_t k = 1; k <= 8; ++k) out.push_back({n, k});
  }
  return out;
}

std::vector<ProblemInstance> random_instances() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> floors(1, kBigN);
  std::uniform_int_distribution<std::uint32_t> items(1, 128);
  std::vector<ProblemInstance> out;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = floors(rng);
    out.push_back({n, items(rng)});
  }
  return out;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  oracle::MinimaxTable brute(500, 8);
  std::uint64_t mismatches = 0;
  std::string first;
  for (const ProblemInstance& p : grid_instances()) {
    const std::uint64_t analytic = solve_analytic(p).t_star;
    const bool agree = analytic == solve_dp_slow(p) && analytic == solve_dp_capacity(p) &&
                       analytic == solve_binomial_bsearch(p) && analytic == brute.at(p.floors, p.items);
    if (!agree && mismatches++ == 0) first = label(p);
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && elapsed < 60.0;
  o.detail = "4008 instances, " + std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : " (first " + first + ")") + ", " + std::to_string(elapsed) + " s (limit 60 s)";
  return o;
}

Outcome large_scale_agreement() {
  const auto start = Clock::now();
  std::uint64_t mismatches = 0;
  std::string first;
  for (const ProblemInstance& p : random_instances()) {
    if (solve_analytic(p).t_star != solve_binomial_bsearch(p) && mismatches++ == 0) first = label(p);
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && elapsed < 5.0;
  o.detail = "1000 seeded instances, " + std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : " (first " + first + ")") + ", " + std::to_string(elapsed) + " s (limit 5 s)";
  return o;
}

Outcome classical_anchors() {
  const std::uint64_t classic = solve_analytic({100, 2}).t_star;
  const std::uint64_t first_drop = next_drop(init_policy({100, 2}));
  const std::uint64_t huge = solve_analytic({kBigN, 2}).t_star;
  const std::uint64_t unconstrained = solve_analytic({100, 7}).t_star;
  Outcome o;
  // Frozen from the quadratic-threshold oracle: least T with T (T + 1) / 2 >= 10^18.
  const std::uint64_t quadratic = oracle::quadratic_threshold(kBigN);
  o.pass = classic == 14 && first_drop == 14 && quadratic == 1414213562 && huge == quadratic &&
           unconstrained == 7;
  o.detail = "T*(100,2)=" + std::to_string(classic) + " first drop " + std::to_string(first_drop) +
             ", T*(1e18,2)=" + std::to_string(huge) + " (quadratic oracle " + std::to_string(quadratic) +
             "), T*(100,7)=" + std::to_string(unconstrained);
  return o;
}

Outcome counter_bound(bool phase3) {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint32_t worst_margin = 0;
  for (const auto& set : {grid_instances(), random_instances()}) {
    for (const ProblemInstance& p : set) {
      const SolveOutcome s = solve_analytic(p);
      ++checked;
      if (phase3) {
        if (s.phase3_steps > p.items) ++violations;
        worst_margin = std::max(worst_margin, s.phase3_steps);
      } else {
        const std::uint32_t bound = (ideal_tests(p.floors) + p.items - 1) / p.items;
        if (s.phase2_splits > bound) ++violations;
        worst_margin = std::max(worst_margin, s.phase2_splits);
      }
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(checked) + " instances, " + std::to_string(violations) + " violations, max " +
             (phase3 ? "phase3_steps " : "phase2_splits ") + std::to_string(worst_margin);
  return o;
}

Outcome policy_soundness() {
  const auto start = Clock::now();
  std::uint64_t traces = 0;
  std::uint64_t failures = 0;
  std::string first;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      const ProblemInstance p{n, k};
      const std::uint64_t t_star = solve_analytic(p).t_star;
      std::uint64_t worst = 0;
      bool ok = true;
      for (std::uint64_t h = 0; h <= n; ++h) {
        const ThresholdTrace trace = simulate(p, h);
        ++traces;
        ok = ok && trace.identified == h && trace.tests_used <= t_star && trace.breaks_used <= k;
        worst = std::max(worst, trace.tests_used);
      }
      ok = ok && worst == t_star;
      if (!ok && failures++ == 0) first = label(p);
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = failures == 0 && elapsed < 120.0;
  o.detail = std::to_string(traces) + " traces, " + std::to_string(failures) + " failing instances" +
             (first.empty() ? "" : " (first " + first + ")") + ", " + std::to_string(elapsed) + " s (limit 120 s)";
  return o;
}

// Recomputes each division the library performs from the values it actually
// produced, and counts nonzero remainders. Any ContractViolation raised by the
// library along the way is also counted.
Outcome exact_arithmetic() {
  std::uint64_t sites = 0;
  std::uint64_t remainders = 0;
  std::uint64_t violations = 0;
  auto divides = [&](u128 numerator, u128 divisor) {
    ++sites;
    if (divisor == 0 || numerator % divisor != 0) ++remainders;
  };

  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      const ProblemInstance p{n, k};
      try {
        const SolveOutcome solved = solve_analytic(p);
        // Capacity term update, for every T the solver could probe.
        for (std::uint64_t t = 0; t <= solved.t_star + k; ++t) {
          u128 term = 1;
          for (std::uint64_t i = 1; i <= std::min<std::uint64_t>(k, t); ++i) {
            divides(term * (t - i + 1), i);
            term = term * (t - i + 1) / i;
          }
          const CapacityTerm lib = capacity_with_term(t, k, kU128Max);
          if (lib.term.value != (k > t ? 0 : term)) ++remainders;
        }
        // Boundary update across the incremental scan.
        if (k < ideal_tests(n)) {
          CapacityState s = phase2_search(n, k).cached;
          while (!s.capacity.reaches(n)) {
            divides(s.boundary.value * k, s.tests + 1 - k);
            s = advance_state(s, k);
          }
        }
        // Split divisions at every analytic node of the policy tree.
        std::vector<PolicyState> stack{init_policy(p)};
        while (!stack.empty()) {
          const PolicyState s = stack.back();
          stack.pop_back();
          if (s.mode == PolicyMode::kResolved) continue;
          if (s.mode == PolicyMode::kAnalytic) {
            const u128 b = s.boundary.value;
            divides(b * s.items, s.tests);
            const u128 b_stay = b - b * s.items / s.tests;
            divides(s.capacity.value + b_stay - 1, 2);
          }
          const std::uint64_t f = next_drop(s);
          stack.push_back(apply_outcome(s, f, DropOutcome::kBroke));
          stack.push_back(apply_outcome(s, f, DropOutcome::kSurvived));
        }
      } catch (const ContractViolation&) {
        ++violations;
      }
    }
  }
  Outcome o;
  o.pass = remainders == 0 && violations == 0 && sites > 0;
  o.detail = std::to_string(sites) + " division sites, " + std::to_string(remainders) + " nonzero remainders, " +
             std::to_string(violations) + " contract violations";
  return o;
}

Outcome tree_linearity() {
  std::uint64_t failures = 0;
  std::string first;
  std::uint64_t nodes = 0;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      const SimulationReport r = map_policy_tree({n, k});
      nodes += r.nodes_visited;
      const bool ok = r.ok() && r.nodes_visited <= 2 * (n + 1) && r.total_leaves == n + 1;
      if (!ok && failures++ == 0) first = label({n, k});
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = "1800 trees, " + std::to_string(nodes) + " nodes, " + std::to_string(failures) + " failing" +
             (first.empty() ? "" : " (first " + first + ")");
  return o;
}

Outcome performance_smoke() {
  double worst_ms = 0;
  std::uint32_t worst_k = 0;
  std::uint64_t sink = 0;
  for (std::uint32_t k = 2; k <= 64; ++k) {
    const auto start = Clock::now();
    sink += solve_analytic({kBigN, k}).t_star;
    const double ms = seconds_since(start) * 1e3;
    if (ms > worst_ms) {
      worst_ms = ms;
      worst_k = k;
    }
  }
  Outcome o;
  o.pass = worst_ms < 10.0 && sink > 0;
  o.detail = "slowest call " + std::to_string(worst_ms) + " ms at K=" + std::to_string(worst_k) + " (limit 10 ms)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1 oracle equivalence (N<=500, K<=8)", oracle_equivalence},
      {"C2 large-scale agreement (1000 random, N<=1e18, K<=128)", large_scale_agreement},
      {"C3 classical anchors", classical_anchors},
      {"C4 phase3_steps <= K", [] { return counter_bound(true); }},
      {"C5 phase2_splits <= ceil(ceil(log2(N+1))/K)", [] { return counter_bound(false); }},
      {"C6 policy soundness and tightness (N<=300, K<=6, all h)", policy_soundness},
      {"C7 exact integer divisions", exact_arithmetic},
      {"C8 tree mapping linearity", tree_linearity},
      {"C9 performance smoke (N=1e18, K in [2,64], <10 ms/call)", performance_smoke},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
