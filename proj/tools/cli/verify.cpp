#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "cli/cli.hpp"

namespace eggdrop::cli {
namespace {

// Collects failures for one named check; keeps the first few messages.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void pass() { ++cases_; }

  void fail(const std::string& message) {
    ++cases_;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(message);
  }

  void expect(bool condition, const std::string& message) { condition ? pass() : fail(message); }

  bool report(std::ostream& out) const {
    out << (failures_ == 0 ? "PASS " : "FAIL ") << name_ << " (" << cases_ << " cases, " << failures_
        << " failures)\n";
    for (const std::string& m : messages_) out << "    " << m << "\n";
    return failures_ == 0;
  }

 private:
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string label(const ProblemInstance& p) {
  return "N=" + std::to_string(p.floors) + " K=" + std::to_string(p.items);
}

std::uint32_t splits_bound(std::uint64_t floors, std::uint32_t items) {
  return (ideal_tests(floors) + items - 1) / items;
}

void check_solver_bounds(const ProblemInstance& p, const SolveOutcome& solved, Check& bounds, Check& minimal) {
  bounds.expect(solved.phase3_steps <= p.items && solved.phase2_splits <= splits_bound(p.floors, p.items),
                label(p) + ": phase counters exceed their bounds");
  if (!solved.terminal) return;
  const TerminalState& term = *solved.terminal;
  const CapacityTerm at = capacity_with_term(term.tests, p.items, kU128Max);
  const CapacityTerm below = capacity_with_term(term.tests - 1, p.items, kU128Max);
  minimal.expect(at.capacity == term.capacity && at.term == term.boundary && at.capacity.value >= p.floors &&
                     below.capacity.value < p.floors,
                 label(p) + ": terminal state is not the minimal exact (E, B)");
}

}  // namespace

bool run_verify(const VerifyOptions& options, std::ostream& out) {
  Check oracle("solver agreement on exhaustive grid");
  Check bounds("phase counter bounds");
  Check minimal("minimality certificate");
  Check policy("policy identification and budget");
  Check tight("policy tightness");
  Check tree("decision tree mapping");
  Check random("randomized large-N agreement");

  for (std::uint64_t n = 0; n <= options.max_floors; ++n) {
    for (std::uint32_t k = 1; k <= options.max_items; ++k) {
      const ProblemInstance p{n, k};
      try {
        const SolveOutcome solved = solve_analytic(p);
        std::uint64_t expected = solve_binomial_bsearch(p);
        bool agree = solved.t_star == expected && solve_dp_capacity(p) == expected;
        if (n <= kSlowDpMaxFloors && k <= kSlowDpMaxItems) agree = agree && solve_dp_slow(p) == expected;
        oracle.expect(agree, label(p) + ": solvers disagree (analytic " + std::to_string(solved.t_star) + ")");
        check_solver_bounds(p, solved, bounds, minimal);
        if (n == 0) continue;

        const SimulationReport report = map_policy_tree(p);
        tree.expect(report.ok() && report.nodes_visited <= 2 * (n + 1),
                    label(p) + ": " + (report.violations.empty() ? "too many nodes" : report.violations.front()));

        std::vector<std::uint64_t> histogram;
        std::uint64_t worst = 0;
        bool sound = true;
        for (std::uint64_t h = 0; h <= n; ++h) {
          const ThresholdTrace trace = simulate(p, h);
          sound = sound && trace.identified == h && trace.tests_used <= solved.t_star && trace.breaks_used <= k;
          worst = std::max(worst, trace.tests_used);
          if (histogram.size() <= trace.tests_used) histogram.resize(trace.tests_used + 1, 0);
          ++histogram[trace.tests_used];
        }
        policy.expect(sound, label(p) + ": a threshold was misidentified or over budget");
        tight.expect(worst == solved.t_star && histogram == report.depth_histogram,
                     label(p) + ": worst case " + std::to_string(worst) + " vs T* " + std::to_string(solved.t_star));
      } catch (const std::exception& e) {
        oracle.fail(label(p) + ": " + e.what());
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> floors_dist(1, options.random_max_floors);
  std::uniform_int_distribution<std::uint32_t> items_dist(1, options.random_max_items);
  for (std::uint32_t i = 0; i < options.random_count; ++i) {
    const ProblemInstance p{floors_dist(rng), items_dist(rng)};
    try {
      const SolveOutcome solved = solve_analytic(p);
      random.expect(solved.t_star == solve_binomial_bsearch(p), label(p) + ": analytic disagrees with baseline");
      check_solver_bounds(p, solved, bounds, minimal);
    } catch (const std::exception& e) {
      random.fail(label(p) + ": " + e.what());
    }
  }

  bool ok = true;
  for (const Check* c : {&oracle, &bounds, &minimal, &policy, &tight, &tree, &random}) {
    ok = c->report(out) && ok;
  }
  return ok;
}

}  // namespace eggdrop::cli
