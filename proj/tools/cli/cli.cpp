#include "cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace eggdrop::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kMapMaxFloors = 100000000;

constexpr const char* kThresholdNote =
    "Floors are numbered 1..N. The reported threshold is the highest safe floor h in 0..N;\n"
    "an item dropped from floor f breaks iff f > h.";

const std::map<std::string, Algo> kAlgoNames{
    {"analytic", Algo::kAnalytic},
    {"binomial-bsearch", Algo::kBinomialBsearch},
    {"dp", Algo::kDp},
    {"dp-capacity", Algo::kDpCapacity},
};

std::uint64_t solve_with(Algo algo, const ProblemInstance& instance) {
  switch (algo) {
    case Algo::kAnalytic:
      return solve_analytic(instance).t_star;
    case Algo::kBinomialBsearch:
      return solve_binomial_bsearch(instance);
    case Algo::kDp:
      return solve_dp_slow(instance);
    case Algo::kDpCapacity:
      return solve_dp_capacity(instance);
  }
  return 0;
}

std::string describe_drop(std::size_t index, const Drop& drop, const PolicyState& after) {
  std::ostringstream line;
  line << "drop " << index << ": floor " << drop.floor << " -> " << to_string(drop.outcome)
       << " (tests left " << after.tests << ", items left " << after.items << ")";
  return line.str();
}

int cmd_solve(const ProblemInstance& instance, Algo algo, bool as_json, std::ostream& out) {
  if (algo != Algo::kAnalytic) {
    const std::uint64_t t_star = solve_with(algo, instance);
    if (as_json) {
      out << json{{"floors", instance.floors}, {"items", instance.items},
                  {"algo", to_string(algo)},   {"t_star", t_star},
                  {"phase", nullptr},          {"phase2_splits", nullptr},
                  {"phase3_steps", nullptr}}
                 .dump()
          << "\n";
    } else {
      out << t_star << "\n";
    }
    return kExitOk;
  }
  const SolveOutcome solved = solve_analytic(instance);
  if (as_json) {
    out << json{{"floors", instance.floors},
                {"items", instance.items},
                {"algo", to_string(algo)},
                {"t_star", solved.t_star},
                {"phase", to_string(solved.phase)},
                {"phase2_splits", solved.phase2_splits},
                {"phase3_steps", solved.phase3_steps}}
               .dump()
        << "\n";
  } else {
    out << solved.t_star << "\n";
  }
  return kExitOk;
}

int cmd_policy_batch(const ProblemInstance& instance, std::uint64_t crit, bool as_json, std::ostream& out,
                     std::ostream& err) {
  if (crit > instance.floors) {
    err << "--crit must be in [0, " << instance.floors << "]\n";
    return kExitUsage;
  }
  const ThresholdTrace trace = simulate(instance, crit);
  if (as_json) {
    json drops = json::array();
    for (const Drop& d : trace.drops) {
      drops.push_back({{"floor", d.floor}, {"outcome", to_string(d.outcome)}});
    }
    out << json{{"floors", instance.floors},
                {"items", instance.items},
                {"t_star", solve_analytic(instance).t_star},
                {"crit", crit},
                {"drops", drops},
                {"tests_used", trace.tests_used},
                {"breaks_used", trace.breaks_used},
                {"identified", trace.identified}}
               .dump()
        << "\n";
    return kExitOk;
  }
  // Replay to report the remaining budget after each drop.
  PolicyState state = init_policy(instance);
  for (std::size_t i = 0; i < trace.drops.size(); ++i) {
    state = apply_outcome(state, trace.drops[i].floor, trace.drops[i].outcome);
    out << describe_drop(i + 1, trace.drops[i], state) << "\n";
  }
  out << "highest safe floor: " << trace.identified << "\n";
  return kExitOk;
}

int cmd_map(const ProblemInstance& instance, bool as_json, std::ostream& out, std::ostream& err) {
  if (instance.floors > kMapMaxFloors) {
    err << "map walks every leaf; --floors is limited to " << kMapMaxFloors << "\n";
    return kExitUsage;
  }
  const SimulationReport report = map_policy_tree(instance);
  if (as_json) {
    out << json{{"floors", report.floors},
                {"items", report.items},
                {"t_star", report.t_star},
                {"max_tests", report.max_tests},
                {"worst_h", report.worst_h},
                {"total_leaves", report.total_leaves},
                {"nodes_visited", report.nodes_visited},
                {"max_breaks", report.max_breaks},
                {"depth_histogram", report.depth_histogram},
                {"violations", report.violations}}
               .dump()
        << "\n";
  } else {
    out << "floors: " << report.floors << "\n"
        << "items: " << report.items << "\n"
        << "t_star: " << report.t_star << "\n"
        << "max_tests: " << report.max_tests << "\n"
        << "worst_h: " << report.worst_h << "\n"
        << "total_leaves: " << report.total_leaves << "\n"
        << "nodes_visited: " << report.nodes_visited << "\n"
        << "max_breaks: " << report.max_breaks << "\n"
        << "depth histogram:\n";
    for (std::size_t depth = 0; depth < report.depth_histogram.size(); ++depth) {
      if (report.depth_histogram[depth] != 0) {
        out << "  " << depth << ": " << report.depth_histogram[depth] << "\n";
      }
    }
    for (const std::string& v : report.violations) out << "violation: " << v << "\n";
    out << "status: " << (report.ok() ? "ok" : "FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::string_view to_string(Algo algo) {
  for (const auto& [name, value] : kAlgoNames) {
    if (value == algo) return name;
  }
  return "unknown";
}

std::uint64_t interactive_session(const ProblemInstance& instance, std::istream& in, std::ostream& out) {
  PolicyState state = init_policy(instance);
  while (state.mode != PolicyMode::kResolved) {
    const std::uint64_t floor = next_drop(state);
    std::optional<DropOutcome> outcome;
    while (!outcome) {
      out << "[tests left " << state.tests << ", items left " << state.items << "] "
          << "Drop from floor " << floor << " — did it break? [y/n] " << std::flush;
      std::string answer;
      if (!std::getline(in, answer)) throw InputClosed();
      answer.erase(std::remove_if(answer.begin(), answer.end(), [](unsigned char c) { return std::isspace(c); }),
                   answer.end());
      std::transform(answer.begin(), answer.end(), answer.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (answer == "y" || answer == "yes") outcome = DropOutcome::kBroke;
      if (answer == "n" || answer == "no") outcome = DropOutcome::kSurvived;
    }
    state = apply_outcome(state, floor, *outcome);
  }
  const std::uint64_t h = *resolved_threshold(state);
  out << "highest safe floor: " << h << "\n";
  return h;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimax test budgets and optimal drop policies for the generalized egg dropping problem.\n" +
               std::string(kThresholdNote)};
  app.name("eggdrop");
  app.require_subcommand(1);

  std::uint64_t floors = 0;
  std::uint32_t items = 0;
  bool as_json = false;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--floors", floors, "Number of floors N")->required()->check(CLI::Range(std::uint64_t{0}, kMaxFloors));
    sub->add_option("--items", items, "Number of test items K")->required()->check(CLI::Range(1U, kMaxItems));
  };

  CLI::App* solve = app.add_subcommand("solve", "Print the minimum worst-case number of tests T*");
  add_instance(solve);
  std::string algo_name = "analytic";
  solve->add_option("--algo", algo_name, "analytic | binomial-bsearch | dp | dp-capacity")
      ->check(CLI::IsMember(kAlgoNames))
      ->capture_default_str();
  solve->add_flag("--json", as_json, "Emit JSON");

  CLI::App* policy = app.add_subcommand("policy", "Run the optimal drop policy");
  add_instance(policy);
  std::optional<std::uint64_t> crit;
  bool interactive = false;
  auto* crit_opt = policy->add_option("--crit", crit, "Ground-truth highest safe floor h (0..N)");
  auto* inter_opt = policy->add_flag("--interactive", interactive, "Answer each drop on standard input");
  crit_opt->excludes(inter_opt);
  policy->add_flag("--json", as_json, "Emit JSON (batch mode only)");

  CLI::App* map = app.add_subcommand("map", "Walk the full decision tree and report its shape");
  add_instance(map);
  map->add_flag("--json", as_json, "Emit JSON");

  CLI::App* verify = app.add_subcommand("verify", "Check solvers and policy against oracles");
  VerifyOptions verify_opts;
  verify->add_option("--max-floors", verify_opts.max_floors, "Largest N in the exhaustive grid")
      ->capture_default_str();
  verify->add_option("--max-items", verify_opts.max_items, "Largest K in the exhaustive grid")
      ->check(CLI::Range(1U, kMaxItems))
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Seed for the randomized large-N agreement check")
      ->capture_default_str();
  verify->add_option("--random-count", verify_opts.random_count, "Number of randomized instances")
      ->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "Time each algorithm and emit CSV");
  BenchOptions bench_opts;
  bench->add_option("--floors-list", bench_opts.floors, "Comma-separated N values")->required()->delimiter(',');
  bench->add_option("--items-list", bench_opts.items, "Comma-separated K values")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1U, kMaxItems));
  bench->add_option("--repeat", bench_opts.repeat, "Samples per cell (median reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kExitUsage;
  }

  try {
    const ProblemInstance instance{floors, items};
    if (solve->parsed()) return cmd_solve(instance, kAlgoNames.at(algo_name), as_json, out);
    if (policy->parsed()) {
      if (instance.floors == 0) {
        err << "policy needs --floors >= 1\n";
        return kExitUsage;
      }
      if (interactive) {
        try {
          interactive_session(instance, in, out);
        } catch (const InputClosed& e) {
          err << "\n" << e.what() << "\n";
          return kExitUsage;
        }
        return kExitOk;
      }
      if (!crit) {
        err << "policy needs --crit H or --interactive\n\n" << policy->help();
        return kExitUsage;
      }
      return cmd_policy_batch(instance, *crit, as_json, out, err);
    }
    if (map->parsed()) {
      if (instance.floors == 0) {
        err << "map needs --floors >= 1\n";
        return kExitUsage;
      }
      return cmd_map(instance, as_json, out, err);
    }
    if (verify->parsed()) return run_verify(verify_opts, out) ? kExitOk : kExitVerifyFailed;
    if (bench->parsed()) {
      run_bench(bench_opts, out, err);
      return kExitOk;
    }
  } catch (const ContractViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eggdrop::cli
