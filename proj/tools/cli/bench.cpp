#include <algorithm>
#include <chrono>
#include <ostream>

#include "cli/cli.hpp"

namespace eggdrop::cli {
namespace {

// Rough operation budget per call above which a cell is skipped.
constexpr double kMaxWorkPerCall = 5e7;

std::uint64_t call(Algo algo, const ProblemInstance& p) {
  switch (algo) {
    case Algo::kAnalytic:
      return solve_analytic(p).t_star;
    case Algo::kBinomialBsearch:
      return solve_binomial_bsearch(p);
    case Algo::kDp:
      return solve_dp_slow(p);
    case Algo::kDpCapacity:
      return solve_dp_capacity(p);
  }
  return 0;
}

bool feasible(Algo algo, const ProblemInstance& p, std::uint64_t t_star) {
  const double n = static_cast<double>(p.floors);
  switch (algo) {
    case Algo::kDp:
      return p.floors <= kSlowDpMaxFloors && p.items <= kSlowDpMaxItems && p.items * n * n / 2 <= kMaxWorkPerCall;
    case Algo::kDpCapacity:
      return static_cast<double>(std::min<std::uint64_t>(p.items, t_star)) * static_cast<double>(t_star) <=
             kMaxWorkPerCall;
    default:
      return true;
  }
}

// One sample: enough back-to-back calls to last ~200us, reported per call.
double sample_ns(Algo algo, const ProblemInstance& p, std::uint64_t iterations, volatile std::uint64_t& sink) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < iterations; ++i) sink = sink + call(algo, p);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(iterations);
}

}  // namespace

void run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  volatile std::uint64_t sink = 0;
  out << "algo,floors,items,median_ns\n";
  for (Algo algo : {Algo::kAnalytic, Algo::kBinomialBsearch, Algo::kDpCapacity, Algo::kDp}) {
    for (std::uint64_t n : options.floors) {
      for (std::uint32_t k : options.items) {
        const ProblemInstance p{n, k};
        validate(p, /*allow_empty=*/true);
        if (!feasible(algo, p, solve_analytic(p).t_star)) {
          err << "skipping " << to_string(algo) << " at N=" << n << " K=" << k << " (too slow)\n";
          continue;
        }
        const double once = std::max(sample_ns(algo, p, 1, sink), 1.0);
        const auto iterations = static_cast<std::uint64_t>(std::clamp(200000.0 / once, 1.0, 1e6));
        std::vector<double> samples;
        for (std::uint32_t r = 0; r < options.repeat; ++r) samples.push_back(sample_ns(algo, p, iterations, sink));
        std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
        out << to_string(algo) << "," << n << "," << k << ","
            << static_cast<std::uint64_t>(samples[samples.size() / 2] + 0.5) << "\n";
      }
    }
  }
}

}  // namespace eggdrop::cli
