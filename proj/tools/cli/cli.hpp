#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eggdrop/eggdrop.hpp"

namespace eggdrop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches `args` (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Raised by interactive_session when the input stream ends mid-session.
class InputClosed : public std::runtime_error {
 public:
  InputClosed() : std::runtime_error("input ended before the threshold was identified") {}
};

/// Prompts for each drop on `out`, reads y/n answers from `in` and returns
/// the identified highest safe floor. Unrecognized answers re-prompt.
std::uint64_t interactive_session(const ProblemInstance& instance, std::istream& in, std::ostream& out);

// Subcommand bodies, exposed for tests.

struct VerifyOptions {
  std::uint64_t max_floors = 300;
  std::uint32_t max_items = 6;
  std::uint64_t seed = 20240601;
  std::uint32_t random_count = 1000;
  std::uint64_t random_max_floors = 1000000000000000000ULL;
  std::uint32_t random_max_items = 128;
};

/// Runs the oracle, bound and policy grids. Prints one line per check and
/// returns true when every check passes.
bool run_verify(const VerifyOptions& options, std::ostream& out);

enum class Algo { kAnalytic, kBinomialBsearch, kDp, kDpCapacity };

std::string_view to_string(Algo algo);

struct BenchOptions {
  std::vector<std::uint64_t> floors;
  std::vector<std::uint32_t> items;
  std::uint32_t repeat = 5;
};

/// Writes `algo,floors,items,median_ns` CSV rows. Combinations an algorithm
/// cannot finish in reasonable time are skipped with a note on `err`.
void run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace eggdrop::cli
