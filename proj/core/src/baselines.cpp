#include "eggdrop/baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace eggdrop {
namespace {

u128 saturating_add(u128 a, u128 b, u128 clamp) {
  u128 sum = 0;
  if (__builtin_add_overflow(a, b, &sum) || sum > clamp) return clamp;
  return sum;
}

// Advances row t - 1 of the capacity table to row t in place. Entry 0 stays 0.
void advance_row(std::vector<u128>& row, u128 clamp) {
  for (std::size_t k = row.size() - 1; k >= 1; --k) {
    row[k] = saturating_add(saturating_add(row[k], row[k - 1], clamp), 1, clamp);
  }
}

}  // namespace

std::uint64_t solve_dp_slow(const ProblemInstance& instance) {
  validate(instance, /*allow_empty=*/true);
  if (instance.floors > kSlowDpMaxFloors || instance.items > kSlowDpMaxItems) {
    throw std::invalid_argument("solve_dp_slow is limited to N <= 5000 and K <= 16");
  }
  const std::size_t n_max = instance.floors;
  const std::size_t k_max = instance.items;

  // worst[k][n]; worst[0][n] is never read for n >= 1.
  std::vector<std::vector<std::uint32_t>> worst(k_max + 1, std::vector<std::uint32_t>(n_max + 1, 0));
  for (std::size_t n = 0; n <= n_max; ++n) worst[1][n] = static_cast<std::uint32_t>(n);
  for (std::size_t k = 2; k <= k_max; ++k) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::uint32_t best = UINT32_MAX;
      for (std::size_t x = 1; x <= n; ++x) {
        const std::uint32_t cost = 1 + std::max(worst[k - 1][x - 1], worst[k][n - x]);
        best = std::min(best, cost);
      }
      worst[k][n] = best;
    }
  }
  return worst[k_max][n_max];
}

std::vector<u128> capacity_table_row(std::uint64_t tests, std::uint32_t max_items, u128 clamp) {
  std::vector<u128> row(std::size_t{max_items} + 1, 0);
  for (std::uint64_t t = 1; t <= tests; ++t) advance_row(row, clamp);
  return row;
}

std::uint64_t solve_dp_capacity(const ProblemInstance& instance) {
  validate(instance, /*allow_empty=*/true);
  const u128 target = instance.floors;
  if (target == 0) return 0;

  // Columns k > t equal column t (the full row 2^t - 1), so only the first
  // min(t, K) + 1 entries ever need updating.
  std::vector<u128> row(std::size_t{instance.items} + 1, 0);
  for (std::uint64_t t = 1;; ++t) {
    const std::size_t width = static_cast<std::size_t>(std::min<std::uint64_t>(t, instance.items));
    for (std::size_t k = width; k >= 1; --k) {
      const u128 above = k < t ? row[k] : row[k - 1];
      row[k] = saturating_add(saturating_add(above, row[k - 1], target), 1, target);
    }
    if (row[width] >= target) return t;
  }
}

std::uint64_t solve_binomial_bsearch(const ProblemInstance& instance) {
  validate(instance, /*allow_empty=*/true);
  const std::uint64_t n = instance.floors;
  if (n == 0) return 0;
  // E(N, K) >= E(N, 1) = N, so T* lies in [1, N].
  std::uint64_t lo = 1;
  std::uint64_t hi = n;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (capacity_with_term(mid, instance.items, n).capacity.reaches(n)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace eggdrop
