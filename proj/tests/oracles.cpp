#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>

namespace eggdrop::oracle {
namespace {

u128 clamped_add(u128 a, u128 b, u128 clamp) {
  const u128 sum = a + b;
  if (sum < a || sum > clamp) return clamp;
  return sum;
}

}  // namespace

Sum pascal_partial_row_sum(std::uint64_t tests, std::uint32_t items, u128 clamp) {
  std::vector<u128> row(std::size_t{items} + 1, 0);
  row[0] = 1;
  for (std::uint64_t t = 1; t <= tests; ++t) {
    for (std::size_t i = row.size() - 1; i >= 1; --i) row[i] = clamped_add(row[i], row[i - 1], clamp);
  }
  u128 sum = 0;
  for (std::size_t i = 1; i < row.size(); ++i) sum = clamped_add(sum, row[i], clamp);
  return Sum{sum, sum >= clamp};
}

u128 pascal_binomial(std::uint64_t tests, std::uint64_t i) {
  if (i > tests) return 0;
  std::vector<u128> row(i + 1, 0);
  row[0] = 1;
  for (std::uint64_t t = 1; t <= tests; ++t) {
    for (std::size_t j = row.size() - 1; j >= 1; --j) {
      const u128 next = row[j] + row[j - 1];
      if (next < row[j]) {
        std::cerr << "pascal_binomial overflow at C(" << tests << ", " << i << ")\n";
        std::abort();
      }
      row[j] = next;
    }
  }
  return row[i];
}

MinimaxTable::MinimaxTable(std::uint64_t max_floors, std::uint32_t max_items)
    : memo_(std::size_t{max_items} + 1, std::vector<std::int64_t>(max_floors + 1, -1)) {}

std::uint64_t MinimaxTable::at(std::uint64_t floors, std::uint32_t items) {
  std::int64_t& slot = memo_[items][floors];
  if (slot >= 0) return static_cast<std::uint64_t>(slot);
  std::uint64_t best = 0;
  if (floors == 0) {
    best = 0;
  } else if (items == 1) {
    best = floors;
  } else {
    best = UINT64_MAX;
    for (std::uint64_t x = 1; x <= floors; ++x) {
      // Break: floors below x with one item fewer. Survive: floors above x.
      const std::uint64_t worst = std::max(at(x - 1, items - 1), at(floors - x, items));
      best = std::min(best, 1 + worst);
    }
  }
  slot = static_cast<std::int64_t>(best);
  return best;
}

std::uint64_t quadratic_threshold(std::uint64_t floors) {
  auto covers = [floors](std::uint64_t t) { return u128{t} * (t + 1) / 2 >= floors; };
  auto t = static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(floors)));
  while (t > 0 && covers(t - 1)) --t;
  while (!covers(t)) ++t;
  return t;
}

}  // namespace eggdrop::oracle
