#pragma once

#include <cstdint>
#include <vector>

#include "eggdrop/capacity.hpp"

namespace eggdrop {

inline constexpr std::uint64_t kSlowDpMaxFloors = 5000;
inline constexpr std::uint32_t kSlowDpMaxItems = 16;

/// Bellman minimax recurrence
///   W(n, k) = 1 + min_{1 <= x <= n} max(W(x - 1, k - 1), W(n - x, k)),
///   W(0, k) = 0,  W(n, 1) = n,
/// evaluated over a full (n, k) table in O(K N^2). Throws std::invalid_argument
/// above N = 5000 or K = 16.
std::uint64_t solve_dp_slow(const ProblemInstance& instance);

/// Forward capacity table E(t, k) = E(t-1, k) + E(t-1, k-1) + 1, advanced one
/// t at a time until E(t, K) >= N. O(K T*) time, O(K) space.
std::uint64_t solve_dp_capacity(const ProblemInstance& instance);

/// Binary search over T in [1, N], each probe an O(K) capacity sum with
/// early exit. O(K log N).
std::uint64_t solve_binomial_bsearch(const ProblemInstance& instance);

/// Row t of the forward capacity table for k = 0..max_items, saturated at
/// `clamp`. Exposed so the table can be compared against direct sums.
std::vector<u128> capacity_table_row(std::uint64_t tests, std::uint32_t max_items, u128 clamp);

}  // namespace eggdrop
