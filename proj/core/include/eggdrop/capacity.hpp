#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace eggdrop {

__extension__ using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};
inline constexpr std::uint64_t kMaxFloors = (std::uint64_t{1} << 63) - 1;
inline constexpr std::uint32_t kMaxItems = std::uint32_t{1} << 16;

/// One problem: `floors` candidate thresholds (N) and `items` test items (K).
struct ProblemInstance {
  std::uint64_t floors = 0;
  std::uint32_t items = 0;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Throws std::invalid_argument unless 1 <= items <= kMaxItems and
/// floors <= kMaxFloors. floors == 0 is accepted only when `allow_empty`.
void validate(const ProblemInstance& instance, bool allow_empty = false);

/// An exact capacity value, or a marker that the true value is at least the
/// target it was compared against. A saturated value is only good for
/// `reaches(target)` with that same target (or a smaller one).
struct Cap {
  u128 value = 0;
  bool saturated = false;

  static constexpr Cap exact(u128 v) { return Cap{v, false}; }

  [[nodiscard]] constexpr bool reaches(u128 target) const {
    return saturated || value >= target;
  }

  friend bool operator==(const Cap&, const Cap&) = default;
};

struct CapacityTerm {
  Cap capacity;  // E(T, K) = sum_{i=1..K} C(T, i)
  Cap term;      // C(T, K)
};

/// Evaluates E(T, K) together with its trailing binomial C(T, K), stopping
/// as soon as the running sum reaches `clamp`. When that happens before the
/// last term, both results come back saturated and `term.value` holds the
/// last coefficient computed.
CapacityTerm capacity_with_term(std::uint64_t tests, std::uint32_t items, u128 clamp);

/// 2^T - 1, saturated when it is >= clamp or does not fit in 128 bits.
Cap capacity_full_row(std::uint64_t tests, u128 clamp = kU128Max);

/// ceil(log2(N + 1)) via bit length; 0 for N = 0.
std::uint32_t ideal_tests(std::uint64_t floors);

/// (E(T, K), C(T, K), T) for a fixed K.
struct CapacityState {
  Cap capacity;
  Cap boundary;
  std::uint64_t tests = 0;

  friend bool operator==(const CapacityState&, const CapacityState&) = default;
};

/// Steps an exact state from T to T + 1:
///   E(T+1, K) = 2 E(T, K) - C(T, K) + 1
///   C(T+1, K) = C(T, K) + C(T, K) * K / (T + 1 - K)
/// Throws ContractViolation if the input is saturated or the division is not
/// exact. The result saturates only past 128 bits.
CapacityState advance_state(const CapacityState& state, std::uint32_t items);

/// value * mul / div, multiplying first. Throws ContractViolation if the
/// quotient is not an integer or div == 0. When the 128-bit product
/// overflows, the common factor of value and div is cancelled first, which
/// keeps the result exact; a quotient beyond 128 bits comes back saturated.
Cap scale_exact(u128 value, u128 mul, u128 div);

std::string to_string(u128 value);

}  // namespace eggdrop
