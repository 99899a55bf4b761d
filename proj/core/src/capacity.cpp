#include "eggdrop/capacity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "eggdrop/errors.hpp"

namespace eggdrop {
namespace {

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

void validate(const ProblemInstance& instance, bool allow_empty) {
  if (instance.items < 1 || instance.items > kMaxItems) {
    throw std::invalid_argument("items must be in [1, 65536], got " +
                                std::to_string(instance.items));
  }
  if (instance.floors > kMaxFloors) {
    throw std::invalid_argument("floors must be at most 2^63 - 1");
  }
  if (instance.floors == 0 && !allow_empty) {
    throw std::invalid_argument("floors must be at least 1");
  }
}

Cap scale_exact(u128 value, u128 mul, u128 div) {
  if (div == 0) throw ContractViolation("scale_exact: division by zero");
  u128 product = 0;
  if (!__builtin_mul_overflow(value, mul, &product)) {
    if (product % div != 0) {
      throw ContractViolation("scale_exact: " + to_string(value) + " * " + to_string(mul) +
                              " is not divisible by " + to_string(div));
    }
    return Cap::exact(product / div);
  }
  // value * mul is divisible by div iff mul is divisible by div / gcd(value, div).
  const u128 g = gcd128(value, div);
  const u128 reduced_div = div / g;
  if (mul % reduced_div != 0) {
    throw ContractViolation("scale_exact: inexact division after reduction");
  }
  u128 quotient = 0;
  if (__builtin_mul_overflow(value / g, mul / reduced_div, &quotient)) {
    return Cap{kU128Max, true};
  }
  return Cap::exact(quotient);
}

CapacityTerm capacity_with_term(std::uint64_t tests, std::uint32_t items, u128 clamp) {
  // C(T, i) = 0 for i > T, so only min(K, T) terms contribute.
  const std::uint64_t last = std::min<std::uint64_t>(items, tests);
  u128 sum = 0;
  u128 term = 1;
  for (std::uint64_t i = 1; i <= last; ++i) {
    const Cap next = scale_exact(term, tests - i + 1, i);
    if (next.saturated) return {Cap{kU128Max, true}, next};
    term = next.value;
    if (__builtin_add_overflow(sum, term, &sum)) {
      return {Cap{kU128Max, true}, Cap{term, true}};
    }
    if (sum >= clamp && i < last) {
      return {Cap{sum, true}, Cap{term, true}};
    }
  }
  if (items > tests) term = 0;
  return {Cap::exact(sum), Cap::exact(term)};
}

Cap capacity_full_row(std::uint64_t tests, u128 clamp) {
  if (tests >= 128) return Cap{kU128Max, true};
  const u128 row = (u128{1} << tests) - 1;
  return Cap{row, row >= clamp};
}

std::uint32_t ideal_tests(std::uint64_t floors) {
  // 2^(b-1) <= N < 2^b  implies  ceil(log2(N + 1)) = b.
  return static_cast<std::uint32_t>(std::bit_width(floors));
}

CapacityState advance_state(const CapacityState& state, std::uint32_t items) {
  if (state.capacity.saturated || state.boundary.saturated) {
    throw ContractViolation("advance_state: input state is saturated");
  }
  const u128 e = state.capacity.value;
  const u128 b = state.boundary.value;
  if (b > e) throw ContractViolation("advance_state: C(T, K) exceeds E(T, K)");

  CapacityState next;
  next.tests = state.tests + 1;

  u128 doubled = 0;
  if (__builtin_mul_overflow(e, u128{2}, &doubled) || doubled - b == kU128Max) {
    next.capacity = Cap{kU128Max, true};
  } else {
    next.capacity = Cap::exact(doubled - b + 1);
  }

  if (state.tests >= items) {
    const Cap added = scale_exact(b, items, state.tests + 1 - items);
    u128 sum = 0;
    if (added.saturated || __builtin_add_overflow(b, added.value, &sum)) {
      next.boundary = Cap{kU128Max, true};
    } else {
      next.boundary = Cap::exact(sum);
    }
  } else {
    // Below the diagonal C(T, K) = 0; the row reaches K exactly when T + 1 = K.
    if (b != 0) throw ContractViolation("advance_state: C(T, K) must be 0 for T < K");
    next.boundary = Cap::exact(state.tests + 1 == items ? 1 : 0);
  }
  return next;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace eggdrop
