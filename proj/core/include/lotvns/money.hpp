#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace lotvns {

/// Monetary amounts in integer cents. All objective arithmetic is exact.
using Cents = std::int64_t;

/// Absorbing cost of a setup pattern that cannot meet demand. Compares
/// greater than every finite cost.
inline constexpr Cents kInfeasible = std::numeric_limits<Cents>::max();

constexpr bool is_feasible(Cents c) noexcept { return c != kInfeasible; }

/// Fixed-point rendering with two decimals, e.g. 1300 -> "13.00".
/// kInfeasible renders as "inf".
std::string format_cents(Cents c);

} // namespace lotvns
