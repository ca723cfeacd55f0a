#pragma once

#include <cstddef>
#include <stdexcept>

#include "lotvns/setup_plan.hpp"

namespace lotvns {

/// Largest horizon the exhaustive oracle accepts: 2^(2T) patterns per product.
inline constexpr std::size_t kOracleMaxPeriods = 10;

class OracleRefused : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct OracleResult {
    Cents cost = 0;
    SetupPlan plan;
};

/// Exact minimum over all setup patterns under the decoder, found by
/// enumerating every pattern of every product separately. Among equal-cost
/// patterns the one with the smallest bit encoding wins. Throws
/// OracleRefused when periods > kOracleMaxPeriods.
OracleResult enumerate_optimal(const Instance& inst);

} // namespace lotvns
