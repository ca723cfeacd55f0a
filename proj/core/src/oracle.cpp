#include "lotvns/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lotvns {

OracleResult enumerate_optimal(const Instance& inst) {
    require_valid(inst);
    const std::size_t T = inst.periods;
    if (T > kOracleMaxPeriods)
        throw OracleRefused("oracle: " + std::to_string(T) + " periods exceed the enumeration bound of " +
                            std::to_string(kOracleMaxPeriods) + " (2^(2T) patterns per product)");

    OracleResult result{0, SetupPlan(inst.products, T)};
    std::vector<SetupBit> m(T), r(T);
    const std::uint64_t patterns = std::uint64_t{1} << (2 * T);

    for (std::size_t k = 0; k < inst.products; ++k) {
        Cents best = kInfeasible;
        std::uint64_t best_mask = 0;
        for (std::uint64_t mask = 0; mask < patterns; ++mask) {
            for (std::size_t t = 0; t < T; ++t) {
                m[t] = (mask >> t) & 1U;
                r[t] = (mask >> (T + t)) & 1U;
            }
            const Cents c = product_cost(inst, k, m, r);
            if (c < best) {
                best = c;
                best_mask = mask;
            }
        }
        // initial_solution guarantees at least one feasible pattern.
        for (std::size_t t = 0; t < T; ++t) {
            result.plan.setup_m(k, t) = (best_mask >> t) & 1U;
            result.plan.setup_r(k, t) = (best_mask >> (T + t)) & 1U;
        }
        result.cost += best;
    }
    return result;
}

} // namespace lotvns
