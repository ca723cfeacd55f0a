#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lotvns/instance.hpp"

namespace lotvns {

using SetupBit = std::uint8_t;

enum class SetupKind : std::uint8_t { manufacture = 0, remanufacture = 1 };

/// A point of the search space: one manufacturing and one remanufacturing
/// setup bit per (product, period). Quantities follow from the pattern.
struct SetupPlan {
    Matrix<SetupBit> setup_m;
    Matrix<SetupBit> setup_r;

    SetupPlan() = default;
    SetupPlan(std::size_t products, std::size_t periods)
        : setup_m(products, periods), setup_r(products, periods) {}

    std::size_t products() const noexcept { return setup_m.rows(); }
    std::size_t periods() const noexcept { return setup_m.cols(); }

    Matrix<SetupBit>& bits(SetupKind kind) { return kind == SetupKind::manufacture ? setup_m : setup_r; }
    const Matrix<SetupBit>& bits(SetupKind kind) const {
        return kind == SetupKind::manufacture ? setup_m : setup_r;
    }

    bool operator==(const SetupPlan&) const = default;
};

/// Number of (kind, product, period) bits that differ.
std::size_t hamming_distance(const SetupPlan& a, const SetupPlan& b);

/// Quantities, end-of-period inventories and costs implied by a SetupPlan.
struct DecodedPlan {
    Matrix<Units> qty_m;
    Matrix<Units> qty_r;
    Matrix<Units> inv_m;
    Matrix<Units> inv_r;
    std::vector<Cents> cost_per_product;
    Cents total_cost = 0;

    /// "product,period,x_M,x_R,y_M,y_R" with one line per cell.
    std::string to_csv() const;
};

/// Decodes every product independently.
///
/// Periods holding either setup bit start a segment that runs up to the
/// next such period. At a segment start the decoder remanufactures first,
/// min(recoverable stock, segment demand) when the remanufacturing bit is
/// set, and manufactures the remainder, which requires the manufacturing
/// bit. Demand before the first segment, or an uncovered remainder, makes
/// the product infeasible and its cost kInfeasible. Setup costs are charged
/// only for strictly positive quantities; holding costs apply to
/// end-of-period stock of both inventories.
///
/// On infeasible products the quantity/inventory rows are left partially
/// filled and must not be interpreted.
DecodedPlan decode(const Instance& inst, const SetupPlan& plan);

/// decode(inst, plan).total_cost without materializing the trace.
Cents evaluate(const Instance& inst, const SetupPlan& plan);

/// Cost of one product (0-based index). Throws std::out_of_range.
Cents evaluate_product(const Instance& inst, const SetupPlan& plan, std::size_t product);

/// Cost of product `product` under explicit setup rows of length `periods`.
/// This is the kernel everything else reduces to; it allocates nothing.
Cents product_cost(const Instance& inst, std::size_t product, std::span<const SetupBit> setup_m,
                   std::span<const SetupBit> setup_r);

/// Clears every setup bit whose decoded lot is zero on feasible products.
/// Quantities and cost are unchanged. Returns the number of bits cleared.
std::size_t prune_idle_setups(const Instance& inst, SetupPlan& plan);

/// Remanufacture-first lot-for-lot: every period with demand gets a
/// remanufacturing setup when recoverables are on hand and a manufacturing
/// setup for whatever they do not cover. Always decodes feasibly.
SetupPlan initial_solution(const Instance& inst);

/// Flow-balance, sign and cumulative-returns checks on a decoded plan.
/// Returns a description of every violation; empty when consistent.
std::vector<std::string> check_decoded(const Instance& inst, const DecodedPlan& decoded);

} // namespace lotvns
