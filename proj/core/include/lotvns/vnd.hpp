#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lotvns/compute_pool.hpp"
#include "lotvns/setup_plan.hpp"

namespace lotvns {

/// Neighborhood structures, numbered 1..kNeighborhoodCount.
///   1: flip one manufacturing bit
///   2: flip one remanufacturing bit
///   3: shift one set bit (either kind) to an adjacent period where that
///      kind's bit is clear
///   4: exchange the two bits of a period where they differ
inline constexpr int kNeighborhoodCount = 4;

struct BitEdit {
    SetupKind kind = SetupKind::manufacture;
    std::size_t period = 0;
    SetupBit before = 0;
    SetupBit after = 0;

    bool operator==(const BitEdit&) const = default;
};

/// Edit of one or two setup bits of a single product. Records the prior
/// bits so it can be reverted.
struct Move {
    std::size_t product = 0;
    int neighborhood = 1;
    std::uint8_t edit_count = 0;
    std::array<BitEdit, 2> edit_slots{};

    std::span<const BitEdit> edits() const { return {edit_slots.data(), edit_count}; }
    bool operator==(const Move&) const = default;
};

void apply_move(SetupPlan& plan, const Move& move);
void revert_move(SetupPlan& plan, const Move& move);

struct ScoredMove {
    Move move;
    Cents decrease = 0;
};

/// Per-product best moves of one pass and their summed decrease.
struct ImprovementDelta {
    std::vector<std::optional<Move>> moves;
    std::vector<Cents> decrease;
    Cents diff = 0;
};

enum class VndMode { serial, product_parallel };

/// All moves of `neighborhood` for `product`, ascending by period. Within a
/// period, manufacturing bits come before remanufacturing bits and left
/// shifts before right shifts. Throws std::out_of_range on a bad id or index.
std::vector<Move> enumerate_neighbors(const SetupPlan& plan, int neighborhood, std::size_t product);

/// The strictly improving move of lowest resulting product cost, earliest
/// in enumeration order on ties. Never mutates `plan`. Returns nothing when
/// no neighbor improves or the product is currently infeasible.
std::optional<ScoredMove> best_neighbor(const Instance& inst, const SetupPlan& plan, int neighborhood,
                                        std::size_t product);

/// best_neighbor for every product against the same snapshot, reduced in
/// product order. Identical results in both modes. `pool` is required for
/// VndMode::product_parallel.
ImprovementDelta vnd_pass(const Instance& inst, const SetupPlan& plan, int neighborhood, VndMode mode,
                          ComputePool* pool = nullptr);

/// Applies every per-product move of a delta computed against `plan`.
SetupPlan apply_delta(SetupPlan plan, const ImprovementDelta& delta);

struct VndResult {
    SetupPlan plan;
    Cents cost = 0;
    std::size_t sweeps = 0;
    /// Cost after every improving pass, starting with the input cost.
    std::vector<Cents> trace;
};

/// Sweeps neighborhoods 1..neighborhoods, applying each pass's delta, and
/// repeats until a full sweep finds no improvement. Setup bits with a zero
/// lot are pruned before every sweep, so the returned plan has none. The input must decode
/// feasibly (std::invalid_argument otherwise).
VndResult vnd(const Instance& inst, SetupPlan plan, int neighborhoods, VndMode mode, ComputePool* pool = nullptr);

/// True when no neighborhood 1..neighborhoods holds a strictly improving
/// move for any product.
bool is_local_optimum(const Instance& inst, const SetupPlan& plan, int neighborhoods);

} // namespace lotvns
