#include "lotvns/vnd.hpp"

#include <stdexcept>

namespace lotvns {

namespace {

void check_neighborhood(int neighborhood) {
    if (neighborhood < 1 || neighborhood > kNeighborhoodCount)
        throw std::out_of_range("neighborhood id must lie in 1.." + std::to_string(kNeighborhoodCount));
}

struct RowView {
    std::span<const SetupBit> m;
    std::span<const SetupBit> r;
    std::span<const SetupBit> of(SetupKind kind) const { return kind == SetupKind::manufacture ? m : r; }
};

Move single(std::size_t product, int nbh, BitEdit a) {
    Move mv;
    mv.product = product;
    mv.neighborhood = nbh;
    mv.edit_count = 1;
    mv.edit_slots[0] = a;
    return mv;
}

Move pair(std::size_t product, int nbh, BitEdit a, BitEdit b) {
    Move mv = single(product, nbh, a);
    mv.edit_count = 2;
    mv.edit_slots[1] = b;
    return mv;
}

// Visits the moves of one neighborhood in enumeration order.
template <class Visit>
void for_each_neighbor(RowView rows, int nbh, std::size_t product, Visit&& visit) {
    const std::size_t T = rows.m.size();
    constexpr SetupKind kinds[] = {SetupKind::manufacture, SetupKind::remanufacture};
    switch (nbh) {
    case 1:
    case 2: {
        const SetupKind kind = nbh == 1 ? SetupKind::manufacture : SetupKind::remanufacture;
        const auto row = rows.of(kind);
        for (std::size_t t = 0; t < T; ++t) {
            const SetupBit b = row[t] ? 1 : 0;
            visit(single(product, nbh, {kind, t, b, static_cast<SetupBit>(1 - b)}));
        }
        break;
    }
    case 3:
        for (std::size_t t = 0; t < T; ++t)
            for (SetupKind kind : kinds) {
                const auto row = rows.of(kind);
                if (!row[t]) continue;
                if (t > 0 && !row[t - 1]) visit(pair(product, nbh, {kind, t, 1, 0}, {kind, t - 1, 0, 1}));
                if (t + 1 < T && !row[t + 1]) visit(pair(product, nbh, {kind, t, 1, 0}, {kind, t + 1, 0, 1}));
            }
        break;
    case 4:
        for (std::size_t t = 0; t < T; ++t) {
            const SetupBit bm = rows.m[t] ? 1 : 0;
            const SetupBit br = rows.r[t] ? 1 : 0;
            if (bm != br)
                visit(pair(product, nbh, {SetupKind::manufacture, t, bm, br}, {SetupKind::remanufacture, t, br, bm}));
        }
        break;
    default:
        check_neighborhood(nbh);
    }
}

} // namespace

void apply_move(SetupPlan& plan, const Move& move) {
    for (const auto& e : move.edits()) plan.bits(e.kind)(move.product, e.period) = e.after;
}

void revert_move(SetupPlan& plan, const Move& move) {
    const auto edits = move.edits();
    for (auto it = edits.rbegin(); it != edits.rend(); ++it) plan.bits(it->kind)(move.product, it->period) = it->before;
}

std::vector<Move> enumerate_neighbors(const SetupPlan& plan, int neighborhood, std::size_t product) {
    check_neighborhood(neighborhood);
    if (product >= plan.products()) throw std::out_of_range("enumerate_neighbors: product index out of range");
    std::vector<Move> out;
    for_each_neighbor({plan.setup_m.row(product), plan.setup_r.row(product)}, neighborhood, product,
                      [&](const Move& mv) { out.push_back(mv); });
    return out;
}

std::optional<ScoredMove> best_neighbor(const Instance& inst, const SetupPlan& plan, int neighborhood,
                                        std::size_t product) {
    check_neighborhood(neighborhood);
    if (product >= plan.products()) throw std::out_of_range("best_neighbor: product index out of range");

    const auto m_row = plan.setup_m.row(product);
    const auto r_row = plan.setup_r.row(product);
    const Cents current = product_cost(inst, product, m_row, r_row);
    if (!is_feasible(current)) return std::nullopt;

    // Private scratch rows; moves are applied and reverted in place.
    std::vector<SetupBit> m(m_row.begin(), m_row.end());
    std::vector<SetupBit> r(r_row.begin(), r_row.end());
    auto scratch = [&](SetupKind kind) -> std::vector<SetupBit>& { return kind == SetupKind::manufacture ? m : r; };

    std::optional<ScoredMove> best;
    Cents best_cost = current;
    for_each_neighbor({m_row, r_row}, neighborhood, product, [&](const Move& mv) {
        for (const auto& e : mv.edits()) scratch(e.kind)[e.period] = e.after;
        const Cents c = product_cost(inst, product, m, r);
        for (const auto& e : mv.edits()) scratch(e.kind)[e.period] = e.before;
        if (c < best_cost) {
            best_cost = c;
            best = ScoredMove{mv, current - c};
        }
    });
    return best;
}

ImprovementDelta vnd_pass(const Instance& inst, const SetupPlan& plan, int neighborhood, VndMode mode,
                          ComputePool* pool) {
    check_neighborhood(neighborhood);
    if (mode == VndMode::product_parallel && pool == nullptr)
        throw std::invalid_argument("vnd_pass: product-parallel mode needs a compute pool");

    const std::size_t K = plan.products();
    ImprovementDelta delta;
    delta.moves.assign(K, std::nullopt);
    delta.decrease.assign(K, 0);

    auto scan = [&](std::size_t k) {
        if (auto best = best_neighbor(inst, plan, neighborhood, k)) {
            delta.moves[k] = best->move;
            delta.decrease[k] = best->decrease;
        }
    };
    if (mode == VndMode::serial)
        for (std::size_t k = 0; k < K; ++k) scan(k);
    else
        pool->parallel_for(K, scan);

    for (const Cents d : delta.decrease) delta.diff += d;
    return delta;
}

SetupPlan apply_delta(SetupPlan plan, const ImprovementDelta& delta) {
    for (const auto& mv : delta.moves)
        if (mv) apply_move(plan, *mv);
    return plan;
}

VndResult vnd(const Instance& inst, SetupPlan plan, int neighborhoods, VndMode mode, ComputePool* pool) {
    if (neighborhoods < 1 || neighborhoods > kNeighborhoodCount)
        throw std::out_of_range("vnd: neighborhood count must lie in 1.." + std::to_string(kNeighborhoodCount));
    VndResult result;
    result.cost = evaluate(inst, plan);
    if (!is_feasible(result.cost)) throw std::invalid_argument("vnd: starting plan is infeasible");
    result.trace.push_back(result.cost);

    bool improvement = true;
    while (improvement) {
        improvement = false;
        ++result.sweeps;
        // Idle bits are free, so removing one is never strictly improving,
        // yet they block merges (clearing the live twin of an idle bit just
        // re-opens the period). Drop them before each sweep.
        prune_idle_setups(inst, plan);
        for (int nbh = 1; nbh <= neighborhoods; ++nbh) {
            const ImprovementDelta delta = vnd_pass(inst, plan, nbh, mode, pool);
            if (delta.diff <= 0) continue;
            plan = apply_delta(std::move(plan), delta);
            result.cost -= delta.diff;
            result.trace.push_back(result.cost);
            improvement = true;
        }
    }
    result.plan = std::move(plan);
    return result;
}

bool is_local_optimum(const Instance& inst, const SetupPlan& plan, int neighborhoods) {
    for (int nbh = 1; nbh <= neighborhoods; ++nbh)
        for (std::size_t k = 0; k < plan.products(); ++k)
            if (best_neighbor(inst, plan, nbh, k)) return false;
    return true;
}

} // namespace lotvns
