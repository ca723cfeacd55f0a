#include "lotvns/setup_plan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lotvns {

namespace {

struct NoTrace {
    void operator()(std::size_t, Units, Units, Units, Units) const noexcept {}
};

struct RowTrace {
    DecodedPlan& out;
    std::size_t product;
    void operator()(std::size_t t, Units xm, Units xr, Units ym, Units yr) const {
        out.qty_m(product, t) = xm;
        out.qty_r(product, t) = xr;
        out.inv_m(product, t) = ym;
        out.inv_r(product, t) = yr;
    }
};

// Single forward pass over the periods of one product. `trace` receives
// (period, x_M, x_R, y_M, y_R) for every period reached.
template <class Trace>
Cents decode_product(const Instance& inst, std::size_t k, std::span<const SetupBit> sm,
                     std::span<const SetupBit> sr, const Trace& trace) {
    const std::size_t T = inst.periods;
    const auto demand = inst.demand.row(k);
    const auto returns = inst.returns.row(k);
    const Cents setup_m = inst.setup_cost_m[k];
    const Cents setup_r = inst.setup_cost_r[k];
    const Cents hold_m = inst.holding_cost_m[k];
    const Cents hold_r = inst.holding_cost_r[k];
    const Cents unit_m = inst.unit_cost_m[k];
    const Cents unit_r = inst.unit_cost_r[k];

    Units recoverable = 0;
    Units serviceable = 0;
    Cents cost = 0;

    std::size_t t = 0;
    for (; t < T && !(sm[t] || sr[t]); ++t) {
        if (demand[t] > 0) return kInfeasible;
        recoverable += returns[t];
        cost += hold_r * recoverable;
        trace(t, 0, 0, 0, recoverable);
    }

    for (; t < T; ++t) {
        recoverable += returns[t];
        Units xm = 0;
        Units xr = 0;
        if (sm[t] || sr[t]) {
            Units segment_demand = demand[t];
            for (std::size_t v = t + 1; v < T && !(sm[v] || sr[v]); ++v) segment_demand += demand[v];
            if (sr[t]) xr = std::min(recoverable, segment_demand);
            xm = segment_demand - xr;
            if (xm > 0 && !sm[t]) return kInfeasible;
            recoverable -= xr;
            if (xm > 0) cost += setup_m + unit_m * xm;
            if (xr > 0) cost += setup_r + unit_r * xr;
        }
        serviceable += xm + xr - demand[t];
        cost += hold_m * serviceable + hold_r * recoverable;
        trace(t, xm, xr, serviceable, recoverable);
    }
    return cost;
}

void check_dims(const Instance& inst, const SetupPlan& plan) {
    if (plan.products() != inst.products || plan.periods() != inst.periods)
        throw std::invalid_argument("setup plan dimensions do not match the instance");
}

} // namespace

std::size_t hamming_distance(const SetupPlan& a, const SetupPlan& b) {
    if (a.products() != b.products() || a.periods() != b.periods())
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    std::size_t d = 0;
    const auto am = a.setup_m.values(), bm = b.setup_m.values();
    const auto ar = a.setup_r.values(), br = b.setup_r.values();
    for (std::size_t i = 0; i < am.size(); ++i) d += (am[i] != 0) != (bm[i] != 0);
    for (std::size_t i = 0; i < ar.size(); ++i) d += (ar[i] != 0) != (br[i] != 0);
    return d;
}

Cents product_cost(const Instance& inst, std::size_t product, std::span<const SetupBit> setup_m,
                   std::span<const SetupBit> setup_r) {
    return decode_product(inst, product, setup_m, setup_r, NoTrace{});
}

DecodedPlan decode(const Instance& inst, const SetupPlan& plan) {
    check_dims(inst, plan);
    const std::size_t K = inst.products;
    const std::size_t T = inst.periods;
    DecodedPlan out;
    out.qty_m = Matrix<Units>(K, T);
    out.qty_r = Matrix<Units>(K, T);
    out.inv_m = Matrix<Units>(K, T);
    out.inv_r = Matrix<Units>(K, T);
    out.cost_per_product.resize(K);
    out.total_cost = 0;
    for (std::size_t k = 0; k < K; ++k) {
        const Cents c = decode_product(inst, k, plan.setup_m.row(k), plan.setup_r.row(k), RowTrace{out, k});
        out.cost_per_product[k] = c;
        if (!is_feasible(c))
            out.total_cost = kInfeasible;
        else if (is_feasible(out.total_cost))
            out.total_cost += c;
    }
    return out;
}

Cents evaluate(const Instance& inst, const SetupPlan& plan) {
    check_dims(inst, plan);
    Cents total = 0;
    for (std::size_t k = 0; k < inst.products; ++k) {
        const Cents c = product_cost(inst, k, plan.setup_m.row(k), plan.setup_r.row(k));
        if (!is_feasible(c)) return kInfeasible;
        total += c;
    }
    return total;
}

Cents evaluate_product(const Instance& inst, const SetupPlan& plan, std::size_t product) {
    check_dims(inst, plan);
    if (product >= inst.products) throw std::out_of_range("evaluate_product: product index out of range");
    return product_cost(inst, product, plan.setup_m.row(product), plan.setup_r.row(product));
}

std::size_t prune_idle_setups(const Instance& inst, SetupPlan& plan) {
    const DecodedPlan d = decode(inst, plan);
    std::size_t cleared = 0;
    for (std::size_t k = 0; k < inst.products; ++k) {
        if (!is_feasible(d.cost_per_product[k])) continue;
        for (std::size_t t = 0; t < inst.periods; ++t) {
            // A zero lot either leaves the other bit in charge of the period
            // or opens a zero-demand segment that folds into its predecessor.
            if (plan.setup_m(k, t) && d.qty_m(k, t) == 0) plan.setup_m(k, t) = 0, ++cleared;
            if (plan.setup_r(k, t) && d.qty_r(k, t) == 0) plan.setup_r(k, t) = 0, ++cleared;
        }
    }
    return cleared;
}

SetupPlan initial_solution(const Instance& inst) {
    SetupPlan plan(inst.products, inst.periods);
    for (std::size_t k = 0; k < inst.products; ++k) {
        Units recoverable = 0;
        for (std::size_t t = 0; t < inst.periods; ++t) {
            recoverable += inst.returns(k, t);
            const Units d = inst.demand(k, t);
            if (d <= 0) continue;
            const Units from_returns = std::min(recoverable, d);
            recoverable -= from_returns;
            if (from_returns > 0) plan.setup_r(k, t) = 1;
            if (d > from_returns) plan.setup_m(k, t) = 1;
        }
    }
    return plan;
}

std::string DecodedPlan::to_csv() const {
    std::ostringstream os;
    os << "product,period,x_M,x_R,y_M,y_R\n";
    for (std::size_t k = 0; k < qty_m.rows(); ++k)
        for (std::size_t t = 0; t < qty_m.cols(); ++t)
            os << k << ',' << t << ',' << qty_m(k, t) << ',' << qty_r(k, t) << ',' << inv_m(k, t) << ','
               << inv_r(k, t) << '\n';
    return os.str();
}

std::vector<std::string> check_decoded(const Instance& inst, const DecodedPlan& d) {
    std::vector<std::string> out;
    auto report = [&](std::size_t k, std::size_t t, const char* what) {
        std::ostringstream os;
        os << "product " << k << " period " << t << ": " << what;
        out.push_back(os.str());
    };
    Cents total = 0;
    bool any_infeasible = false;
    for (std::size_t k = 0; k < inst.products; ++k) {
        if (!is_feasible(d.cost_per_product[k])) {
            any_infeasible = true;
            report(k, 0, "product is infeasible");
            continue;
        }
        total += d.cost_per_product[k];
        Units ym = 0, yr = 0, cum_ret = 0, cum_rem = 0;
        for (std::size_t t = 0; t < inst.periods; ++t) {
            const Units xm = d.qty_m(k, t), xr = d.qty_r(k, t);
            ym = ym + xm + xr - inst.demand(k, t);
            yr = yr + inst.returns(k, t) - xr;
            cum_ret += inst.returns(k, t);
            cum_rem += xr;
            if (ym != d.inv_m(k, t)) report(k, t, "serviceable flow balance broken");
            if (yr != d.inv_r(k, t)) report(k, t, "recoverable flow balance broken");
            if (xm < 0 || xr < 0) report(k, t, "negative quantity");
            if (d.inv_m(k, t) < 0 || d.inv_r(k, t) < 0) report(k, t, "negative inventory");
            if (cum_rem > cum_ret) report(k, t, "remanufactured more than returned");
        }
    }
    if (any_infeasible ? is_feasible(d.total_cost) : d.total_cost != total)
        out.emplace_back("total cost is not the sum of product costs");
    return out;
}

} // namespace lotvns
