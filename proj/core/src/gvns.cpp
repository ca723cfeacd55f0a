#include "lotvns/gvns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace lotvns {

std::string_view to_string(Scheme s) {
    switch (s) {
    case Scheme::serial_vnd: return "serial-vnd";
    case Scheme::multiworker: return "multiworker";
    case Scheme::product_parallel: return "product-parallel";
    case Scheme::hybrid: return "hybrid";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::serial_vnd, Scheme::multiworker, Scheme::product_parallel, Scheme::hybrid})
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

void validate_config(const SolverConfig& config) {
    if (config.shake_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (config.vnd_neighborhoods < 1 || config.vnd_neighborhoods > kNeighborhoodCount)
        throw std::invalid_argument("k'_max must lie in 1.." + std::to_string(kNeighborhoodCount));
    if (!(config.time_limit_s > 0.0)) throw std::invalid_argument("time limit must be > 0");
    if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

SetupPlan shake(const Instance& inst, const SetupPlan& plan, int strength, Rng& rng, bool* fallback_used) {
    if (strength < 1) throw std::invalid_argument("shake strength must be >= 1");
    const std::size_t K = plan.products();
    const std::size_t T = plan.periods();
    const std::uint64_t cells = static_cast<std::uint64_t>(K) * T;
    const auto flips = std::min<std::uint64_t>(static_cast<std::uint64_t>(strength), 2 * cells);
    if (fallback_used) *fallback_used = false;

    constexpr int kRedraws = 50;
    std::vector<std::uint64_t> chosen;
    SetupPlan out;
    for (int attempt = 0; attempt <= kRedraws; ++attempt) {
        chosen.clear();
        while (chosen.size() < flips) {
            const std::uint64_t bit = rng.below(2 * cells);
            if (std::find(chosen.begin(), chosen.end(), bit) == chosen.end()) chosen.push_back(bit);
        }
        out = plan;
        for (const std::uint64_t bit : chosen) {
            auto& m = bit < cells ? out.setup_m : out.setup_r;
            const std::uint64_t cell = bit % cells;
            auto& b = m(cell / T, cell % T);
            b = b ? 0 : 1;
        }
        if (is_feasible(evaluate(inst, out))) return out;
    }

    // Last draw stays infeasible: pull the offending products back to the
    // initial solution, which always decodes.
    if (fallback_used) *fallback_used = true;
    const SetupPlan base = initial_solution(inst);
    for (std::size_t k = 0; k < K; ++k) {
        if (is_feasible(product_cost(inst, k, out.setup_m.row(k), out.setup_r.row(k)))) continue;
        std::ranges::copy(base.setup_m.row(k), out.setup_m.row(k).begin());
        std::ranges::copy(base.setup_r.row(k), out.setup_r.row(k).begin());
    }
    return out;
}

Candidate worker_round(const Instance& inst, const SetupPlan& incumbent, int strength, const SolverConfig& config,
                       std::uint64_t round, ComputePool* pool, SearchCounters* counters) {
    const std::size_t W = config.workers;
    std::vector<Candidate> candidates(W);
    std::atomic<std::uint64_t> fallbacks{0};

    auto work = [&](std::size_t w) {
        Rng rng(stream_seed(config.seed, w, round));
        bool fell_back = false;
        SetupPlan shaken = shake(inst, incumbent, strength, rng, &fell_back);
        if (fell_back) fallbacks.fetch_add(1, std::memory_order_relaxed);
        VndResult local = vnd(inst, std::move(shaken), config.vnd_neighborhoods, config.vnd_mode, pool);
        candidates[w] = Candidate{std::move(local.plan), local.cost, w};
    };
    if (W > 1 && pool != nullptr)
        pool->parallel_for(W, work);
    else
        for (std::size_t w = 0; w < W; ++w) work(w);

    if (counters) {
        counters->shake_calls += W;
        counters->rng_streams += W;
        counters->shake_fallbacks += fallbacks.load();
    }

    std::size_t best = 0;
    for (std::size_t w = 1; w < W; ++w)
        if (candidates[w].cost < candidates[best].cost) best = w;
    return std::move(candidates[best]);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

SolveResult gvns(const Instance& inst, const SolverConfig& config, ComputePool* pool) {
    validate_config(config);
    const auto start = Clock::now();

    SolveResult result;
    result.plan = initial_solution(inst);
    result.cost = evaluate(inst, result.plan);
    result.initial_cost = result.cost;

    auto out_of_budget = [&] {
        if (config.max_rounds && result.counters.rounds >= *config.max_rounds) return true;
        return seconds_since(start) > config.time_limit_s;
    };

    while (!out_of_budget()) {
        int k = 1;
        while (k <= config.shake_max && !out_of_budget()) {
            Candidate cand =
                worker_round(inst, result.plan, k, config, result.counters.rounds, pool, &result.counters);
            ++result.counters.rounds;
            if (cand.cost < result.cost) {
                result.plan = std::move(cand.plan);
                result.cost = cand.cost;
                ++result.counters.improvements;
                k = 1;
            } else {
                ++k;
            }
        }
    }

    result.iterations = result.counters.rounds;
    result.wall_s = seconds_since(start);
    return result;
}

SolveResult solve_scheme(const Instance& inst, const SolverConfig& config) {
    validate_config(config);
    require_valid(inst);
    SolverConfig effective = config;
    switch (config.scheme) {
    case Scheme::serial_vnd: {
        const auto start = Clock::now();
        SolveResult result;
        const SetupPlan init = initial_solution(inst);
        result.initial_cost = evaluate(inst, init);
        VndResult local = vnd(inst, init, config.vnd_neighborhoods, VndMode::serial);
        result.plan = std::move(local.plan);
        result.cost = local.cost;
        result.iterations = local.sweeps;
        result.wall_s = seconds_since(start);
        return result;
    }
    case Scheme::multiworker:
        if (config.workers < 2) throw std::invalid_argument("multiworker scheme needs at least 2 workers");
        effective.vnd_mode = VndMode::serial;
        break;
    case Scheme::product_parallel:
        effective.workers = 1;
        effective.vnd_mode = VndMode::product_parallel;
        break;
    case Scheme::hybrid:
        if (config.workers < 2) throw std::invalid_argument("hybrid scheme needs at least 2 workers");
        effective.vnd_mode = VndMode::product_parallel;
        break;
    }
    ComputePool pool(config.parallelism);
    return gvns(inst, effective, &pool);
}

} // namespace lotvns
