#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lotvns/rng.hpp"
#include "lotvns/vnd.hpp"

namespace lotvns {

/// The four compared configurations.
///   serial_vnd       VND from the initial solution only, no shaking
///   multiworker      GVNS, W concurrent workers, serial VND
///   product_parallel GVNS, one worker, product-parallel VND
///   hybrid           GVNS, W concurrent workers, product-parallel VND
enum class Scheme { serial_vnd, multiworker, product_parallel, hybrid };

std::string_view to_string(Scheme s);
/// Throws std::invalid_argument on an unknown name.
Scheme parse_scheme(std::string_view name);

struct SolverConfig {
    int shake_max = 5;                   ///< k_max: largest shake strength
    int vnd_neighborhoods = kNeighborhoodCount; ///< k'_max
    double time_limit_s = 60.0;          ///< t_max, wall clock
    std::size_t workers = 2;             ///< W
    std::size_t parallelism = 0;         ///< compute lanes, 0 = hardware concurrency
    VndMode vnd_mode = VndMode::serial;
    Scheme scheme = Scheme::hybrid;
    std::uint64_t seed = 0;
    /// Optional cap on worker rounds. With a cap and an ample time limit the
    /// search is reproducible run to run.
    std::optional<std::uint64_t> max_rounds;
};

/// Throws std::invalid_argument describing the first broken invariant.
void validate_config(const SolverConfig& config);

struct SearchCounters {
    std::uint64_t rounds = 0;
    std::uint64_t shake_calls = 0;
    std::uint64_t rng_streams = 0;
    std::uint64_t improvements = 0;
    std::uint64_t shake_fallbacks = 0;
};

struct SolveResult {
    SetupPlan plan;
    Cents cost = 0;
    Cents initial_cost = 0;
    std::uint64_t iterations = 0; ///< worker rounds for GVNS, sweeps for serial VND
    double wall_s = 0.0;
    SearchCounters counters;
};

/// Flips `strength` distinct, uniformly drawn (kind, product, period) bits.
/// Infeasible draws are redrawn up to 50 times; after that, every product
/// left infeasible is reset to its initial_solution rows. The output always
/// decodes feasibly. `fallback_used`, when given, reports the reset.
SetupPlan shake(const Instance& inst, const SetupPlan& plan, int strength, Rng& rng, bool* fallback_used = nullptr);

struct Candidate {
    SetupPlan plan;
    Cents cost = kInfeasible;
    std::size_t worker = 0;
};

/// One fork-join round: each worker w shakes the incumbent at `strength`
/// with the stream stream_seed(seed, w, round) and runs VND on the result.
/// Returns the cheapest candidate, lowest worker index on ties.
Candidate worker_round(const Instance& inst, const SetupPlan& incumbent, int strength, const SolverConfig& config,
                       std::uint64_t round, ComputePool* pool, SearchCounters* counters = nullptr);

/// General VNS from initial_solution. Worker rounds run with k = 1..k_max;
/// a strictly better candidate replaces the incumbent and resets k to 1.
/// The clock is read between rounds, so a run may overshoot t_max by one
/// round. Uses config.workers and config.vnd_mode as given.
SolveResult gvns(const Instance& inst, const SolverConfig& config, ComputePool* pool);

/// Maps config.scheme onto gvns/vnd with the scheme's worker count and VND
/// mode and runs it on a pool of config.parallelism lanes.
SolveResult solve_scheme(const Instance& inst, const SolverConfig& config);

} // namespace lotvns
