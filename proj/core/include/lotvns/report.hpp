#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotvns/gvns.hpp"
#include "lotvns/instance.hpp"

namespace lotvns {

struct BenchRow {
    std::string instance_id;
    std::string scheme;
    Cents objective = 0;
    double wall_s = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
};

struct SchemeSummary {
    std::string scheme;
    std::size_t wins = 0; ///< rows where this scheme alone holds the minimum
    std::size_t ties = 0; ///< rows where it shares the minimum with others
    double mean_objective = 0.0; ///< in cents
};

/// One row per (instance, scheme). Column order follows `schemes`, row
/// order follows first appearance of each instance id.
struct BenchReport {
    std::vector<std::string> schemes;
    std::vector<BenchRow> rows;

    std::vector<std::string> instance_ids() const;
    /// Objective of a cell, if present.
    std::optional<Cents> objective(std::string_view instance_id, std::string_view scheme) const;
    /// Schemes whose objective equals the instance's minimum exactly.
    std::vector<std::string> best_schemes(std::string_view instance_id) const;
    std::vector<SchemeSummary> summarize() const;
};

/// Header `id,scheme,objective_cents,wall_s,seed,iterations`.
std::string emit_csv(const BenchReport& report);

/// One line per instance, one column per scheme, objectives with two
/// decimals and every row minimum in bold, followed by a wins/ties table.
std::string emit_markdown(const BenchReport& report);

struct InstanceSource {
    std::string id;
    std::optional<std::filesystem::path> file;
    std::optional<GeneratorConfig> generator;
};

struct SuiteConfig {
    std::vector<InstanceSource> instances;
    std::vector<Scheme> schemes{Scheme::serial_vnd, Scheme::multiworker, Scheme::product_parallel, Scheme::hybrid};
    SolverConfig solver;
    std::vector<std::uint64_t> seeds{1};
    std::size_t repetitions = 1;
    /// Runs cells concurrently. Distorts timings; never use for speedups.
    bool parallel_cells = false;
};

/// Reads the suite JSON. Relative instance paths resolve against `base_dir`.
/// Throws InstanceError on schema problems.
SuiteConfig parse_suite(std::string_view json_text, const std::filesystem::path& base_dir = {});
SuiteConfig load_suite(const std::filesystem::path& path);

using BenchProgress = std::function<void(const BenchRow&)>;

/// Loads and validates every instance first, then solves every
/// (instance, seed, repetition, scheme) cell under the shared budget.
BenchReport run_bench(const SuiteConfig& suite, const BenchProgress& progress = {});

} // namespace lotvns
