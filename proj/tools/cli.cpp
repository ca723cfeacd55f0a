#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "lotvns/gvns.hpp"
#include "lotvns/instance.hpp"
#include "lotvns/oracle.hpp"
#include "lotvns/report.hpp"

namespace lotvns::cli {

namespace {

struct GenerateArgs {
    GeneratorConfig config;
    std::string out;
};

struct SolveArgs {
    std::string instance;
    std::string scheme;
    double time_limit = 0.0;
    std::size_t workers = 2;
    std::size_t parallelism = 0;
    int kmax = 5;
    int kmax_vnd = kNeighborhoodCount;
    std::uint64_t seed = 0;
};

struct BenchArgs {
    std::string suite;
    std::string out_csv;
    std::string out_md;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parallel GVNS for multi-item lot sizing with remanufacturing", "lotvns"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a synthetic instance as JSON");
    generate->add_option("--products", gen.config.products, "Number of products K")->required()->check(CLI::PositiveNumber);
    generate->add_option("--periods", gen.config.periods, "Number of periods T")->required()->check(CLI::PositiveNumber);
    generate->add_option("--demand-max", gen.config.demand_max, "Largest per-period demand")->check(CLI::NonNegativeNumber);
    generate->add_option("--return-ratio", gen.config.return_ratio, "Returns as a fraction of demand")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen.config.seed, "Generator seed")->required();
    generate->add_option("--out", gen.out, "Output path")->required();

    SolveArgs sol;
    auto* solve = app.add_subcommand("solve", "Solve one instance with one scheme");
    solve->add_option("--instance", sol.instance, "Instance JSON")->required();
    solve->add_option("--scheme", sol.scheme, "Parallelization scheme")
        ->required()
        ->check(CLI::IsMember({"serial-vnd", "multiworker", "product-parallel", "hybrid"}));
    solve->add_option("--time-limit", sol.time_limit, "Wall-clock budget in seconds")
        ->required()
        ->check(CLI::PositiveNumber);
    solve->add_option("--workers", sol.workers, "Concurrent GVNS workers")->check(CLI::PositiveNumber);
    solve->add_option("--parallelism", sol.parallelism, "Compute lanes (0 = all cores)")->check(CLI::NonNegativeNumber);
    solve->add_option("--kmax", sol.kmax, "Largest shake strength")->check(CLI::PositiveNumber);
    solve->add_option("--kmax-vnd", sol.kmax_vnd, "VND neighborhood count")->check(CLI::Range(1, kNeighborhoodCount));
    solve->add_option("--seed", sol.seed, "Search seed")->required();

    std::string oracle_path;
    auto* oracle = app.add_subcommand("oracle", "Exact optimum of a tiny instance by enumeration");
    oracle->add_option("--instance", oracle_path, "Instance JSON")->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite over all schemes");
    bench_cmd->add_option("--suite", bench.suite, "Suite JSON")->required();
    bench_cmd->add_option("--out-csv", bench.out_csv, "CSV report path")->required();
    bench_cmd->add_option("--out-md", bench.out_md, "Markdown report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "lotvns: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            save_instance(generate_instance(gen.config), gen.out);
            out << "wrote " << gen.out << '\n';
        } else if (solve->parsed()) {
            const Instance inst = load_instance(sol.instance);
            SolverConfig cfg;
            cfg.scheme = parse_scheme(sol.scheme);
            cfg.time_limit_s = sol.time_limit;
            cfg.workers = sol.workers;
            cfg.parallelism = sol.parallelism;
            cfg.shake_max = sol.kmax;
            cfg.vnd_neighborhoods = sol.kmax_vnd;
            cfg.seed = sol.seed;
            if ((cfg.scheme == Scheme::multiworker || cfg.scheme == Scheme::hybrid) && cfg.workers < 2) {
                err << "lotvns: scheme " << sol.scheme << " needs --workers >= 2\n";
                return kExitUsage;
            }
            const SolveResult r = solve_scheme(inst, cfg);
            out << "scheme " << sol.scheme << '\n'
                << "objective " << format_cents(r.cost) << '\n'
                << "objective_cents " << r.cost << '\n'
                << "initial_objective " << format_cents(r.initial_cost) << '\n'
                << "wall_s " << seconds(r.wall_s) << '\n'
                << "iterations " << r.iterations << '\n';
        } else if (oracle->parsed()) {
            const Instance inst = load_instance(oracle_path);
            const OracleResult r = enumerate_optimal(inst);
            out << "objective " << format_cents(r.cost) << '\n' << "objective_cents " << r.cost << '\n';
        } else if (bench_cmd->parsed()) {
            const SuiteConfig suite = load_suite(bench.suite);
            const BenchReport report = run_bench(suite, [&](const BenchRow& row) {
                err << row.instance_id << ' ' << row.scheme << ' ' << format_cents(row.objective) << ' '
                    << seconds(row.wall_s) << "s\n";
            });
            write_file(bench.out_csv, emit_csv(report));
            const std::string md = emit_markdown(report);
            if (!bench.out_md.empty()) write_file(bench.out_md, md);
            out << md;
        }
    } catch (const std::exception& e) {
        err << "lotvns: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

} // namespace lotvns::cli
