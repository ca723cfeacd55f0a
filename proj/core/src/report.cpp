#include "lotvns/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lotvns/compute_pool.hpp"

namespace lotvns {

using nlohmann::json;

std::vector<std::string> BenchReport::instance_ids() const {
    std::vector<std::string> ids;
    std::set<std::string, std::less<>> seen;
    for (const auto& row : rows)
        if (seen.insert(row.instance_id).second) ids.push_back(row.instance_id);
    return ids;
}

std::optional<Cents> BenchReport::objective(std::string_view instance_id, std::string_view scheme) const {
    for (const auto& row : rows)
        if (row.instance_id == instance_id && row.scheme == scheme) return row.objective;
    return std::nullopt;
}

std::vector<std::string> BenchReport::best_schemes(std::string_view instance_id) const {
    Cents best = kInfeasible;
    for (const auto& row : rows)
        if (row.instance_id == instance_id) best = std::min(best, row.objective);
    std::vector<std::string> out;
    for (const auto& scheme : schemes) {
        const auto obj = objective(instance_id, scheme);
        if (obj && *obj == best) out.push_back(scheme);
    }
    return out;
}

std::vector<SchemeSummary> BenchReport::summarize() const {
    std::vector<SchemeSummary> out;
    for (const auto& scheme : schemes) {
        SchemeSummary s{scheme};
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto& row : rows)
            if (row.scheme == scheme) {
                sum += static_cast<double>(row.objective);
                ++n;
            }
        s.mean_objective = n ? sum / static_cast<double>(n) : 0.0;
        out.push_back(s);
    }
    for (const auto& id : instance_ids()) {
        const auto best = best_schemes(id);
        for (auto& s : out)
            if (std::find(best.begin(), best.end(), s.scheme) != best.end()) ++(best.size() == 1 ? s.wins : s.ties);
    }
    return out;
}

std::string emit_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "id,scheme,objective_cents,wall_s,seed,iterations\n";
    char wall[32];
    for (const auto& row : report.rows) {
        std::snprintf(wall, sizeof wall, "%.3f", row.wall_s);
        os << row.instance_id << ',' << row.scheme << ',' << row.objective << ',' << wall << ',' << row.seed << ','
           << row.iterations << '\n';
    }
    return os.str();
}

std::string emit_markdown(const BenchReport& report) {
    std::ostringstream os;
    os << "| ID |";
    for (const auto& s : report.schemes) os << ' ' << s << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < report.schemes.size(); ++i) os << "---:|";
    os << '\n';
    for (const auto& id : report.instance_ids()) {
        const auto best = report.best_schemes(id);
        os << "| " << id << " |";
        for (const auto& s : report.schemes) {
            const auto obj = report.objective(id, s);
            if (!obj) {
                os << " - |";
                continue;
            }
            const bool bold = std::find(best.begin(), best.end(), s) != best.end();
            os << ' ' << (bold ? "**" : "") << format_cents(*obj) << (bold ? "**" : "") << " |";
        }
        os << '\n';
    }
    os << "\n| Scheme | Wins | Ties | Mean objective |\n|---|---:|---:|---:|\n";
    char mean[64];
    for (const auto& s : report.summarize()) {
        std::snprintf(mean, sizeof mean, "%.2f", s.mean_objective / 100.0);
        os << "| " << s.scheme << " | " << s.wins << " | " << s.ties << " | " << mean << " |\n";
    }
    return os.str();
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!known.contains(key)) throw InstanceError("suite: unknown field \"" + key + "\" in " + where);
}

CentsRange read_range(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        throw InstanceError("suite: " + where + " must be [lo, hi] integers");
    return {v[0].get<Cents>(), v[1].get<Cents>()};
}

GeneratorConfig read_generator(const json& g, const std::string& where) {
    reject_unknown(g,
                   {"products", "periods", "demand_max", "return_ratio", "seed", "setup_cost_m", "setup_cost_r",
                    "holding_cost_m", "holding_cost_r", "unit_cost_m", "unit_cost_r"},
                   where);
    GeneratorConfig c;
    try {
        c.products = g.at("products").get<std::size_t>();
        c.periods = g.at("periods").get<std::size_t>();
        c.seed = g.at("seed").get<std::uint64_t>();
        if (g.contains("demand_max")) c.demand_max = g["demand_max"].get<Units>();
        if (g.contains("return_ratio")) c.return_ratio = g["return_ratio"].get<double>();
    } catch (const json::exception& e) {
        throw InstanceError("suite: " + where + ": " + e.what());
    }
    const std::pair<const char*, CentsRange*> ranges[] = {
        {"setup_cost_m", &c.setup_cost_m},     {"setup_cost_r", &c.setup_cost_r},
        {"holding_cost_m", &c.holding_cost_m}, {"holding_cost_r", &c.holding_cost_r},
        {"unit_cost_m", &c.unit_cost_m},       {"unit_cost_r", &c.unit_cost_r}};
    for (const auto& [name, dst] : ranges)
        if (g.contains(name)) *dst = read_range(g[name], where + "." + name);
    return c;
}

} // namespace

SuiteConfig parse_suite(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InstanceError("suite: syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw InstanceError("suite: top level must be an object");
    reject_unknown(doc,
                   {"instances", "schemes", "time_limit", "seeds", "repetitions", "workers", "parallelism", "kmax",
                    "kmax_vnd", "max_rounds", "parallel_cells"},
                   "suite");

    SuiteConfig suite;
    try {
        const auto& instances = doc.at("instances");
        if (!instances.is_array() || instances.empty())
            throw InstanceError("suite: \"instances\" must be a non-empty array");
        std::set<std::string> ids;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& entry = instances[i];
            const std::string where = "instances[" + std::to_string(i) + "]";
            if (!entry.is_object()) throw InstanceError("suite: " + where + " must be an object");
            reject_unknown(entry, {"id", "file", "generate"}, where);
            InstanceSource src;
            src.id = entry.at("id").get<std::string>();
            if (!ids.insert(src.id).second) throw InstanceError("suite: duplicate instance id \"" + src.id + "\"");
            if (entry.contains("file") == entry.contains("generate"))
                throw InstanceError("suite: " + where + " needs exactly one of \"file\" or \"generate\"");
            if (entry.contains("file")) {
                std::filesystem::path p = entry["file"].get<std::string>();
                src.file = p.is_absolute() ? p : base_dir / p;
            } else {
                src.generator = read_generator(entry["generate"], where + ".generate");
            }
            suite.instances.push_back(std::move(src));
        }
        if (doc.contains("schemes")) {
            suite.schemes.clear();
            for (const auto& s : doc["schemes"]) suite.schemes.push_back(parse_scheme(s.get<std::string>()));
            if (suite.schemes.empty()) throw InstanceError("suite: \"schemes\" must not be empty");
        }
        suite.solver.time_limit_s = doc.at("time_limit").get<double>();
        if (doc.contains("seeds")) suite.seeds = doc["seeds"].get<std::vector<std::uint64_t>>();
        if (suite.seeds.empty()) throw InstanceError("suite: \"seeds\" must not be empty");
        if (doc.contains("repetitions")) suite.repetitions = doc["repetitions"].get<std::size_t>();
        if (suite.repetitions < 1) throw InstanceError("suite: \"repetitions\" must be >= 1");
        if (doc.contains("workers")) suite.solver.workers = doc["workers"].get<std::size_t>();
        if (doc.contains("parallelism")) suite.solver.parallelism = doc["parallelism"].get<std::size_t>();
        if (doc.contains("kmax")) suite.solver.shake_max = doc["kmax"].get<int>();
        if (doc.contains("kmax_vnd")) suite.solver.vnd_neighborhoods = doc["kmax_vnd"].get<int>();
        if (doc.contains("max_rounds")) suite.solver.max_rounds = doc["max_rounds"].get<std::uint64_t>();
        if (doc.contains("parallel_cells")) suite.parallel_cells = doc["parallel_cells"].get<bool>();
    } catch (const json::exception& e) {
        throw InstanceError(std::string("suite: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InstanceError(std::string("suite: ") + e.what());
    }
    try {
        validate_config(suite.solver);
    } catch (const std::invalid_argument& e) {
        throw InstanceError(std::string("suite: ") + e.what());
    }
    return suite;
}

SuiteConfig load_suite(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open suite file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_suite(buf.str(), path.parent_path());
}

BenchReport run_bench(const SuiteConfig& suite, const BenchProgress& progress) {
    std::vector<std::pair<std::string, Instance>> instances;
    for (const auto& src : suite.instances) {
        try {
            Instance inst = src.file ? load_instance(src.file->string()) : generate_instance(*src.generator);
            require_valid(inst);
            instances.emplace_back(src.id, std::move(inst));
        } catch (const InstanceError& e) {
            throw InstanceError("instance \"" + src.id + "\": " + e.what());
        }
    }

    struct Cell {
        std::size_t instance;
        std::string row_id;
        std::uint64_t seed;
        Scheme scheme;
    };
    const bool single_run = suite.seeds.size() == 1 && suite.repetitions == 1;
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (const std::uint64_t seed : suite.seeds)
            for (std::size_t rep = 0; rep < suite.repetitions; ++rep) {
                const std::uint64_t cell_seed = seed + rep;
                std::string id = instances[i].first;
                if (!single_run) id += "/s" + std::to_string(seed) + "r" + std::to_string(rep);
                for (const Scheme s : suite.schemes) cells.push_back({i, id, cell_seed, s});
            }

    BenchReport report;
    for (const Scheme s : suite.schemes) report.schemes.emplace_back(to_string(s));
    report.rows.resize(cells.size());

    auto run_cell = [&](std::size_t c) {
        const Cell& cell = cells[c];
        SolverConfig cfg = suite.solver;
        cfg.scheme = cell.scheme;
        cfg.seed = cell.seed;
        const SolveResult r = solve_scheme(instances[cell.instance].second, cfg);
        report.rows[c] = BenchRow{cell.row_id, std::string(to_string(cell.scheme)), r.cost, r.wall_s, cell.seed,
                                  r.iterations};
    };

    if (suite.parallel_cells) {
        ComputePool pool;
        pool.parallel_for(cells.size(), run_cell);
        if (progress)
            for (const auto& row : report.rows) progress(row);
    } else {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            run_cell(c);
            if (progress) progress(report.rows[c]);
        }
    }
    return report;
}

} // namespace lotvns
