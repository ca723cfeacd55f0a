#include "lotvns/instance.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lotvns/rng.hpp"

namespace lotvns {

using nlohmann::json;

namespace {

void check_range(const CentsRange& r, const char* name) {
    if (r.lo < 0 || r.hi < r.lo)
        throw InstanceError(std::string("generator: invalid range for ") + name);
}

std::vector<Cents> draw_vector(Rng& rng, std::size_t n, const CentsRange& r) {
    std::vector<Cents> v(n);
    for (auto& x : v) x = rng.between(r.lo, r.hi);
    return v;
}

} // namespace

Instance generate_instance(const GeneratorConfig& config) {
    if (config.products == 0) throw InstanceError("generator: products must be >= 1");
    if (config.periods == 0) throw InstanceError("generator: periods must be >= 1");
    if (config.demand_max < 0) throw InstanceError("generator: demand_max must be >= 0");
    if (!(config.return_ratio >= 0.0 && config.return_ratio <= 1.0))
        throw InstanceError("generator: return_ratio must lie in [0, 1]");
    check_range(config.setup_cost_m, "setup_cost_m");
    check_range(config.setup_cost_r, "setup_cost_r");
    check_range(config.holding_cost_m, "holding_cost_m");
    check_range(config.holding_cost_r, "holding_cost_r");
    check_range(config.unit_cost_m, "unit_cost_m");
    check_range(config.unit_cost_r, "unit_cost_r");

    const std::size_t K = config.products;
    const std::size_t T = config.periods;
    Rng rng(config.seed);

    Instance inst;
    inst.products = K;
    inst.periods = T;
    inst.demand = Matrix<Units>(K, T);
    inst.returns = Matrix<Units>(K, T);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t t = 0; t < T; ++t) {
            const Units d = rng.between(0, config.demand_max);
            const auto cap = static_cast<Units>(std::floor(config.return_ratio * static_cast<double>(d)));
            inst.demand(k, t) = d;
            inst.returns(k, t) = rng.between(0, cap);
        }
    }
    inst.setup_cost_m = draw_vector(rng, K, config.setup_cost_m);
    inst.setup_cost_r = draw_vector(rng, K, config.setup_cost_r);
    inst.holding_cost_m = draw_vector(rng, K, config.holding_cost_m);
    inst.holding_cost_r = draw_vector(rng, K, config.holding_cost_r);
    inst.unit_cost_m = draw_vector(rng, K, config.unit_cost_m);
    inst.unit_cost_r = draw_vector(rng, K, config.unit_cost_r);
    return inst;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    const std::size_t K = inst.products;
    const std::size_t T = inst.periods;
    if (K == 0) out.emplace_back("products: must be >= 1");
    if (T == 0) out.emplace_back("periods: must be >= 1");

    auto check_matrix = [&](const Matrix<Units>& m, const char* name) {
        if (m.rows() != K || m.cols() != T) {
            std::ostringstream os;
            os << name << ": dimension " << m.rows() << "x" << m.cols() << ", expected " << K << "x" << T;
            out.push_back(os.str());
            return;
        }
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t t = 0; t < T; ++t)
                if (m(k, t) < 0) {
                    std::ostringstream os;
                    os << name << "[" << k << "][" << t << "]: negative value " << m(k, t);
                    out.push_back(os.str());
                }
    };
    auto check_vector = [&](const std::vector<Cents>& v, const char* name) {
        if (v.size() != K) {
            std::ostringstream os;
            os << name << ": length " << v.size() << ", expected " << K;
            out.push_back(os.str());
            return;
        }
        for (std::size_t k = 0; k < K; ++k)
            if (v[k] < 0) {
                std::ostringstream os;
                os << name << "[" << k << "]: negative value " << v[k];
                out.push_back(os.str());
            }
    };

    check_matrix(inst.demand, "demand");
    check_matrix(inst.returns, "returns");
    check_vector(inst.setup_cost_m, "setup_cost_m");
    check_vector(inst.setup_cost_r, "setup_cost_r");
    check_vector(inst.holding_cost_m, "holding_cost_m");
    check_vector(inst.holding_cost_r, "holding_cost_r");
    check_vector(inst.unit_cost_m, "unit_cost_m");
    check_vector(inst.unit_cost_r, "unit_cost_r");
    return out;
}

void require_valid(const Instance& inst) {
    const auto violations = validate_instance(inst);
    if (!violations.empty()) throw InstanceError("invalid instance: " + violations.front());
}

namespace {

const std::set<std::string> kKnownFields{
    "products", "periods", "demand", "returns", "setup_cost_m", "setup_cost_r",
    "holding_cost_m", "holding_cost_r", "unit_cost_m", "unit_cost_r"};

const json& require_field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw InstanceError(std::string("schema: missing field \"") + name + "\"");
    return *it;
}

std::int64_t as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InstanceError("schema: " + where + " must be an integer");
    return v.get<std::int64_t>();
}

std::size_t as_count(const json& v, const char* name) {
    const auto n = as_integer(v, std::string("\"") + name + "\"");
    if (n < 1) throw InstanceError(std::string("schema: \"") + name + "\" must be >= 1");
    return static_cast<std::size_t>(n);
}

Matrix<Units> read_matrix(const json& v, const char* name, std::size_t K, std::size_t T) {
    if (!v.is_array()) throw InstanceError(std::string("schema: \"") + name + "\" must be an array");
    if (v.size() != K)
        throw InstanceError(std::string("schema: \"") + name + "\" has " + std::to_string(v.size()) +
                            " rows, expected " + std::to_string(K));
    Matrix<Units> m(K, T);
    for (std::size_t k = 0; k < K; ++k) {
        const auto& row = v[k];
        const std::string where = std::string("\"") + name + "\"[" + std::to_string(k) + "]";
        if (!row.is_array() || row.size() != T)
            throw InstanceError("schema: " + where + " must be an array of " + std::to_string(T) + " integers");
        for (std::size_t t = 0; t < T; ++t)
            m(k, t) = as_integer(row[t], where + "[" + std::to_string(t) + "]");
    }
    return m;
}

std::vector<Cents> read_vector(const json& v, const char* name, std::size_t K) {
    if (!v.is_array() || v.size() != K)
        throw InstanceError(std::string("schema: \"") + name + "\" must be an array of " + std::to_string(K) +
                            " integers");
    std::vector<Cents> out(K);
    for (std::size_t k = 0; k < K; ++k)
        out[k] = as_integer(v[k], std::string("\"") + name + "\"[" + std::to_string(k) + "]");
    return out;
}

} // namespace

Instance parse_instance(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InstanceError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw InstanceError("schema: top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (!kKnownFields.contains(key)) throw InstanceError("schema: unknown field \"" + key + "\"");

    Instance inst;
    inst.products = as_count(require_field(doc, "products"), "products");
    inst.periods = as_count(require_field(doc, "periods"), "periods");
    const std::size_t K = inst.products;
    const std::size_t T = inst.periods;
    inst.demand = read_matrix(require_field(doc, "demand"), "demand", K, T);
    inst.returns = read_matrix(require_field(doc, "returns"), "returns", K, T);
    inst.setup_cost_m = read_vector(require_field(doc, "setup_cost_m"), "setup_cost_m", K);
    inst.setup_cost_r = read_vector(require_field(doc, "setup_cost_r"), "setup_cost_r", K);
    inst.holding_cost_m = read_vector(require_field(doc, "holding_cost_m"), "holding_cost_m", K);
    inst.holding_cost_r = read_vector(require_field(doc, "holding_cost_r"), "holding_cost_r", K);
    inst.unit_cost_m = doc.contains("unit_cost_m") ? read_vector(doc["unit_cost_m"], "unit_cost_m", K)
                                                   : std::vector<Cents>(K, 0);
    inst.unit_cost_r = doc.contains("unit_cost_r") ? read_vector(doc["unit_cost_r"], "unit_cost_r", K)
                                                   : std::vector<Cents>(K, 0);
    require_valid(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    auto matrix = [](const Matrix<Units>& m) {
        json rows = json::array();
        for (std::size_t k = 0; k < m.rows(); ++k) {
            auto r = m.row(k);
            rows.push_back(std::vector<Units>(r.begin(), r.end()));
        }
        return rows;
    };
    json doc;
    doc["products"] = inst.products;
    doc["periods"] = inst.periods;
    doc["demand"] = matrix(inst.demand);
    doc["returns"] = matrix(inst.returns);
    doc["setup_cost_m"] = inst.setup_cost_m;
    doc["setup_cost_r"] = inst.setup_cost_r;
    doc["holding_cost_m"] = inst.holding_cost_m;
    doc["holding_cost_r"] = inst.holding_cost_r;
    doc["unit_cost_m"] = inst.unit_cost_m;
    doc["unit_cost_r"] = inst.unit_cost_r;
    return doc.dump() + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const InstanceError& e) {
        throw InstanceError(path + ": " + e.what());
    }
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << serialize_instance(inst);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace lotvns
