#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lotvns/matrix.hpp"
#include "lotvns/money.hpp"

namespace lotvns {

using Units = std::int64_t;

/// Uncapacitated multi-item lot-sizing instance with product returns.
///
/// Products are independent: every matrix is products x periods and every
/// cost vector has one entry per product. Initial inventories are zero.
struct Instance {
    std::size_t products = 0;
    std::size_t periods = 0;
    Matrix<Units> demand;
    Matrix<Units> returns;
    std::vector<Cents> setup_cost_m;
    std::vector<Cents> setup_cost_r;
    std::vector<Cents> holding_cost_m;
    std::vector<Cents> holding_cost_r;
    std::vector<Cents> unit_cost_m;
    std::vector<Cents> unit_cost_r;

    bool operator==(const Instance&) const = default;
};

/// Inclusive integer range used by the generator.
struct CentsRange {
    Cents lo = 0;
    Cents hi = 0;
};

struct GeneratorConfig {
    std::size_t products = 1;
    std::size_t periods = 1;
    Units demand_max = 100;
    double return_ratio = 0.5;
    CentsRange setup_cost_m{10000, 50000};
    CentsRange setup_cost_r{5000, 30000};
    CentsRange holding_cost_m{50, 200};
    CentsRange holding_cost_r{20, 100};
    CentsRange unit_cost_m{0, 0};
    CentsRange unit_cost_r{0, 0};
    std::uint64_t seed = 0;
};

/// Raised for invalid generator configs and for instances that fail to
/// parse or validate. The message carries the field or position.
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pure function of the config: equal configs give bit-identical instances.
Instance generate_instance(const GeneratorConfig& config);

/// Every dimension and sign violation, one message per problem. Empty when
/// the instance is well formed.
std::vector<std::string> validate_instance(const Instance& inst);

/// Throws InstanceError with the first violation when validation fails.
void require_valid(const Instance& inst);

Instance parse_instance(std::string_view json_text);
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

} // namespace lotvns
