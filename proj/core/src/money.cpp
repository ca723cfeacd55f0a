#include "lotvns/money.hpp"

#include <cstdio>

namespace lotvns {

std::string format_cents(Cents c) {
    if (!is_feasible(c)) return "inf";
    const bool negative = c < 0;
    const auto mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%llu.%02llu", negative ? "-" : "",
                  static_cast<unsigned long long>(mag / 100), static_cast<unsigned long long>(mag % 100));
    return buf;
}

} // namespace lotvns
