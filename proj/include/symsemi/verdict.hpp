#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace symsemi {

/// One named identity or assertion and whether it held.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<double> residual; ///< float mode only
};

struct Verdict {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = {}, std::optional<double> residual = {}) {
        checks.push_back({std::move(name), pass, std::move(detail), residual});
    }
    void append(const Verdict& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    [[nodiscard]] bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

} // namespace symsemi
