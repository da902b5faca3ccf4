#pragma once

#include <string>
#include <vector>

namespace dg {

// One verified property: name, outcome, and the largest violation observed
// (0 means the property held exactly everywhere it was probed).
struct CheckResult {
    std::string name;
    bool pass = false;
    double max_violation = 0.0;
};

inline CheckResult make_check(std::string name, double violation, double tolerance) {
    return CheckResult{std::move(name), violation <= tolerance, violation};
}

inline bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

} // namespace dg
