#pragma once
#include <string>
#include <vector>

namespace af {

struct Violation {
    std::string location;  // word / entry / object the problem was found at
    std::string detail;
};

struct Report {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
    void add(std::string loc, std::string detail) {
        violations.push_back({std::move(loc), std::move(detail)});
    }
    void merge(const Report& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

enum class Stability { Stable, Unstable };

/* one row of a degree -> dimension table */
struct DimEntry {
    int degree = 0;
    std::size_t dim = 0;
    Stability stability = Stability::Stable;
};

} // namespace af
