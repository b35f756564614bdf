#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kxy/budget.hpp"
#include "kxy/endo.hpp"
#include "kxy/poly.hpp"

namespace kxy {

// Per-iteration total degrees of phi^k(x) and phi^k(y), k = 1..kmax; a
// degree-cap hit truncates the trace instead of failing.
struct DegreeTrace {
    std::vector<std::pair<int, int>> degrees;
    bool truncated = false;
};

DegreeTrace degree_trace(const Endo& phi, int kmax, const Budget& budget = {});

// Exact basis of {f : deg f <= d, phi(f) = f}; always contains the
// constants.
struct FixedSpace {
    int degree_bound = 0;
    std::vector<Poly> basis;
};

FixedSpace fixed_polys(const Endo& phi, int d, const Budget& budget = {});

struct Cor17Report {
    enum class Status {
        consistent,            // Keller + fixed polynomial + verified automorphism
        premise_not_met,       // not Keller, or no non-constant fixed polynomial
        theorem_violation,     // impossible per the theorem; flags a bug
    };

    Status status = Status::premise_not_met;
    std::string detail;
    bool keller = false;
    bool has_fixed = false;
};

Cor17Report cor17_consistency(const Endo& phi, int d, const Budget& budget = {});

}  // namespace kxy
