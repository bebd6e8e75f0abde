#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indmatch/exact.hpp"
#include "indmatch/graph.hpp"

namespace indmatch {

// B(delta) = (ceil(delta/2)+1)(floor(delta/2)+1), the guaranteed
// per-matching-edge vertex budget. Throws for delta < 1.
long long bound_B(int delta);

// ceil(n / B(delta)); the guaranteed induced matching size for graphs
// without isolated vertices once delta is large enough.
long long theorem_guarantee(long long n, int delta);

// ceil(n / (2(2*delta^2 - 2*delta + 1))), the greedy counting floor.
long long trivial_guarantee(long long n, int delta);

// delta^2/4 + delta + 3/4 <= B(delta), checked in exact integer
// arithmetic (both sides scaled by 4).
bool helper_inequality_check(long long delta);

enum class ConjectureStatus {
    Holds,
    ExceptionC5Sq,
    ExceptionK33Plus,
    Violated,
    Inconclusive,      // budget ran out below the guarantee
    NotApplicable,     // component has maximum degree < 3
};

std::string to_string(ConjectureStatus status);

struct ComponentCheck {
    VertexSet component;     // original vertex ids
    int n = 0;
    int delta = 0;
    long long guarantee = 0;  // ceil(n / B(delta)), 0 when not applicable
    ExactResult nu;           // witness in original vertex ids
    ConjectureStatus status = ConjectureStatus::NotApplicable;
};

// Checks the sharp bound per connected component with max degree >= 3.
// The two known exception graphs are recognized up front and labeled
// instead of being reported as violations.
std::vector<ComponentCheck> conjecture_check(const Graph& g,
                                             long long budget = kDefaultNodeBudget);

struct BoundReport {
    long long n = 0;
    long long n_nonisolated = 0;  // guarantees are computed against this
    int delta = 0;
    long long b = 0;
    long long theorem_guarantee = 0;
    long long trivial_guarantee = 0;
    std::map<std::string, long long> achieved;
    std::optional<std::vector<ComponentCheck>> conjecture;
};

// Guarantee block for a graph; achieved sizes are filled by callers.
BoundReport make_bound_report(const Graph& g);

}  // namespace indmatch
