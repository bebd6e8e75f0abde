#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "indmatch/bounds.hpp"
#include "indmatch/graph.hpp"

namespace indmatch {

inline constexpr int kExhaustiveScanCap = 7;

struct ScanFinding {
    Graph graph;  // the offending connected graph
    ComponentCheck check;
};

struct ScanReport {
    bool exhaustive = true;
    int max_n = 0;
    long long budget = 0;
    uint64_t seed = 0;        // randomized mode only
    long long trials = 0;     // randomized mode only
    long long checked = 0;    // connected graphs with max degree >= 3
    std::map<int, long long> checked_per_n;
    long long holds = 0;
    long long inconclusive = 0;
    std::vector<ScanFinding> exceptions;
    std::vector<ScanFinding> violators;
};

// Enumerates every connected graph with at most max_n vertices and max
// degree >= 3 up to isomorphism (adjacency-matrix enumeration, dedup by
// is_isomorphic_small) and checks the sharp bound on each. Refuses
// max_n > 7; beyond that use the randomized mode.
ScanReport run_exhaustive_scan(int max_n, long long budget = kDefaultNodeBudget);

// Randomized probing: seeded random graphs, each connected component
// with max degree >= 3 is checked. Deterministic under the seed.
ScanReport run_random_scan(long long trials, int max_n, uint64_t seed,
                           long long budget = kDefaultNodeBudget);

}  // namespace indmatch
