#pragma once

#include "indmatch/graph.hpp"

namespace indmatch {

enum class GreedyPolicy {
    FirstEdge,    // lexicographically first remaining edge
    MinConflict,  // fewest remaining conflicting edges, ties lexicographic
};

// Greedy induced matching: pick an edge per policy, discard everything
// within distance 1, repeat. Size is at least
// ceil(m / (2*delta^2 - 2*delta + 1)) for any policy.
//
// FirstEdge streams over the graph directly and scales to millions of
// edges. MinConflict needs the materialized conflict graph and refuses
// inputs whose conflict structure would be unreasonably large.
EdgeList greedy_induced_matching(const Graph& g,
                                 GreedyPolicy policy = GreedyPolicy::FirstEdge);

// True when MinConflict can materialize the conflict structure.
bool min_conflict_feasible(const Graph& g);

}  // namespace indmatch
