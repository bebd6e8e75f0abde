#pragma once

#include "indmatch/graph.hpp"

namespace indmatch {

inline constexpr long long kDefaultNodeBudget = 10'000'000;
inline constexpr long long kBruteforceEdgeCap = 20;

enum class SolveStatus { Exact, BudgetExhausted };

struct ExactResult {
    int value = 0;
    EdgeList witness;  // valid induced matching of size `value`
    SolveStatus status = SolveStatus::Exact;
    long long nodes_explored = 0;
};

// Strong matching number with witness, via branch-and-bound maximum
// independent set on the conflict graph. Branches on the max-degree
// residual vertex, prunes with a greedy clique cover, breaks all ties
// by vertex order. Exceeding the node budget degrades the result to a
// lower bound (status BudgetExhausted); the witness stays valid.
ExactResult nu_s_exact(const Graph& g, long long budget = kDefaultNodeBudget);

// Exhaustive scan of all 2^m edge subsets; refuses m > 20. Independent
// of the conflict-graph machinery, used as the oracle's oracle.
int nu_s_bruteforce(const Graph& g);

}  // namespace indmatch
