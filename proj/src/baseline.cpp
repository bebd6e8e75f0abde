#include "indmatch/baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "indmatch/matching.hpp"

namespace indmatch {

namespace {

constexpr long long kMinConflictCap = 200'000'000;

EdgeList greedy_first_edge(const Graph& g) {
    EdgeList matching;
    std::vector<char> blocked(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        if (blocked[e.u] || blocked[e.v]) {
            continue;
        }
        matching.push_back(e);
        // Blocking N[u] ∪ N[v] kills exactly the conflicting edges.
        for (VertexId x : {e.u, e.v}) {
            blocked[x] = 1;
            for (VertexId w : g.neighbors(x)) {
                blocked[w] = 1;
            }
        }
    }
    return matching;
}

EdgeList greedy_min_conflict(const Graph& g) {
    if (!min_conflict_feasible(g)) {
        throw std::invalid_argument(
            "greedy_induced_matching: conflict structure too large for "
            "min-conflict policy");
    }
    const ConflictGraph cg = conflict_graph(g);
    const int m = cg.graph.vertex_count();
    std::vector<char> alive(m, 1);
    std::vector<int> conflicts(m, 0);
    for (int i = 0; i < m; ++i) {
        conflicts[i] = cg.graph.degree(i);
    }
    int remaining = m;
    EdgeList matching;
    while (remaining > 0) {
        int pick = -1;
        for (int i = 0; i < m; ++i) {
            if (alive[i] && (pick < 0 || conflicts[i] < conflicts[pick])) {
                pick = i;
            }
        }
        matching.push_back(cg.edge_of_vertex[pick]);
        // Drop the pick and everything conflicting with it.
        std::vector<int> dropped;
        dropped.push_back(pick);
        for (VertexId w : cg.graph.neighbors(pick)) {
            if (alive[w]) {
                dropped.push_back(w);
            }
        }
        for (int v : dropped) {
            alive[v] = 0;
            --remaining;
            for (VertexId w : cg.graph.neighbors(v)) {
                if (alive[w]) {
                    --conflicts[w];
                }
            }
        }
    }
    std::sort(matching.begin(), matching.end());
    return matching;
}

}  // namespace

bool min_conflict_feasible(const Graph& g) {
    return conflict_graph_cost_estimate(g) <= kMinConflictCap;
}

EdgeList greedy_induced_matching(const Graph& g, GreedyPolicy policy) {
    if (policy == GreedyPolicy::FirstEdge) {
        return greedy_first_edge(g);
    }
    return greedy_min_conflict(g);
}

}  // namespace indmatch
