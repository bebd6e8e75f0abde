#pragma once

#include <optional>
#include <string>

#include "indmatch/graph.hpp"

namespace indmatch {

// An induced matching is a set of edges that pairwise share no endpoint
// and are joined by no edge of the graph. EdgeList carries the claim;
// find_matching_violation checks it.
struct MatchingViolation {
    enum class Kind { NotAnEdge, SharedEndpoint, JoiningEdge };
    Kind kind;
    Edge first;
    Edge second;  // unused for NotAnEdge
    Edge joiner;  // the graph edge joining first and second, for JoiningEdge

    std::string describe() const;
};

// First violation in lexicographic scan order, or nullopt if the edge
// set is a valid induced matching.
std::optional<MatchingViolation> find_matching_violation(const Graph& g,
                                                         const EdgeList& m);
bool is_induced_matching(const Graph& g, const EdgeList& m);

// All edges in distance at most 1 from e, including e itself.
// Throws if e is not an edge of g.
EdgeList conflict_edges(const Graph& g, Edge e);

// Square of the line graph: one vertex per edge of g (lexicographic
// order), adjacent iff the edges cannot coexist in an induced matching.
struct ConflictGraph {
    Graph graph;
    EdgeList edge_of_vertex;
};

ConflictGraph conflict_graph(const Graph& g);

// Adjacency-list size of conflict_graph(g) without materializing it;
// used to gate solvers that need the explicit conflict structure.
long long conflict_graph_cost_estimate(const Graph& g);

}  // namespace indmatch
