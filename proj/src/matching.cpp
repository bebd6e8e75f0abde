#include "indmatch/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace indmatch {

namespace {

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::string MatchingViolation::describe() const {
    switch (kind) {
        case Kind::NotAnEdge:
            return "pair " + edge_str(first) + " is not an edge of the graph";
        case Kind::SharedEndpoint:
            return "edges " + edge_str(first) + " and " + edge_str(second) +
                   " share an endpoint";
        case Kind::JoiningEdge:
            return "edge " + edge_str(joiner) + " joins " + edge_str(first) +
                   " and " + edge_str(second);
    }
    return "unknown violation";
}

std::optional<MatchingViolation> find_matching_violation(const Graph& g,
                                                         const EdgeList& m) {
    EdgeList edges;
    edges.reserve(m.size());
    for (const Edge& e : m) {
        edges.push_back(e.normalized());
    }
    std::sort(edges.begin(), edges.end());

    for (const Edge& e : edges) {
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v)) {
            return MatchingViolation{MatchingViolation::Kind::NotAnEdge, e, {}, {}};
        }
    }
    // Endpoint ownership makes the pair scan linear in the neighborhood
    // sizes. Violations are reported for the lexicographically first
    // offending pair: smallest second edge, then smallest first edge,
    // shared endpoints before joining edges.
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t j = 0; j < edges.size(); ++j) {
        const Edge b = edges[j];
        int shared_i = -1;
        for (VertexId x : {b.u, b.v}) {
            if (owner[x] >= 0 && (shared_i < 0 || owner[x] < shared_i)) {
                shared_i = owner[x];
            }
        }
        int join_i = -1;
        Edge joiner;
        for (VertexId x : {b.u, b.v}) {
            for (VertexId w : g.neighbors(x)) {
                const int i = owner[w];
                if (i >= 0 && static_cast<size_t>(i) != j &&
                    (join_i < 0 || i < join_i)) {
                    join_i = i;
                    joiner = Edge{x, w}.normalized();
                }
            }
        }
        if (shared_i >= 0 && (join_i < 0 || shared_i <= join_i)) {
            return MatchingViolation{MatchingViolation::Kind::SharedEndpoint,
                                     edges[shared_i], b, {}};
        }
        if (join_i >= 0) {
            return MatchingViolation{MatchingViolation::Kind::JoiningEdge,
                                     edges[join_i], b, joiner};
        }
        owner[b.u] = static_cast<int>(j);
        owner[b.v] = static_cast<int>(j);
    }
    return std::nullopt;
}

bool is_induced_matching(const Graph& g, const EdgeList& m) {
    return !find_matching_violation(g, m).has_value();
}

EdgeList conflict_edges(const Graph& g, Edge e) {
    e = e.normalized();
    const VertexSet s = closed_union(g, e.u, e.v);  // throws on non-edge
    EdgeList out;
    for (VertexId x : s) {
        for (VertexId w : g.neighbors(x)) {
            out.push_back(Edge{x, w}.normalized());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ConflictGraph conflict_graph(const Graph& g) {
    ConflictGraph cg;
    cg.edge_of_vertex = g.edges();
    const EdgeList& edges = cg.edge_of_vertex;
    const int m = static_cast<int>(edges.size());

    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        incident[edges[i].u].push_back(i);
        incident[edges[i].v].push_back(i);
    }

    EdgeList pairs;
    // Edges sharing an endpoint form a clique on each incident list.
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        const auto& inc = incident[x];
        for (size_t i = 0; i < inc.size(); ++i) {
            for (size_t j = i + 1; j < inc.size(); ++j) {
                pairs.push_back(Edge{inc[i], inc[j]}.normalized());
            }
        }
    }
    // An edge xy joins every edge at x with every edge at y.
    for (const Edge& e : edges) {
        for (int a : incident[e.u]) {
            for (int b : incident[e.v]) {
                if (a != b) {
                    pairs.push_back(Edge{a, b}.normalized());
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    cg.graph = Graph(m, pairs);
    return cg;
}

long long conflict_graph_cost_estimate(const Graph& g) {
    long long cost = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const long long d = g.degree(v);
        cost += d * d;
    }
    for (const Edge& e : g.edges()) {
        cost += static_cast<long long>(g.degree(e.u)) * g.degree(e.v);
    }
    return cost;
}

}  // namespace indmatch
