#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indmatch {

using VertexId = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct Edge {
    VertexId u{};
    VertexId v{};

    // Canonical orientation: smaller endpoint first.
    Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// adjacency lists. All mutating operations return new graphs.
class Graph {
public:
    Graph() = default;
    Graph(int n, const EdgeList& edges);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }
    int max_degree() const { return max_degree_; }

    int degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    bool has_vertex(VertexId v) const {
        return v >= 0 && v < vertex_count();
    }

    // Edges in lexicographic order, each with u < v.
    EdgeList edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    long long m_ = 0;
    int max_degree_ = 0;
};

// S = N[u] ∪ N[v] for an edge uv; throws if uv is not an edge.
VertexSet closed_union(const Graph& g, VertexId u, VertexId v);

// Vertices outside s whose entire neighborhood lies in s.
VertexSet isolated_after_removal(const Graph& g, const VertexSet& s);

struct Removal {
    Graph graph;
    std::vector<int> new_of_old;  // -1 for removed vertices
    std::vector<int> old_of_new;
};

Removal remove_vertices_mapped(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& s);

Removal strip_isolated_mapped(const Graph& g);
Graph strip_isolated(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

// Exact isomorphism test by degree-sequence pruning plus permutation
// search. Intended for exception detection and enumeration dedup only;
// refuses graphs with more than 12 vertices.
inline constexpr int kIsomorphismCap = 12;
bool is_isomorphic_small(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int k);

}  // namespace indmatch
