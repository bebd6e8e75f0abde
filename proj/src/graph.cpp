#include "indmatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace indmatch {

namespace {

std::vector<std::vector<VertexId>> build_adjacency(int n, const EdgeList& edges) {
    if (n < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("graph: self-loop");
        }
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::invalid_argument("graph: duplicate edge");
        }
    }
    return adj;
}

}  // namespace

Graph::Graph(int n, const EdgeList& edges)
    : adj_(build_adjacency(n, edges)), m_(static_cast<long long>(edges.size())) {
    for (const auto& list : adj_) {
        max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    EdgeList el;
    el.reserve(edges.size());
    for (auto [u, v] : edges) {
        el.push_back(Edge{u, v});
    }
    *this = Graph(n, el);
}

void Graph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) {
        throw std::out_of_range("graph: unknown vertex " + std::to_string(v));
    }
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(static_cast<size_t>(m_));
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adj_[u]) {
            if (u < v) {
                out.push_back(Edge{u, v});
            }
        }
    }
    return out;
}

VertexSet closed_union(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) {
        throw std::invalid_argument("closed_union: uv is not an edge");
    }
    VertexSet s;
    s.reserve(static_cast<size_t>(g.degree(u)) + g.degree(v) + 2);
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    s.assign(nu.begin(), nu.end());
    s.insert(s.end(), nv.begin(), nv.end());
    s.push_back(u);
    s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet isolated_after_removal(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (VertexId v : s) {
        if (!g.has_vertex(v)) {
            throw std::out_of_range("isolated_after_removal: unknown vertex");
        }
        in_s[v] = 1;
    }
    VertexSet out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) {
            continue;
        }
        bool all_inside = true;
        for (VertexId w : g.neighbors(v)) {
            if (!in_s[w]) {
                all_inside = false;
                break;
            }
        }
        if (all_inside) {
            out.push_back(v);
        }
    }
    return out;
}

Removal remove_vertices_mapped(const Graph& g, const VertexSet& s) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (VertexId v : s) {
        if (!g.has_vertex(v)) {
            throw std::out_of_range("remove_vertices: unknown vertex");
        }
        removed[v] = 1;
    }
    Removal result;
    result.new_of_old.assign(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        if (!removed[v]) {
            result.new_of_old[v] = static_cast<int>(result.old_of_new.size());
            result.old_of_new.push_back(v);
        }
    }
    EdgeList edges;
    for (VertexId u = 0; u < n; ++u) {
        if (removed[u]) {
            continue;
        }
        for (VertexId v : g.neighbors(u)) {
            if (u < v && !removed[v]) {
                edges.push_back(Edge{result.new_of_old[u], result.new_of_old[v]});
            }
        }
    }
    result.graph = Graph(static_cast<int>(result.old_of_new.size()), edges);
    return result;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    return remove_vertices_mapped(g, s).graph;
}

Removal strip_isolated_mapped(const Graph& g) {
    VertexSet isolated;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            isolated.push_back(v);
        }
    }
    return remove_vertices_mapped(g, isolated);
}

Graph strip_isolated(const Graph& g) {
    return strip_isolated_mapped(g).graph;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> components;
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        VertexSet comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

namespace {

// Per-vertex refinement key: degree plus sorted neighbor degrees.
std::vector<std::vector<int>> vertex_profiles(const Graph& g) {
    std::vector<std::vector<int>> profiles(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto& p = profiles[v];
        p.push_back(g.degree(v));
        for (VertexId w : g.neighbors(v)) {
            p.push_back(g.degree(w));
        }
        std::sort(p.begin() + 1, p.end());
    }
    return profiles;
}

bool extend_mapping(const Graph& g, const Graph& h,
                    const std::vector<std::vector<int>>& pg,
                    const std::vector<std::vector<int>>& ph,
                    const std::vector<VertexId>& order, size_t pos,
                    std::vector<int>& image, std::vector<char>& used) {
    if (pos == order.size()) {
        return true;
    }
    VertexId v = order[pos];
    for (VertexId w = 0; w < h.vertex_count(); ++w) {
        if (used[w] || pg[v] != ph[w]) {
            continue;
        }
        bool consistent = true;
        for (size_t k = 0; k < pos; ++k) {
            VertexId prev = order[k];
            if (g.has_edge(v, prev) != h.has_edge(w, image[prev])) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            continue;
        }
        image[v] = w;
        used[w] = 1;
        if (extend_mapping(g, h, pg, ph, order, pos + 1, image, used)) {
            return true;
        }
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& g, const Graph& h) {
    if (g.vertex_count() > kIsomorphismCap || h.vertex_count() > kIsomorphismCap) {
        throw std::invalid_argument("is_isomorphic_small: graph exceeds 12 vertices");
    }
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
        return false;
    }
    auto pg = vertex_profiles(g);
    auto ph = vertex_profiles(h);
    auto sorted_g = pg;
    auto sorted_h = ph;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) {
        return false;
    }
    // Map high-degree vertices first; they constrain the search most.
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (g.degree(a) != g.degree(b)) {
            return g.degree(a) > g.degree(b);
        }
        return a < b;
    });
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<char> used(h.vertex_count(), 0);
    return extend_mapping(g, h, pg, ph, order, 0, image, used);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    EdgeList edges = a.edges();
    const int offset = a.vertex_count();
    for (const Edge& e : b.edges()) {
        edges.push_back(Edge{e.u + offset, e.v + offset});
    }
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

Graph disjoint_copies(const Graph& g, int k) {
    if (k < 0) {
        throw std::invalid_argument("disjoint_copies: negative count");
    }
    EdgeList edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * k);
    const EdgeList base = g.edges();
    for (int i = 0; i < k; ++i) {
        const int offset = i * g.vertex_count();
        for (const Edge& e : base) {
            edges.push_back(Edge{e.u + offset, e.v + offset});
        }
    }
    return Graph(g.vertex_count() * k, edges);
}

}  // namespace indmatch
