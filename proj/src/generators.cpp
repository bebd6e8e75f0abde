#include "indmatch/generators.hpp"

#include <random>
#include <stdexcept>

namespace indmatch {

namespace {

// Unbiased bounded draw; hand-rolled so generated graphs are identical
// across standard library implementations.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph clique_with_pendants(int clique_size, int pendants_each) {
    EdgeList edges;
    for (int i = 0; i < clique_size; ++i) {
        for (int j = i + 1; j < clique_size; ++j) {
            edges.push_back(Edge{i, j});
        }
    }
    int next = clique_size;
    for (int i = 0; i < clique_size; ++i) {
        for (int k = 0; k < pendants_each; ++k) {
            edges.push_back(Edge{i, next++});
        }
    }
    return Graph(next, edges);
}

}  // namespace

Graph sharpness_h1(int delta) {
    if (delta < 3) {
        throw std::invalid_argument("sharpness_h1: delta must be at least 3");
    }
    return clique_with_pendants((delta + 1) / 2 + 1, delta / 2);
}

Graph sharpness_h2(int delta) {
    if (delta < 3) {
        throw std::invalid_argument("sharpness_h2: delta must be at least 3");
    }
    return clique_with_pendants(delta / 2 + 1, (delta + 1) / 2);
}

Graph c5_blowup(const std::array<int, 5>& orders) {
    int offsets[6];
    offsets[0] = 0;
    for (int i = 0; i < 5; ++i) {
        if (orders[i] < 1) {
            throw std::invalid_argument("c5_blowup: class orders must be positive");
        }
        offsets[i + 1] = offsets[i] + orders[i];
    }
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        for (int a = offsets[i]; a < offsets[i + 1]; ++a) {
            for (int b = offsets[j]; b < offsets[j + 1]; ++b) {
                edges.push_back(Edge{a, b}.normalized());
            }
        }
    }
    return Graph(offsets[5], edges);
}

Graph attach_pendants(const Graph& base, int k) {
    if (k < 1) {
        throw std::invalid_argument("attach_pendants: k must be at least 1");
    }
    EdgeList edges = base.edges();
    int next = base.vertex_count();
    for (VertexId v = 0; v < base.vertex_count(); ++v) {
        for (int i = 0; i < k; ++i) {
            edges.push_back(Edge{v, next++});
        }
    }
    return Graph(next, edges);
}

Graph random_graph(int n, double edge_probability, uint64_t seed) {
    if (n < 0 || edge_probability < 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("random_graph: bad parameters");
    }
    std::mt19937_64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (uniform_unit(rng) < edge_probability) {
                edges.push_back(Edge{u, v});
            }
        }
    }
    return Graph(n, edges);
}

Graph random_regular(int n, int d, uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1) || (static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("random_regular: infeasible parameters");
    }
    std::mt19937_64 rng(seed);
    const size_t points = static_cast<size_t>(n) * d;
    std::vector<int> stubs(points);
    for (size_t i = 0; i < points; ++i) {
        stubs[i] = static_cast<int>(i / d);
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (size_t i = points; i > 1; --i) {
            std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        }
        EdgeList edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < points; i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            edges.push_back(Edge{stubs[i], stubs[i + 1]}.normalized());
        }
        if (!ok) {
            continue;
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            continue;
        }
        return Graph(n, edges);
    }
    throw std::runtime_error("random_regular: retry cap of 1000 exceeded");
}

Graph path_graph(int n) {
    if (n < 0) {
        throw std::invalid_argument("path_graph: negative order");
    }
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back(Edge{i, i + 1});
    }
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    }
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back(Edge{i, (i + 1) % n}.normalized());
    }
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) {
        throw std::invalid_argument("star_graph: negative leaf count");
    }
    EdgeList edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.push_back(Edge{0, i});
    }
    return Graph(leaves + 1, edges);
}

Graph complete_graph(int n) {
    if (n < 0) {
        throw std::invalid_argument("complete_graph: negative order");
    }
    EdgeList edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back(Edge{i, j});
        }
    }
    return Graph(n, edges);
}

}  // namespace indmatch
