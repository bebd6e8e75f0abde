#include "indmatch/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "indmatch/matching.hpp"

namespace indmatch {

namespace {

// Materializing the conflict graph beyond this adjacency estimate is
// pointless for an exact search; degrade to a greedy lower bound.
constexpr long long kConflictMaterializeCap = 200'000'000;

class BitMisSolver {
public:
    BitMisSolver(const Graph& cg, long long budget)
        : n_(cg.vertex_count()),
          words_((n_ + 63) / 64),
          rows_(static_cast<size_t>(n_) * words_, 0),
          budget_(budget) {
        for (VertexId v = 0; v < n_; ++v) {
            for (VertexId w : cg.neighbors(v)) {
                rows_[static_cast<size_t>(v) * words_ + w / 64] |= 1ULL << (w % 64);
            }
        }
    }

    void solve() {
        std::vector<uint64_t> all(words_, 0);
        for (int v = 0; v < n_; ++v) {
            all[v / 64] |= 1ULL << (v % 64);
        }
        recurse(all);
    }

    const std::vector<int>& best() const { return best_; }
    long long nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    const uint64_t* row(int v) const {
        return rows_.data() + static_cast<size_t>(v) * words_;
    }

    static int popcount(const uint64_t* a, int words) {
        int c = 0;
        for (int i = 0; i < words; ++i) {
            c += std::popcount(a[i]);
        }
        return c;
    }

    int residual_degree(int v, const std::vector<uint64_t>& p) const {
        const uint64_t* r = row(v);
        int c = 0;
        for (int i = 0; i < words_; ++i) {
            c += std::popcount(r[i] & p[i]);
        }
        return c;
    }

    // Greedy clique cover of the candidate set, ascending vertex order;
    // an independent set takes at most one vertex per clique.
    int clique_cover_bound(const std::vector<uint64_t>& p) const {
        std::vector<std::vector<uint64_t>> cliques;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = p[w];
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                bool placed = false;
                for (auto& members : cliques) {
                    bool adjacent_to_all = true;
                    const uint64_t* r = row(v);
                    for (int i = 0; i < words_; ++i) {
                        if (members[i] & ~r[i]) {
                            adjacent_to_all = false;
                            break;
                        }
                    }
                    if (adjacent_to_all) {
                        members[v / 64] |= 1ULL << (v % 64);
                        placed = true;
                        break;
                    }
                }
                if (!placed) {
                    cliques.emplace_back(words_, 0);
                    cliques.back()[v / 64] |= 1ULL << (v % 64);
                }
            }
        }
        return static_cast<int>(cliques.size());
    }

    void recurse(std::vector<uint64_t> p) {
        ++nodes_;
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return;
        }
        // Absorb candidates with no residual conflicts; they always join.
        const size_t absorbed_mark = chosen_.size();
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = p[w];
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (residual_degree(v, p) == 0) {
                    chosen_.push_back(v);
                    p[w] &= ~(1ULL << (v % 64));
                }
            }
        }
        const int remaining = popcount(p.data(), words_);
        if (remaining == 0) {
            if (chosen_.size() > best_.size()) {
                best_ = chosen_;
            }
            chosen_.resize(absorbed_mark);
            return;
        }
        if (chosen_.size() + clique_cover_bound(p) <= best_.size()) {
            chosen_.resize(absorbed_mark);
            return;
        }
        // Branch on the max-degree residual vertex, lowest id on ties.
        int branch = -1;
        int branch_deg = -1;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = p[w];
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const int d = residual_degree(v, p);
                if (d > branch_deg) {
                    branch_deg = d;
                    branch = v;
                }
            }
        }
        // Include branch first: tends to find witnesses early.
        std::vector<uint64_t> included(words_);
        const uint64_t* r = row(branch);
        for (int i = 0; i < words_; ++i) {
            included[i] = p[i] & ~r[i];
        }
        included[branch / 64] &= ~(1ULL << (branch % 64));
        chosen_.push_back(branch);
        recurse(std::move(included));
        chosen_.pop_back();
        if (!exhausted_) {
            p[branch / 64] &= ~(1ULL << (branch % 64));
            recurse(std::move(p));
        }
        chosen_.resize(absorbed_mark);
    }

    int n_;
    int words_;
    std::vector<uint64_t> rows_;
    long long budget_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> chosen_;
    std::vector<int> best_;
};

// Maximal induced matching by ascending edge scan; cheap valid witness
// for inputs too large to materialize the conflict graph.
EdgeList greedy_fallback_witness(const Graph& g) {
    EdgeList matching;
    std::vector<char> blocked(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        if (blocked[e.u] || blocked[e.v]) {
            continue;
        }
        matching.push_back(e);
        for (VertexId x : {e.u, e.v}) {
            blocked[x] = 1;
            for (VertexId w : g.neighbors(x)) {
                blocked[w] = 1;
            }
        }
    }
    return matching;
}

}  // namespace

ExactResult nu_s_exact(const Graph& g, long long budget) {
    ExactResult result;
    if (g.edge_count() == 0) {
        return result;
    }
    if (conflict_graph_cost_estimate(g) > kConflictMaterializeCap) {
        result.witness = greedy_fallback_witness(g);
        result.value = static_cast<int>(result.witness.size());
        result.status = SolveStatus::BudgetExhausted;
        return result;
    }
    const ConflictGraph cg = conflict_graph(g);
    BitMisSolver solver(cg.graph, budget);
    solver.solve();
    for (int v : solver.best()) {
        result.witness.push_back(cg.edge_of_vertex[v]);
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.value = static_cast<int>(result.witness.size());
    result.nodes_explored = solver.nodes();
    result.status =
        solver.exhausted() ? SolveStatus::BudgetExhausted : SolveStatus::Exact;
    return result;
}

int nu_s_bruteforce(const Graph& g) {
    const EdgeList edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > kBruteforceEdgeCap) {
        throw std::invalid_argument("nu_s_bruteforce: more than 20 edges");
    }
    // Pairwise conflicts straight from the induced-matching definition.
    std::vector<uint32_t> conflict(m, 0);
    for (int i = 0; i < m; ++i) {
        conflict[i] |= 1u << i;
        for (int j = i + 1; j < m; ++j) {
            const Edge a = edges[i];
            const Edge b = edges[j];
            bool clash = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (!clash) {
                for (VertexId x : {a.u, a.v}) {
                    for (VertexId y : {b.u, b.v}) {
                        if (g.has_edge(x, y)) {
                            clash = true;
                        }
                    }
                }
            }
            if (clash) {
                conflict[i] |= 1u << j;
                conflict[j] |= 1u << i;
            }
        }
    }
    int best = 0;
    for (uint32_t subset = 0; subset < (1u << m); ++subset) {
        if (std::popcount(subset) <= best) {
            continue;
        }
        bool valid = true;
        uint32_t bits = subset;
        while (bits) {
            const int i = std::countr_zero(bits);
            bits &= bits - 1;
            if ((subset & conflict[i]) != (1u << i)) {
                valid = false;
                break;
            }
        }
        if (valid) {
            best = std::popcount(subset);
        }
    }
    return best;
}

}  // namespace indmatch
