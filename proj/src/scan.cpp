#include "indmatch/scan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "indmatch/generators.hpp"

namespace indmatch {

namespace {

// Cheap isomorphism invariant: degrees, per-vertex neighbor-degree
// profiles and triangle counts, all order-normalized. Collisions are
// resolved by is_isomorphic_small.
std::string invariant_key(int n, const std::vector<uint8_t>& adj) {
    std::string key;
    key.push_back(static_cast<char>(n));
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) {
        degree[v] = std::popcount(static_cast<unsigned>(adj[v]));
    }
    std::vector<std::string> profiles(n);
    for (int v = 0; v < n; ++v) {
        std::string p;
        p.push_back(static_cast<char>(degree[v]));
        std::string neigh;
        int triangles = 0;
        for (int w = 0; w < n; ++w) {
            if (adj[v] & (1u << w)) {
                neigh.push_back(static_cast<char>(degree[w]));
                triangles += std::popcount(static_cast<unsigned>(adj[v] & adj[w]));
            }
        }
        std::sort(neigh.begin(), neigh.end());
        p += neigh;
        p.push_back(static_cast<char>(triangles / 2));
        profiles[v] = std::move(p);
    }
    std::sort(profiles.begin(), profiles.end());
    for (const auto& p : profiles) {
        key += p;
        key.push_back('|');
    }
    return key;
}

bool connected_mask(int n, const std::vector<uint8_t>& adj) {
    if (n == 0) {
        return false;
    }
    unsigned seen = 1;
    unsigned frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v) {
            if (frontier & (1u << v)) {
                next |= adj[v];
            }
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                      uint32_t mask) {
    EdgeList edges;
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) {
            edges.push_back(Edge{pairs[k].first, pairs[k].second});
        }
    }
    return Graph(n, edges);
}

void record_outcome(ScanReport& report, const Graph& g, ComponentCheck check) {
    switch (check.status) {
        case ConjectureStatus::Holds:
            ++report.holds;
            break;
        case ConjectureStatus::Inconclusive:
            ++report.inconclusive;
            break;
        case ConjectureStatus::ExceptionC5Sq:
        case ConjectureStatus::ExceptionK33Plus:
            report.exceptions.push_back(ScanFinding{g, std::move(check)});
            break;
        case ConjectureStatus::Violated:
            report.violators.push_back(ScanFinding{g, std::move(check)});
            break;
        case ConjectureStatus::NotApplicable:
            break;
    }
}

}  // namespace

ScanReport run_exhaustive_scan(int max_n, long long budget) {
    if (max_n < 1 || max_n > kExhaustiveScanCap) {
        throw std::invalid_argument(
            "run_exhaustive_scan: max_n must be in [1, 7]; use the randomized "
            "mode beyond that");
    }
    ScanReport report;
    report.exhaustive = true;
    report.max_n = max_n;
    report.budget = budget;

    for (int n = 4; n <= max_n; ++n) {  // max degree >= 3 needs 4 vertices
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                pairs.emplace_back(i, j);
            }
        }
        std::map<std::string, std::vector<size_t>> buckets;
        std::vector<Graph> reps;
        std::vector<uint8_t> adj(n);

        const uint32_t masks = 1u << pairs.size();
        for (uint32_t mask = 0; mask < masks; ++mask) {
            std::fill(adj.begin(), adj.end(), 0);
            for (size_t k = 0; k < pairs.size(); ++k) {
                if (mask & (1u << k)) {
                    adj[pairs[k].first] |= 1u << pairs[k].second;
                    adj[pairs[k].second] |= 1u << pairs[k].first;
                }
            }
            int max_deg = 0;
            for (int v = 0; v < n; ++v) {
                max_deg = std::max(max_deg,
                                   std::popcount(static_cast<unsigned>(adj[v])));
            }
            if (max_deg < 3 || !connected_mask(n, adj)) {
                continue;
            }
            const std::string key = invariant_key(n, adj);
            auto& bucket = buckets[key];
            Graph candidate = graph_from_mask(n, pairs, mask);
            bool known = false;
            for (size_t rep : bucket) {
                if (is_isomorphic_small(candidate, reps[rep])) {
                    known = true;
                    break;
                }
            }
            if (known) {
                continue;
            }
            bucket.push_back(reps.size());
            reps.push_back(std::move(candidate));
        }

        report.checked_per_n[n] = static_cast<long long>(reps.size());
        report.checked += static_cast<long long>(reps.size());
        for (const Graph& g : reps) {
            auto checks = conjecture_check(g, budget);
            for (ComponentCheck& check : checks) {
                record_outcome(report, g, std::move(check));
            }
        }
    }
    return report;
}

ScanReport run_random_scan(long long trials, int max_n, uint64_t seed,
                           long long budget) {
    if (max_n < 4) {
        throw std::invalid_argument("run_random_scan: max_n must be at least 4");
    }
    if (trials < 1) {
        throw std::invalid_argument("run_random_scan: need at least one trial");
    }
    ScanReport report;
    report.exhaustive = false;
    report.max_n = max_n;
    report.budget = budget;
    report.seed = seed;
    report.trials = trials;

    std::mt19937_64 rng(seed);
    for (long long t = 0; t < trials; ++t) {
        const int n = 4 + static_cast<int>(rng() % static_cast<uint64_t>(max_n - 3));
        // Density spread from near-tree to dense.
        const double p_values[] = {0.15, 0.25, 0.4, 0.6, 0.8};
        const double p = p_values[rng() % 5];
        const Graph g = random_graph(n, p, rng());
        auto checks = conjecture_check(g, budget);
        for (ComponentCheck& check : checks) {
            if (check.status == ConjectureStatus::NotApplicable) {
                continue;
            }
            // Re-anchor the finding on the component graph itself.
            VertexSet others;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (!std::binary_search(check.component.begin(),
                                        check.component.end(), v)) {
                    others.push_back(v);
                }
            }
            const Removal sub = remove_vertices_mapped(g, others);
            for (Edge& e : check.nu.witness) {
                e = Edge{sub.new_of_old[e.u], sub.new_of_old[e.v]}.normalized();
            }
            std::sort(check.nu.witness.begin(), check.nu.witness.end());
            check.component.clear();
            for (VertexId v = 0; v < sub.graph.vertex_count(); ++v) {
                check.component.push_back(v);
            }
            ++report.checked;
            ++report.checked_per_n[sub.graph.vertex_count()];
            record_outcome(report, sub.graph, std::move(check));
        }
    }
    return report;
}

}  // namespace indmatch
