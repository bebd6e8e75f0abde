#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indmatch/graph.hpp"
#include "indmatch/rational.hpp"

namespace indmatch {

// Per-vertex potential f(v) = sum of 1/d(w) over neighbors w whose
// degree differs from delta, as exact rationals. delta is frozen to the
// original input's maximum degree for a whole run.
struct PotentialTable {
    std::vector<Rational> f;
    int delta = 0;
};

PotentialTable potential(const Graph& g, int delta);

// Neighbor counts of v by degree class: exactly 1; in [2, delta/8];
// in (delta/8, delta); exactly delta.
struct NeighborhoodProfile {
    int n1 = 0;
    int ns = 0;
    int nl = 0;
    int nd = 0;
};

NeighborhoodProfile neighborhood_profile(const Graph& g, VertexId v, int delta);

// Attaches delta - d(v) new pendants to every vertex v that has a
// degree-1 neighbor and degree below delta, so that afterwards every
// vertex with a degree-1 neighbor has degree exactly delta.
// Qualification is evaluated against the input snapshot. Requires
// delta >= max_degree(g).
struct PadResult {
    Graph graph;
    // (pendant id in the padded graph, anchor id) in creation order.
    std::vector<std::pair<VertexId, VertexId>> pendant_anchor;
};

PadResult pad_pendant_holders(const Graph& g, int delta);

enum class CaseLabel {
    Claim1,             // light edge: d(u)+d(v) <= delta/4
    Claim2,             // hub with > (3/4)delta neighbors of degree <= 9
    Case1Deg1Neighbor,  // argmax-f vertex with a degree-1 neighbor
    Case2MinDegree,     // argmax-f vertex, minimum-degree neighbor
    FallbackScan,       // footprint-minimizing full edge scan
};

std::string to_string(CaseLabel label);

// S = N[u] ∪ N[v] together with the vertices isolated by removing S.
struct Footprint {
    VertexSet s;
    VertexSet isolated;
    long long size() const {
        return static_cast<long long>(s.size()) + static_cast<long long>(isolated.size());
    }
};

Footprint step_footprint(const Graph& g, VertexId u, VertexId v);

struct EdgeChoice {
    Edge edge;  // role order: (u, v) with v the selected center where one exists
    CaseLabel label = CaseLabel::FallbackScan;
    Footprint footprint;
};

// Deterministic selection cascade over a padded, isolated-free graph
// with at least one edge. Stages that certify against B(delta) win;
// the fallback scan always returns something.
EdgeChoice select_edge(const Graph& g, int delta, const PotentialTable& pt);

// One deletion step of a run. Vertex ids are global: original input ids
// for input vertices, then synthetic pendants in creation order.
struct StepRecord {
    Edge edge;  // role order as selected
    CaseLabel label = CaseLabel::FallbackScan;
    VertexSet s;
    VertexSet isolated;
    long long footprint = 0;
    bool certified = false;  // footprint <= B(delta of the original graph)
    Rational f_u;
    Rational f_v;
};

struct RunConfig {
    int delta0 = 1000;  // bound is claimed when max degree reaches this
};

struct RunTrace {
    long long n_input = 0;
    long long n_stripped = 0;       // input minus isolated vertices
    long long n_working_total = 0;  // stripped input plus synthetic pendants
    int delta = 0;
    long long bound_b = 0;
    long long padding_added = 0;
    int delta0 = 1000;
    bool bound_claimed = false;  // delta >= delta0
    bool all_certified = true;
    long long guarantee = 0;  // ceil(n_stripped / B), 0 when edgeless
    double max_potential_ratio = 0.0;  // observed max f(v)/delta, diagnostic only
    std::vector<StepRecord> steps;
};

struct RunResult {
    EdgeList matching;  // original vertex ids, lexicographically sorted
    RunTrace trace;
};

// The certified delete-and-recurse loop: strip isolated vertices, pad,
// recompute potentials, select an edge, remove its footprint, repeat.
// Chosen edges that touch a synthetic pendant are exchanged for an
// original neighbor of the anchor before the matching is returned, so
// the result is an induced matching of the input graph itself.
RunResult constructive_run(const Graph& g, RunConfig config = {});

}  // namespace indmatch
