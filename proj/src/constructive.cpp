#include "indmatch/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "indmatch/bounds.hpp"

namespace indmatch {

PotentialTable potential(const Graph& g, int delta) {
    if (delta < g.max_degree()) {
        throw std::invalid_argument("potential: delta below the graph's max degree");
    }
    PotentialTable pt;
    pt.delta = delta;
    pt.f.resize(g.vertex_count());
    // Bucket neighbors by degree so the rational work is one term per
    // distinct degree instead of one per neighbor.
    std::vector<int> count(static_cast<size_t>(delta) + 1, 0);
    std::vector<int> touched;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w : g.neighbors(v)) {
            const int d = g.degree(w);
            if (d == delta) {
                continue;
            }
            if (count[d] == 0) {
                touched.push_back(d);
            }
            ++count[d];
        }
        Rational f = 0;
        for (int d : touched) {
            f += Rational(count[d], d);
            count[d] = 0;
        }
        touched.clear();
        pt.f[v] = std::move(f);
    }
    return pt;
}

NeighborhoodProfile neighborhood_profile(const Graph& g, VertexId v, int delta) {
    NeighborhoodProfile profile;
    for (VertexId w : g.neighbors(v)) {
        const int d = g.degree(w);
        if (d == 1) {
            ++profile.n1;
        } else if (d == delta) {
            ++profile.nd;
        } else if (8 * d <= delta) {
            ++profile.ns;
        } else {
            ++profile.nl;
        }
    }
    return profile;
}

PadResult pad_pendant_holders(const Graph& g, int delta) {
    if (delta < g.max_degree()) {
        throw std::invalid_argument("pad_pendant_holders: delta below max degree");
    }
    // Qualify against the input snapshot, then attach in one sweep.
    std::vector<VertexId> holders;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= delta) {
            continue;
        }
        for (VertexId w : g.neighbors(v)) {
            if (g.degree(w) == 1) {
                holders.push_back(v);
                break;
            }
        }
    }
    PadResult result;
    EdgeList edges = g.edges();
    int next = g.vertex_count();
    for (VertexId v : holders) {
        for (int k = g.degree(v); k < delta; ++k) {
            edges.push_back(Edge{v, next});
            result.pendant_anchor.emplace_back(next, v);
            ++next;
        }
    }
    result.graph = Graph(next, edges);
    return result;
}

std::string to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Claim1:
            return "claim1";
        case CaseLabel::Claim2:
            return "claim2";
        case CaseLabel::Case1Deg1Neighbor:
            return "case1-deg1-neighbor";
        case CaseLabel::Case2MinDegree:
            return "case2-min-degree";
        case CaseLabel::FallbackScan:
            return "fallback-scan";
    }
    return "unknown";
}

Footprint step_footprint(const Graph& g, VertexId u, VertexId v) {
    Footprint fp;
    fp.s = closed_union(g, u, v);
    fp.isolated = isolated_after_removal(g, fp.s);
    return fp;
}

EdgeChoice select_edge(const Graph& g, int delta, const PotentialTable& pt) {
    if (g.edge_count() == 0) {
        throw std::invalid_argument("select_edge: graph has no edges");
    }
    if (pt.delta != delta || static_cast<int>(pt.f.size()) != g.vertex_count()) {
        throw std::invalid_argument("select_edge: potential table mismatch");
    }
    const long long b = bound_B(delta);
    const EdgeList edges = g.edges();

    // (a) light edge: d(u)+d(v) <= delta/4, first certifying edge wins.
    for (const Edge& e : edges) {
        if (4 * (static_cast<long long>(g.degree(e.u)) + g.degree(e.v)) > delta) {
            continue;
        }
        Footprint fp = step_footprint(g, e.u, e.v);
        if (fp.size() <= b) {
            return EdgeChoice{e, CaseLabel::Claim1, std::move(fp)};
        }
    }

    // (b) hub with more than (3/4)delta neighbors of degree <= 9; pair
    // it with its lowest-id small-degree neighbor.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        long long small = 0;
        for (VertexId w : g.neighbors(v)) {
            if (g.degree(w) <= 9) {
                ++small;
            }
        }
        if (4 * small <= 3 * static_cast<long long>(delta)) {
            continue;
        }
        for (VertexId w : g.neighbors(v)) {
            if (g.degree(w) <= 9) {
                Footprint fp = step_footprint(g, w, v);
                if (fp.size() <= b) {
                    return EdgeChoice{Edge{w, v}, CaseLabel::Claim2, std::move(fp)};
                }
                break;  // single candidate per cascade stage
            }
        }
        break;
    }

    // (c) vertex of maximum potential; prefer a degree-1 neighbor,
    // otherwise a minimum-degree one.
    VertexId center = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (pt.f[v] > pt.f[center]) {
            center = v;
        }
    }
    if (g.degree(center) > 0) {
        VertexId partner = -1;
        CaseLabel label = CaseLabel::Case2MinDegree;
        for (VertexId w : g.neighbors(center)) {
            if (g.degree(w) == 1) {
                partner = w;
                label = CaseLabel::Case1Deg1Neighbor;
                break;
            }
        }
        if (partner < 0) {
            int best_deg = g.vertex_count() + 1;
            for (VertexId w : g.neighbors(center)) {
                if (g.degree(w) < best_deg) {
                    best_deg = g.degree(w);
                    partner = w;
                }
            }
        }
        Footprint fp = step_footprint(g, partner, center);
        if (fp.size() <= b) {
            return EdgeChoice{Edge{partner, center}, label, std::move(fp)};
        }
    }

    // (d) fallback: minimize the footprint over all edges.
    EdgeChoice best;
    long long best_size = -1;
    for (const Edge& e : edges) {
        Footprint fp = step_footprint(g, e.u, e.v);
        if (best_size < 0 || fp.size() < best_size) {
            best_size = fp.size();
            best = EdgeChoice{e, CaseLabel::FallbackScan, std::move(fp)};
        }
    }
    return best;
}

namespace {

VertexSet globalize(const VertexSet& local, const std::vector<int>& global_of_working) {
    VertexSet out;
    out.reserve(local.size());
    for (VertexId v : local) {
        out.push_back(global_of_working[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RunResult constructive_run(const Graph& g, RunConfig config) {
    RunResult out;
    RunTrace& tr = out.trace;
    tr.n_input = g.vertex_count();
    tr.delta = g.max_degree();
    tr.delta0 = config.delta0;
    tr.bound_claimed = tr.delta >= config.delta0;
    if (tr.delta >= 1) {
        tr.bound_b = bound_B(tr.delta);
    }

    Removal stripped = strip_isolated_mapped(g);
    tr.n_stripped = stripped.graph.vertex_count();
    tr.n_working_total = tr.n_stripped;
    if (tr.n_stripped >= 1 && tr.delta >= 1) {
        tr.guarantee = theorem_guarantee(tr.n_stripped, tr.delta);
    }

    Graph working = std::move(stripped.graph);
    std::vector<int> global_of_working = std::move(stripped.old_of_new);
    int next_synthetic = g.vertex_count();
    const int n_input = g.vertex_count();

    // Removing S ∪ I never isolates a surviving vertex (a survivor with
    // all neighbors in S would be in I; one with a neighbor in I would
    // contradict I's definition), so stripping repeats are vacuous and
    // the loop runs until the working graph is empty.
    while (working.edge_count() > 0) {
        PadResult padded = pad_pendant_holders(working, tr.delta);
        const long long added = static_cast<long long>(padded.pendant_anchor.size());
        for (long long i = 0; i < added; ++i) {
            global_of_working.push_back(next_synthetic++);
        }
        tr.padding_added += added;
        tr.n_working_total += added;
        working = std::move(padded.graph);

        PotentialTable pt = potential(working, tr.delta);
        const Rational* max_f = nullptr;
        for (VertexId v = 0; v < working.vertex_count(); ++v) {
            if (max_f == nullptr || pt.f[v] > *max_f) {
                max_f = &pt.f[v];
            }
        }
        if (max_f != nullptr) {
            const double ratio = rational_to_double(*max_f) / tr.delta;
            tr.max_potential_ratio = std::max(tr.max_potential_ratio, ratio);
        }

        EdgeChoice choice = select_edge(working, tr.delta, pt);

        StepRecord rec;
        rec.edge = Edge{global_of_working[choice.edge.u],
                        global_of_working[choice.edge.v]};
        rec.label = choice.label;
        rec.s = globalize(choice.footprint.s, global_of_working);
        rec.isolated = globalize(choice.footprint.isolated, global_of_working);
        rec.footprint = choice.footprint.size();
        rec.certified = rec.footprint <= tr.bound_b;
        rec.f_u = pt.f[choice.edge.u];
        rec.f_v = pt.f[choice.edge.v];
        tr.all_certified = tr.all_certified && rec.certified;

        // Lift the chosen edge to original ids, exchanging a synthetic
        // pendant for a surrogate among the anchor's original neighbors.
        // Sound surrogates are exactly those whose other neighbors all
        // have degree 1: everything adjacent to the surrogate then dies
        // with this step's footprint, so the swapped edge cannot clash
        // with any other step. The vertex that triggered the anchor's
        // padding always qualifies, so the search cannot come up empty.
        const bool u_synth = rec.edge.u >= n_input;
        const bool v_synth = rec.edge.v >= n_input;
        if (u_synth && v_synth) {
            throw std::logic_error("constructive_run: edge between synthetic vertices");
        }
        if (u_synth || v_synth) {
            const VertexId anchor = u_synth ? choice.edge.v : choice.edge.u;
            VertexId surrogate = -1;
            for (VertexId w : working.neighbors(anchor)) {
                if (global_of_working[w] >= n_input) {
                    continue;
                }
                bool clean = true;
                for (VertexId z : working.neighbors(w)) {
                    if (z != anchor && working.degree(z) != 1) {
                        clean = false;
                        break;
                    }
                }
                if (clean) {
                    surrogate = w;
                    break;
                }
            }
            if (surrogate < 0) {
                throw std::logic_error(
                    "constructive_run: padded anchor has no exchange surrogate");
            }
            out.matching.push_back(
                Edge{global_of_working[anchor], global_of_working[surrogate]}
                    .normalized());
        } else {
            out.matching.push_back(rec.edge.normalized());
        }
        tr.steps.push_back(std::move(rec));

        VertexSet removal_set = choice.footprint.s;
        removal_set.insert(removal_set.end(), choice.footprint.isolated.begin(),
                           choice.footprint.isolated.end());
        std::sort(removal_set.begin(), removal_set.end());
        Removal next = remove_vertices_mapped(working, removal_set);
        std::vector<int> next_global(next.graph.vertex_count());
        for (int i = 0; i < next.graph.vertex_count(); ++i) {
            next_global[i] = global_of_working[next.old_of_new[i]];
        }
        working = std::move(next.graph);
        global_of_working = std::move(next_global);
    }

    std::sort(out.matching.begin(), out.matching.end());
    return out;
}

}  // namespace indmatch
