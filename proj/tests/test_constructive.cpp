#include <doctest.h>

#include <random>
#include <set>

#include "indmatch/bounds.hpp"
#include "indmatch/constructive.hpp"
#include "indmatch/exact.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/matching.hpp"
#include "test_helpers.hpp"

using namespace indmatch;
using namespace indmatch::testing;

namespace {

void check_run_contract(const Graph& g, const RunResult& result) {
    // The matching is valid on the original graph, one edge per step.
    CHECK(is_induced_matching(g, result.matching));
    CHECK(result.matching.size() == result.trace.steps.size());

    // No matching edge touches a synthetic vertex.
    for (const Edge& e : result.matching) {
        CHECK(e.u < g.vertex_count());
        CHECK(e.v < g.vertex_count());
    }

    // The S ∪ I footprints partition the padded working universe.
    std::set<VertexId> covered;
    long long total = 0;
    for (const StepRecord& step : result.trace.steps) {
        CHECK(step.footprint ==
              static_cast<long long>(step.s.size() + step.isolated.size()));
        total += step.footprint;
        for (VertexId v : step.s) {
            CHECK(covered.insert(v).second);
        }
        for (VertexId v : step.isolated) {
            CHECK(covered.insert(v).second);
        }
    }
    CHECK(total == result.trace.n_working_total);
    CHECK(result.trace.n_working_total ==
          result.trace.n_stripped + result.trace.padding_added);

    if (result.trace.bound_claimed && result.trace.all_certified) {
        CHECK(static_cast<long long>(result.matching.size()) >=
              result.trace.guarantee);
    }
}

}  // namespace

TEST_SUITE_BEGIN("constructive");

TEST_CASE("potential on stars, sharp graphs, and regular graphs") {
    const Graph star = star_graph(6);
    const PotentialTable pt = potential(star, 6);
    CHECK(pt.f[0] == Rational(6));
    for (VertexId leaf = 1; leaf <= 6; ++leaf) {
        CHECK(pt.f[leaf] == Rational(0));
    }

    const Graph h1 = sharpness_h1(9);  // clique of 6, 4 pendants each
    const PotentialTable hpt = potential(h1, 9);
    CHECK(hpt.f[0] == Rational(4));
    CHECK(hpt.f[6] == Rational(0));  // pendant: its neighbor has degree 9

    const Graph k5 = complete_graph(5);
    const PotentialTable kpt = potential(k5, 4);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(kpt.f[v] == Rational(0));
    }

    CHECK_THROWS_AS(potential(star, 2), std::invalid_argument);
}

TEST_CASE("potential sums exact fractions") {
    // 0 is adjacent to a degree-1, a degree-2, and a degree-3 vertex;
    // delta is 4 so nothing is excluded: f(0) = 1 + 1/2 + 1/3.
    const Graph g(6, EdgeList{{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}, {3, 5}});
    const PotentialTable pt = potential(g, 4);
    CHECK(pt.f[0] == Rational(11, 6));
    CHECK(rational_to_string(pt.f[0]) == "11/6");
}

TEST_CASE("potential range invariant") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_small(rng, 20, 0.3);
        const int delta = g.max_degree();
        const PotentialTable pt = potential(g, delta);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(pt.f[v] >= 0);
            CHECK(pt.f[v] <= Rational(g.degree(v)));
            bool all_full = true;
            for (VertexId w : g.neighbors(v)) {
                all_full = all_full && g.degree(w) == delta;
            }
            CHECK((pt.f[v] == 0) == all_full);
        }
    }
}

TEST_CASE("neighborhood_profile") {
    const Graph h1 = sharpness_h1(16);
    const NeighborhoodProfile core = neighborhood_profile(h1, 0, 16);
    CHECK(core.n1 == 8);
    CHECK(core.ns == 0);
    CHECK(core.nl == 0);
    CHECK(core.nd == 8);

    const NeighborhoodProfile center = neighborhood_profile(star_graph(7), 0, 7);
    CHECK(center.n1 == 7);
    CHECK(center.ns + center.nl + center.nd == 0);

    const NeighborhoodProfile clique = neighborhood_profile(complete_graph(6), 0, 5);
    CHECK(clique.nd == 5);
    CHECK(clique.n1 + clique.ns + clique.nl == 0);

    // Counts always add up to the degree.
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_small(rng, 18, 0.3);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto p = neighborhood_profile(g, v, g.max_degree());
            CHECK(p.n1 + p.ns + p.nl + p.nd == g.degree(v));
        }
    }
}

TEST_CASE("pad_pendant_holders") {
    // Sharp graphs are already saturated.
    const PadResult h1 = pad_pendant_holders(sharpness_h1(6), 6);
    CHECK(h1.pendant_anchor.empty());
    CHECK(h1.graph == sharpness_h1(6));

    // A K2 inside a delta=5 graph: both endpoints reach degree 5.
    const Graph mixed = disjoint_union(k2(), star_graph(5));
    const PadResult padded = pad_pendant_holders(mixed, 5);
    CHECK(padded.pendant_anchor.size() == 8);
    CHECK(padded.graph.degree(0) == 5);
    CHECK(padded.graph.degree(1) == 5);
    CHECK(padded.graph.max_degree() == 5);
    for (auto [pendant, anchor] : padded.pendant_anchor) {
        CHECK(pendant >= mixed.vertex_count());
        CHECK((anchor == 0 || anchor == 1));
        CHECK(padded.graph.degree(pendant) == 1);
    }

    // No degree-1 vertices: nothing to do.
    CHECK(pad_pendant_holders(cycle_graph(6), 5).pendant_anchor.empty());

    // After padding, every vertex with a degree-1 neighbor is full.
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_small(rng, 16, 0.2);
        g = strip_isolated(g);
        if (g.max_degree() == 0) {
            continue;
        }
        const int delta = g.max_degree();
        const Graph p = pad_pendant_holders(g, delta).graph;
        CHECK(p.max_degree() == delta);
        for (VertexId v = 0; v < p.vertex_count(); ++v) {
            bool pendant_neighbor = false;
            for (VertexId w : p.neighbors(v)) {
                pendant_neighbor = pendant_neighbor || p.degree(w) == 1;
            }
            if (pendant_neighbor) {
                CHECK(p.degree(v) == delta);
            }
        }
    }
}

TEST_CASE("select_edge on the sharp graph at delta 1000") {
    const Graph h1 = sharpness_h1(1000);
    const PotentialTable pt = potential(h1, 1000);
    CHECK(pt.f[0] == Rational(500));
    const EdgeChoice choice = select_edge(h1, 1000, pt);
    CHECK(choice.label == CaseLabel::Case1Deg1Neighbor);
    CHECK(choice.edge == Edge{501, 0});  // first pendant of core 0
    CHECK(choice.footprint.size() == 251001);
    CHECK(choice.footprint.size() == bound_B(1000));
}

TEST_CASE("select_edge golden cascade on P5") {
    const Graph g = p5();
    const PotentialTable pt = potential(g, 2);
    const EdgeChoice choice = select_edge(g, 2, pt);
    CHECK(choice.label == CaseLabel::Claim2);
    CHECK(choice.edge == Edge{0, 1});
    CHECK(choice.footprint.size() == 3);
}

TEST_CASE("select_edge rejects edgeless input") {
    const Graph g(3, EdgeList{});
    CHECK_THROWS_AS(select_edge(g, 1, potential(g, 1)), std::invalid_argument);
}

TEST_CASE("run on sharp graphs") {
    const RunResult r16 = constructive_run(sharpness_h1(16));
    CHECK(r16.matching.size() == 1);
    CHECK(r16.trace.steps.size() == 1);
    CHECK(r16.trace.steps[0].label == CaseLabel::Case1Deg1Neighbor);
    CHECK(r16.trace.steps[0].footprint == 81);
    CHECK(r16.trace.steps[0].certified);
    check_run_contract(sharpness_h1(16), r16);

    const RunResult r4 = constructive_run(sharpness_h1(4));
    CHECK(r4.matching.size() == 1);
    check_run_contract(sharpness_h1(4), r4);
}

TEST_CASE("run golden trace on P5") {
    const RunResult result = constructive_run(p5());
    CHECK(result.matching == EdgeList{{0, 1}, {3, 4}});
    REQUIRE(result.trace.steps.size() == 2);
    CHECK(result.trace.steps[0].label == CaseLabel::Claim2);
    CHECK(result.trace.steps[0].footprint == 3);
    CHECK(result.trace.steps[1].label == CaseLabel::Claim2);
    CHECK(result.trace.steps[1].footprint == 4);  // includes two pendants
    CHECK(result.trace.padding_added == 2);
    CHECK(result.trace.n_working_total == 7);
    CHECK_FALSE(result.trace.bound_claimed);  // delta 2 < delta0
    CHECK(static_cast<int>(result.matching.size()) == nu_s_exact(p5()).value);
    check_run_contract(p5(), result);
}

TEST_CASE("run handles empty and isolated-only graphs") {
    CHECK(constructive_run(Graph()).matching.empty());
    const RunResult iso = constructive_run(Graph(4, EdgeList{}));
    CHECK(iso.matching.empty());
    CHECK(iso.trace.n_stripped == 0);
    CHECK(iso.trace.steps.empty());
}

TEST_CASE("run is deterministic") {
    const Graph g = random_graph(60, 0.12, 321);
    const RunResult a = constructive_run(g);
    const RunResult b = constructive_run(g);
    CHECK(a.matching == b.matching);
    REQUIRE(a.trace.steps.size() == b.trace.steps.size());
    for (size_t i = 0; i < a.trace.steps.size(); ++i) {
        CHECK(a.trace.steps[i].edge == b.trace.steps[i].edge);
        CHECK(a.trace.steps[i].label == b.trace.steps[i].label);
        CHECK(a.trace.steps[i].s == b.trace.steps[i].s);
        CHECK(a.trace.steps[i].isolated == b.trace.steps[i].isolated);
        CHECK(a.trace.steps[i].f_v == b.trace.steps[i].f_v);
    }
}

TEST_CASE("run contract holds across families and random graphs") {
    check_run_contract(cycle_graph(12), constructive_run(cycle_graph(12)));
    check_run_contract(complete_graph(9), constructive_run(complete_graph(9)));
    check_run_contract(star_graph(9), constructive_run(star_graph(9)));
    const Graph k33p = c5_blowup({1, 1, 1, 2, 2});
    check_run_contract(k33p, constructive_run(k33p));
    const Graph copies = disjoint_copies(k2(), 5);
    const RunResult kr = constructive_run(copies);
    CHECK(kr.matching.size() == 5);
    check_run_contract(copies, kr);

    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_small(rng, 40, 0.15);
        check_run_contract(g, constructive_run(g));
    }
}

TEST_CASE("run matches the exact oracle on tiny instances") {
    // Not a guarantee in general; the greedy loop is only bound-tight,
    // but on tiny paths/cycles it should not fall below the oracle - 1.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_small(rng, 9, 0.3);
        if (g.edge_count() > kBruteforceEdgeCap) {
            continue;
        }
        const RunResult run = constructive_run(g);
        CHECK(static_cast<int>(run.matching.size()) <= nu_s_bruteforce(g));
        if (g.edge_count() > 0) {
            CHECK(run.matching.size() >= 1);
        }
    }
}

TEST_SUITE_END();
