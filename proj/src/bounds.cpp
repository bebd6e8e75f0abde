#include "indmatch/bounds.hpp"

#include <stdexcept>

#include "indmatch/generators.hpp"

namespace indmatch {

namespace {

long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

}  // namespace

long long bound_B(int delta) {
    if (delta < 1) {
        throw std::invalid_argument("bound_B: delta must be at least 1");
    }
    const long long half_up = (delta + 1) / 2;
    const long long half_down = delta / 2;
    return (half_up + 1) * (half_down + 1);
}

long long theorem_guarantee(long long n, int delta) {
    if (n < 1) {
        throw std::invalid_argument("theorem_guarantee: n must be at least 1");
    }
    return ceil_div(n, bound_B(delta));
}

long long trivial_guarantee(long long n, int delta) {
    if (n < 1 || delta < 1) {
        throw std::invalid_argument("trivial_guarantee: need n >= 1, delta >= 1");
    }
    const long long d = delta;
    return ceil_div(n, 2 * (2 * d * d - 2 * d + 1));
}

bool helper_inequality_check(long long delta) {
    if (delta < 1) {
        throw std::invalid_argument("helper_inequality_check: delta must be at least 1");
    }
    const long long half_up = (delta + 1) / 2;
    const long long half_down = delta / 2;
    // delta^2/4 + delta + 3/4 <= B(delta), both sides times 4.
    return delta * delta + 4 * delta + 3 <= 4 * (half_up + 1) * (half_down + 1);
}

std::string to_string(ConjectureStatus status) {
    switch (status) {
        case ConjectureStatus::Holds:
            return "holds";
        case ConjectureStatus::ExceptionC5Sq:
            return "exception-C5^2";
        case ConjectureStatus::ExceptionK33Plus:
            return "exception-K33+";
        case ConjectureStatus::Violated:
            return "violated";
        case ConjectureStatus::Inconclusive:
            return "inconclusive";
        case ConjectureStatus::NotApplicable:
            return "not-applicable";
    }
    return "unknown";
}

std::vector<ComponentCheck> conjecture_check(const Graph& g, long long budget) {
    std::vector<ComponentCheck> checks;
    for (const VertexSet& comp : connected_components(g)) {
        ComponentCheck check;
        check.component = comp;
        check.n = static_cast<int>(comp.size());

        VertexSet others;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!std::binary_search(comp.begin(), comp.end(), v)) {
                others.push_back(v);
            }
        }
        const Removal sub = remove_vertices_mapped(g, others);
        check.delta = sub.graph.max_degree();
        if (check.delta < 3) {
            checks.push_back(std::move(check));
            continue;
        }
        check.guarantee = theorem_guarantee(check.n, check.delta);

        ExactResult nu = nu_s_exact(sub.graph, budget);
        for (Edge& e : nu.witness) {
            e = Edge{sub.old_of_new[e.u], sub.old_of_new[e.v]}.normalized();
        }
        std::sort(nu.witness.begin(), nu.witness.end());
        check.nu = std::move(nu);

        if (check.n == 10 && is_isomorphic_small(sub.graph, c5_blowup({2, 2, 2, 2, 2}))) {
            check.status = ConjectureStatus::ExceptionC5Sq;
        } else if (check.n == 7 &&
                   is_isomorphic_small(sub.graph, c5_blowup({1, 1, 1, 2, 2}))) {
            check.status = ConjectureStatus::ExceptionK33Plus;
        } else if (check.nu.value >= check.guarantee) {
            // A lower bound at or above the guarantee already settles it.
            check.status = ConjectureStatus::Holds;
        } else if (check.nu.status == SolveStatus::Exact) {
            check.status = ConjectureStatus::Violated;
        } else {
            check.status = ConjectureStatus::Inconclusive;
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

BoundReport make_bound_report(const Graph& g) {
    BoundReport report;
    report.n = g.vertex_count();
    long long nonisolated = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0) {
            ++nonisolated;
        }
    }
    report.n_nonisolated = nonisolated;
    report.delta = g.max_degree();
    if (report.delta >= 1 && nonisolated >= 1) {
        report.b = bound_B(report.delta);
        report.theorem_guarantee = theorem_guarantee(nonisolated, report.delta);
        report.trivial_guarantee = trivial_guarantee(nonisolated, report.delta);
    }
    return report;
}

}  // namespace indmatch
