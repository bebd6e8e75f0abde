#include "indmatch/report.hpp"

#include <nlohmann/json.hpp>

#include "indmatch/edge_list.hpp"

namespace indmatch {

using nlohmann::json;

json edges_to_json(const EdgeList& edges) {
    json out = json::array();
    for (const Edge& e : edges) {
        out.push_back(json::array({e.u, e.v}));
    }
    return out;
}

json bound_report_to_json(const BoundReport& report) {
    json out;
    out["n"] = report.n;
    out["n_nonisolated"] = report.n_nonisolated;
    out["delta"] = report.delta;
    out["B"] = report.b;
    out["theorem_guarantee"] = report.theorem_guarantee;
    out["trivial_guarantee"] = report.trivial_guarantee;
    if (report.b > 0) {
        out["theorem_guarantee_exact"] =
            std::to_string(report.n_nonisolated) + "/" + std::to_string(report.b);
    }
    json achieved = json::object();
    for (const auto& [name, size] : report.achieved) {
        achieved[name] = size;
    }
    out["achieved"] = achieved;
    if (report.conjecture) {
        json comps = json::array();
        for (const ComponentCheck& check : *report.conjecture) {
            comps.push_back(component_check_to_json(check));
        }
        out["conjecture"] = comps;
    }
    return out;
}

json exact_result_to_json(const ExactResult& result) {
    json out;
    out["value"] = result.value;
    out["witness"] = edges_to_json(result.witness);
    out["status"] =
        result.status == SolveStatus::Exact ? "exact" : "budget-exhausted";
    out["nodes_explored"] = result.nodes_explored;
    return out;
}

json run_trace_to_json(const RunTrace& trace) {
    json out;
    out["n_input"] = trace.n_input;
    out["n_stripped"] = trace.n_stripped;
    out["n_working_total"] = trace.n_working_total;
    out["delta"] = trace.delta;
    out["B"] = trace.bound_b;
    out["delta0"] = trace.delta0;
    out["padding_added"] = trace.padding_added;
    out["bound_claimed"] = trace.bound_claimed;
    out["all_certified"] = trace.all_certified;
    out["guarantee"] = trace.guarantee;
    out["max_potential_ratio"] = trace.max_potential_ratio;
    json steps = json::array();
    for (const StepRecord& step : trace.steps) {
        json s;
        s["edge"] = json::array({step.edge.u, step.edge.v});
        s["label"] = to_string(step.label);
        s["footprint"] = step.footprint;
        s["s_size"] = static_cast<long long>(step.s.size());
        s["i_size"] = static_cast<long long>(step.isolated.size());
        s["certified"] = step.certified;
        s["f_u"] = rational_to_string(step.f_u);
        s["f_v"] = rational_to_string(step.f_v);
        steps.push_back(std::move(s));
    }
    out["steps"] = steps;
    return out;
}

json component_check_to_json(const ComponentCheck& check) {
    json out;
    out["vertices"] = check.component;
    out["n"] = check.n;
    out["delta"] = check.delta;
    out["guarantee"] = check.guarantee;
    out["nu_s"] = exact_result_to_json(check.nu);
    out["status"] = to_string(check.status);
    return out;
}

json scan_report_to_json(const ScanReport& report) {
    json out;
    out["schema_version"] = kReportSchemaVersion;
    out["toolkit_version"] = kToolkitVersion;
    out["mode"] = report.exhaustive ? "exhaustive" : "random";
    out["max_n"] = report.max_n;
    out["budget"] = report.budget;
    if (!report.exhaustive) {
        out["seed"] = report.seed;
        out["trials"] = report.trials;
    }
    out["checked"] = report.checked;
    json per_n = json::object();
    for (const auto& [n, count] : report.checked_per_n) {
        per_n[std::to_string(n)] = count;
    }
    out["checked_per_n"] = per_n;
    out["holds"] = report.holds;
    out["inconclusive"] = report.inconclusive;

    auto findings_json = [](const std::vector<ScanFinding>& findings) {
        json arr = json::array();
        for (const ScanFinding& f : findings) {
            json entry = component_check_to_json(f.check);
            entry["edges"] = edges_to_json(f.graph.edges());
            entry["edge_list"] = write_edge_list(f.graph);
            arr.push_back(std::move(entry));
        }
        return arr;
    };
    out["exceptions"] = findings_json(report.exceptions);
    out["violators"] = findings_json(report.violators);
    return out;
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace indmatch
