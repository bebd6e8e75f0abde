#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "indmatch/baseline.hpp"
#include "indmatch/bounds.hpp"
#include "indmatch/constructive.hpp"
#include "indmatch/edge_list.hpp"
#include "indmatch/exact.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/report.hpp"
#include "indmatch/scan.hpp"

namespace {

using indmatch::Edge;
using indmatch::EdgeList;
using indmatch::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCertificateFailed = 2;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << text;
}

long long default_budget() {
    if (const char* env = std::getenv("INDMATCH_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::runtime_error("INDMATCH_BUDGET is not an integer");
        }
    }
    return indmatch::kDefaultNodeBudget;
}

struct SolveOptions {
    std::string input;
    std::string algo = "constructive";
    int delta0 = 1000;
    long long budget = 0;
    std::string out;
};

int run_solve(const SolveOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = indmatch::read_edge_list_file(opt.input);

    indmatch::BoundReport bounds = indmatch::make_bound_report(g);
    json report;
    report["schema_version"] = indmatch::kReportSchemaVersion;
    report["toolkit_version"] = indmatch::kToolkitVersion;
    report["input"] = {{"path", opt.input},
                       {"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"delta", g.max_degree()}};
    report["algo"] = opt.algo;

    int exit_code = kExitOk;
    EdgeList matching;
    if (opt.algo == "exact") {
        const indmatch::ExactResult result = indmatch::nu_s_exact(g, opt.budget);
        matching = result.witness;
        report["exact"] = indmatch::exact_result_to_json(result);
        bounds.achieved["exact"] = result.value;
    } else if (opt.algo == "constructive") {
        indmatch::RunConfig config;
        config.delta0 = opt.delta0;
        const indmatch::RunResult result = indmatch::constructive_run(g, config);
        matching = result.matching;
        report["trace"] = indmatch::run_trace_to_json(result.trace);
        bounds.achieved["constructive"] =
            static_cast<long long>(result.matching.size());
        if (result.trace.bound_claimed && !result.trace.all_certified) {
            exit_code = kExitCertificateFailed;
        }
        if (opt.delta0 < 1000) {
            std::cerr << "warning: delta0 " << opt.delta0
                      << " is below 1000; certificates at this threshold are "
                         "empirical, not proven\n";
        }
    } else if (opt.algo == "greedy-first" || opt.algo == "greedy-minconf") {
        const auto policy = opt.algo == "greedy-first"
                                ? indmatch::GreedyPolicy::FirstEdge
                                : indmatch::GreedyPolicy::MinConflict;
        matching = indmatch::greedy_induced_matching(g, policy);
        bounds.achieved[opt.algo] = static_cast<long long>(matching.size());
    } else {
        throw std::runtime_error("unknown algorithm " + opt.algo);
    }

    if (!indmatch::is_induced_matching(g, matching)) {
        throw std::logic_error("internal error: produced matching failed validation");
    }
    report["matching"] = indmatch::edges_to_json(matching);
    report["matching_size"] = matching.size();
    report["bounds"] = indmatch::bound_report_to_json(bounds);
    report["timing_ms"] = elapsed_ms(start);
    report["exit_code"] = exit_code;
    emit(indmatch::dump_json(report), opt.out);
    return exit_code;
}

struct GenerateOptions {
    std::string family;
    int delta = 4;
    std::vector<int> orders = {2, 2, 2, 2, 2};
    std::string base;
    int pendants = 1;
    int n = 10;
    int d = 3;
    double p = 0.5;
    int leaves = 3;
    int copies = 1;
    uint64_t seed = 1;
    std::string out;
};

Graph build_graph(const GenerateOptions& opt) {
    Graph g;
    if (opt.family == "h1") {
        g = indmatch::sharpness_h1(opt.delta);
    } else if (opt.family == "h2") {
        g = indmatch::sharpness_h2(opt.delta);
    } else if (opt.family == "c5blowup") {
        if (opt.orders.size() != 5) {
            throw std::runtime_error("c5blowup needs exactly 5 class orders");
        }
        g = indmatch::c5_blowup(
            {opt.orders[0], opt.orders[1], opt.orders[2], opt.orders[3], opt.orders[4]});
    } else if (opt.family == "pendants") {
        if (opt.base.empty()) {
            throw std::runtime_error("pendants needs an input base graph");
        }
        g = indmatch::attach_pendants(indmatch::read_edge_list_file(opt.base),
                                      opt.pendants);
    } else if (opt.family == "random") {
        g = indmatch::random_graph(opt.n, opt.p, opt.seed);
    } else if (opt.family == "regular") {
        g = indmatch::random_regular(opt.n, opt.d, opt.seed);
    } else if (opt.family == "path") {
        g = indmatch::path_graph(opt.n);
    } else if (opt.family == "cycle") {
        g = indmatch::cycle_graph(opt.n);
    } else if (opt.family == "star") {
        g = indmatch::star_graph(opt.leaves);
    } else if (opt.family == "complete") {
        g = indmatch::complete_graph(opt.n);
    } else {
        throw std::runtime_error("unknown family " + opt.family);
    }
    if (opt.copies > 1) {
        g = indmatch::disjoint_copies(g, opt.copies);
    }
    return g;
}

int run_generate(const GenerateOptions& opt) {
    emit(indmatch::write_edge_list(build_graph(opt)), opt.out);
    return kExitOk;
}

struct ScanOptions {
    int max_n = 7;
    long long budget = 0;
    long long random_trials = 0;
    uint64_t seed = 1;
    std::string out;
};

int run_scan(const ScanOptions& opt) {
    indmatch::ScanReport report;
    if (opt.random_trials > 0) {
        report = indmatch::run_random_scan(opt.random_trials, opt.max_n, opt.seed,
                                           opt.budget);
    } else {
        report = indmatch::run_exhaustive_scan(opt.max_n, opt.budget);
    }
    emit(indmatch::dump_json(indmatch::scan_report_to_json(report)), opt.out);
    return report.violators.empty() ? kExitOk : kExitCertificateFailed;
}

struct BenchOptions {
    std::string corpus;
    std::string preset;
    int delta0 = 1000;
    long long budget = 0;
    std::string out;
};

struct BenchInstance {
    std::string name;
    Graph graph;
};

std::vector<BenchInstance> parse_corpus_line(const std::string& line, int lineno);

std::vector<BenchInstance> builtin_corpus(const std::string& preset) {
    std::vector<std::string> lines;
    if (preset == "smoke") {
        lines = {
            "path n=50",           "cycle n=60",
            "star leaves=20",      "complete n=8",
            "h1 delta=8",          "h2 delta=9",
            "c5blowup orders=2,2,2,2,2",
            "random n=60 p=0.1 seed=7",
            "regular n=40 d=4 seed=11",
        };
    } else if (preset == "paper") {
        lines = {
            "h1 delta=1000",
            "h1 delta=1000 copies=10",
            "h2 delta=1001",
            "regular n=2000 d=50 seed=3",
            "random n=5000 p=0.002 seed=5",
            "path n=5000",
            "cycle n=5000",
        };
    } else {
        throw std::runtime_error("unknown preset " + preset +
                                 " (expected smoke or paper)");
    }
    std::vector<BenchInstance> instances;
    int lineno = 0;
    for (const std::string& line : lines) {
        auto parsed = parse_corpus_line(line, ++lineno);
        instances.insert(instances.end(), parsed.begin(), parsed.end());
    }
    return instances;
}

std::vector<BenchInstance> parse_corpus_line(const std::string& line, int lineno) {
    std::istringstream fields(line);
    std::string family;
    if (!(fields >> family)) {
        return {};
    }
    GenerateOptions opt;
    opt.family = family;
    std::string kv;
    std::string name = family;
    while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     ": expected key=value, got " + kv);
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        name += "_" + key + "=" + value;
        if (key == "n") {
            opt.n = std::stoi(value);
        } else if (key == "d") {
            opt.d = std::stoi(value);
        } else if (key == "p") {
            opt.p = std::stod(value);
        } else if (key == "delta") {
            opt.delta = std::stoi(value);
        } else if (key == "k") {
            opt.pendants = std::stoi(value);
        } else if (key == "input") {
            opt.base = value;
        } else if (key == "leaves") {
            opt.leaves = std::stoi(value);
        } else if (key == "seed") {
            opt.seed = std::stoull(value);
        } else if (key == "copies") {
            opt.copies = std::stoi(value);
        } else if (key == "orders") {
            opt.orders.clear();
            std::istringstream list(value);
            std::string item;
            while (std::getline(list, item, ',')) {
                opt.orders.push_back(std::stoi(item));
            }
        } else {
            throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                     ": unknown key " + key);
        }
    }
    return {BenchInstance{name, build_graph(opt)}};
}

int run_bench(const BenchOptions& opt) {
    std::vector<BenchInstance> instances;
    if (!opt.preset.empty()) {
        instances = builtin_corpus(opt.preset);
    } else if (!opt.corpus.empty()) {
        std::ifstream in(opt.corpus);
        if (!in) {
            throw std::runtime_error("cannot open corpus " + opt.corpus);
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') {
                continue;
            }
            auto parsed = parse_corpus_line(line, lineno);
            instances.insert(instances.end(), parsed.begin(), parsed.end());
        }
    } else {
        throw std::runtime_error("bench needs a corpus file or --preset");
    }

    std::ostringstream csv;
    csv << "instance,algo,n,m,delta,B,theorem_guarantee,trivial_guarantee,"
           "size,steps,certified_steps,max_footprint,valid,status,wall_ms\n";
    for (const BenchInstance& inst : instances) {
        const Graph& g = inst.graph;
        const indmatch::BoundReport bounds = indmatch::make_bound_report(g);
        auto emit_row = [&](const std::string& algo, const EdgeList& matching,
                            long long steps, long long certified,
                            long long max_footprint, const std::string& status,
                            double ms) {
            csv << inst.name << ',' << algo << ',' << g.vertex_count() << ','
                << g.edge_count() << ',' << g.max_degree() << ',' << bounds.b << ','
                << bounds.theorem_guarantee << ',' << bounds.trivial_guarantee << ','
                << matching.size() << ',' << steps << ',' << certified << ','
                << max_footprint << ','
                << (indmatch::is_induced_matching(g, matching) ? 1 : 0) << ','
                << status << ',' << ms << '\n';
        };

        {
            const auto start = std::chrono::steady_clock::now();
            indmatch::RunConfig config;
            config.delta0 = opt.delta0;
            const indmatch::RunResult result = indmatch::constructive_run(g, config);
            long long certified = 0;
            long long max_fp = 0;
            for (const auto& step : result.trace.steps) {
                certified += step.certified ? 1 : 0;
                max_fp = std::max(max_fp, step.footprint);
            }
            emit_row("constructive", result.matching,
                     static_cast<long long>(result.trace.steps.size()), certified,
                     max_fp, result.trace.all_certified ? "certified" : "uncertified",
                     elapsed_ms(start));
        }
        {
            const auto start = std::chrono::steady_clock::now();
            const EdgeList m =
                indmatch::greedy_induced_matching(g, indmatch::GreedyPolicy::FirstEdge);
            emit_row("greedy-first", m, 0, 0, 0, "ok", elapsed_ms(start));
        }
        if (indmatch::min_conflict_feasible(g)) {
            const auto start = std::chrono::steady_clock::now();
            const EdgeList m = indmatch::greedy_induced_matching(
                g, indmatch::GreedyPolicy::MinConflict);
            emit_row("greedy-minconf", m, 0, 0, 0, "ok", elapsed_ms(start));
        } else {
            csv << inst.name << ",greedy-minconf,,,,,,,,,,,,skipped,\n";
        }
        if (indmatch::min_conflict_feasible(g)) {
            const auto start = std::chrono::steady_clock::now();
            const indmatch::ExactResult result = indmatch::nu_s_exact(g, opt.budget);
            emit_row("exact", result.witness, 0, 0, 0,
                     result.status == indmatch::SolveStatus::Exact
                         ? "exact"
                         : "budget-exhausted",
                     elapsed_ms(start));
        } else {
            csv << inst.name << ",exact,,,,,,,,,,,,skipped,\n";
        }
    }
    emit(csv.str(), opt.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced matching toolkit: exact oracle, certified "
                 "constructive algorithm, greedy baseline, generators, and a "
                 "small-graph conjecture scanner"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    solve_opt.budget = -1;
    auto* solve = app.add_subcommand("solve", "Solve one edge-list instance");
    solve->add_option("input", solve_opt.input, "edge list file")->required();
    solve->add_option("--algo", solve_opt.algo,
                      "exact | constructive | greedy-first | greedy-minconf")
        ->check(CLI::IsMember({"exact", "constructive", "greedy-first",
                               "greedy-minconf"}));
    solve->add_option("--delta0", solve_opt.delta0,
                      "degree threshold for claiming the bound")
        ->check(CLI::Range(200, 1 << 30));
    solve->add_option("--budget", solve_opt.budget, "branch node budget");
    solve->add_option("--out", solve_opt.out, "report path (default stdout)");

    GenerateOptions gen_opt;
    auto* gen = app.add_subcommand("generate", "Emit a generated graph");
    gen->add_option("family", gen_opt.family,
                    "h1|h2|c5blowup|pendants|random|regular|path|cycle|star|complete")
        ->required();
    gen->add_option("--delta", gen_opt.delta, "max degree for h1/h2");
    gen->add_option("--orders", gen_opt.orders, "five class orders for c5blowup")
        ->delimiter(',');
    gen->add_option("--input", gen_opt.base, "base graph for pendants");
    gen->add_option("--k", gen_opt.pendants, "pendants per vertex");
    gen->add_option("--n", gen_opt.n, "vertex count");
    gen->add_option("--d", gen_opt.d, "degree for regular");
    gen->add_option("--p", gen_opt.p, "edge probability for random");
    gen->add_option("--leaves", gen_opt.leaves, "leaves for star");
    gen->add_option("--copies", gen_opt.copies, "disjoint copies of the result");
    gen->add_option("--seed", gen_opt.seed, "random seed");
    gen->add_option("--out", gen_opt.out, "output path (default stdout)");

    ScanOptions scan_opt;
    scan_opt.budget = -1;
    auto* scan = app.add_subcommand(
        "conjecture-scan", "Check the sharp bound on all small connected graphs");
    scan->add_option("--max-n", scan_opt.max_n, "exhaustive cap (at most 7)");
    scan->add_option("--random-trials", scan_opt.random_trials,
                     "use randomized probing with this many trials");
    scan->add_option("--seed", scan_opt.seed, "seed for randomized mode");
    scan->add_option("--budget", scan_opt.budget, "branch node budget");
    scan->add_option("--out", scan_opt.out, "report path (default stdout)");

    BenchOptions bench_opt;
    bench_opt.budget = -1;
    auto* bench = app.add_subcommand(
        "bench", "Compare algorithms over a corpus, emitting CSV");
    bench->add_option("corpus", bench_opt.corpus,
                      "corpus file: one `family key=value...` per line");
    bench->add_option("--preset", bench_opt.preset, "built-in corpus: smoke | paper");
    bench->add_option("--delta0", bench_opt.delta0, "constructive threshold");
    bench->add_option("--budget", bench_opt.budget, "exact solver budget");
    bench->add_option("--out", bench_opt.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        const long long budget = default_budget();
        if (solve->parsed()) {
            if (solve_opt.budget < 0) {
                solve_opt.budget = budget;
            }
            return run_solve(solve_opt);
        }
        if (gen->parsed()) {
            return run_generate(gen_opt);
        }
        if (scan->parsed()) {
            if (scan_opt.budget < 0) {
                scan_opt.budget = budget;
            }
            return run_scan(scan_opt);
        }
        if (bench->parsed()) {
            if (bench_opt.budget < 0) {
                bench_opt.budget = budget;
            }
            return run_bench(bench_opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
