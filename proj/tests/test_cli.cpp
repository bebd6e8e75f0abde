#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "indmatch/edge_list.hpp"
#include "indmatch/generators.hpp"
#include "indmatch/matching.hpp"

using namespace indmatch;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* path = std::getenv("INDMATCH_CLI");
    REQUIRE_MESSAGE(path != nullptr, "INDMATCH_CLI must point at the binary");
    return path;
}

int run_cli(const std::string& args) {
    const int status = std::system((cli_path() + " " + args).c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json load_json(const std::string& path) { return json::parse(slurp(path)); }

const std::string tmp = "/tmp/indmatch_cli_test_";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate emits parseable canonical edge lists") {
    REQUIRE(run_cli("generate h1 --delta 4 --out " + tmp + "h1.el") == 0);
    const Graph h1 = read_edge_list_file(tmp + "h1.el");
    CHECK(h1 == sharpness_h1(4));

    REQUIRE(run_cli("generate c5blowup --orders 2,2,2,2,2 --out " + tmp + "c5.el") == 0);
    CHECK(read_edge_list_file(tmp + "c5.el") == c5_blowup({2, 2, 2, 2, 2}));

    REQUIRE(run_cli("generate regular --n 10 --d 3 --seed 1 --out " + tmp + "reg.el") == 0);
    CHECK(read_edge_list_file(tmp + "reg.el").edge_count() == 15);
}

TEST_CASE("solve exact reports value and verified witness") {
    write_edge_list_file(path_graph(5), tmp + "p5.el");
    REQUIRE(run_cli("solve " + tmp + "p5.el --algo exact --out " + tmp + "p5.json") == 0);
    const json report = load_json(tmp + "p5.json");
    CHECK(report["exact"]["value"] == 2);
    CHECK(report["exact"]["status"] == "exact");
    CHECK(report["matching_size"] == 2);
    CHECK(report["bounds"]["achieved"]["exact"] == 2);

    // Matchings embedded in a report re-verify against the input.
    EdgeList matching;
    for (const auto& e : report["matching"]) {
        matching.push_back(Edge{e[0], e[1]});
    }
    CHECK(is_induced_matching(read_edge_list_file(tmp + "p5.el"), matching));
}

TEST_CASE("solve exact on the exception graphs") {
    write_edge_list_file(c5_blowup({2, 2, 2, 2, 2}), tmp + "c5sq.el");
    REQUIRE(run_cli("solve " + tmp + "c5sq.el --algo exact --out " + tmp + "c5sq.json") == 0);
    CHECK(load_json(tmp + "c5sq.json")["exact"]["value"] == 1);
}

TEST_CASE("solve constructive certifies the sharp graph") {
    REQUIRE(run_cli("generate h1 --delta 1000 --out " + tmp + "h1k.el") == 0);
    REQUIRE(run_cli("solve " + tmp + "h1k.el --algo constructive --out " + tmp +
                    "h1k.json") == 0);
    const json report = load_json(tmp + "h1k.json");
    CHECK(report["matching_size"] == 1);
    CHECK(report["trace"]["all_certified"] == true);
    CHECK(report["trace"]["bound_claimed"] == true);
    CHECK(report["trace"]["steps"].size() == 1);
    CHECK(report["trace"]["steps"][0]["footprint"] == 251001);
}

TEST_CASE("greedy subcommands run and validate") {
    write_edge_list_file(cycle_graph(12), tmp + "c12.el");
    for (const std::string algo : {"greedy-first", "greedy-minconf"}) {
        REQUIRE(run_cli("solve " + tmp + "c12.el --algo " + algo + " --out " + tmp +
                        algo + ".json") == 0);
        const json report = load_json(tmp + algo + ".json");
        CHECK(report["matching_size"].get<int>() >= 2);
    }
}

TEST_CASE("parse errors exit with code 1") {
    {
        std::ofstream bad(tmp + "bad.el");
        bad << "2 1\n0 0\n";
    }
    CHECK(run_cli("solve " + tmp + "bad.el --algo exact --out /dev/null 2>/dev/null") == 1);
    CHECK(run_cli("solve " + tmp + "missing_file.el 2>/dev/null") == 1);
    CHECK(run_cli("generate h1 --delta 2 --out /dev/null 2>/dev/null") == 1);
}

TEST_CASE("conjecture scan is byte-identical across runs") {
    REQUIRE(run_cli("conjecture-scan --max-n 5 --out " + tmp + "scan_a.json") == 0);
    REQUIRE(run_cli("conjecture-scan --max-n 5 --out " + tmp + "scan_b.json") == 0);
    CHECK(slurp(tmp + "scan_a.json") == slurp(tmp + "scan_b.json"));
    const json report = load_json(tmp + "scan_a.json");
    CHECK(report["violators"].empty());
    CHECK(report["exceptions"].empty());
}

TEST_CASE("randomized scan mode works through the CLI") {
    REQUIRE(run_cli("conjecture-scan --random-trials 25 --max-n 9 --seed 7 --out " +
                    tmp + "rand.json") == 0);
    const json report = load_json(tmp + "rand.json");
    CHECK(report["mode"] == "random");
    CHECK(report["violators"].empty());
}

TEST_CASE("bench emits one row per algorithm") {
    REQUIRE(run_cli("bench --preset smoke --out " + tmp + "bench.csv") == 0);
    const std::string csv = slurp(tmp + "bench.csv");
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("instance,algo,n,m,delta,B", 0) == 0);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 9 * 4);  // smoke preset: 9 instances x 4 algorithms
}

TEST_CASE("environment variable overrides the default budget") {
    write_edge_list_file(random_graph(40, 0.2, 17), tmp + "busy.el");
    REQUIRE(std::system(("INDMATCH_BUDGET=3 " + cli_path() + " solve " + tmp +
                         "busy.el --algo exact --out " + tmp + "busy.json")
                            .c_str()) == 0);
    CHECK(load_json(tmp + "busy.json")["exact"]["status"] == "budget-exhausted");
}

TEST_SUITE_END();
