#include <doctest.h>

#include "indmatch/report.hpp"
#include "indmatch/scan.hpp"

#include <nlohmann/json.hpp>

using namespace indmatch;

TEST_SUITE_BEGIN("scan");

TEST_CASE("exhaustive scan to n=5 finds nothing unusual") {
    const ScanReport report = run_exhaustive_scan(5);
    CHECK(report.exceptions.empty());
    CHECK(report.violators.empty());
    CHECK(report.inconclusive == 0);
    // Connected graphs with max degree >= 3, up to isomorphism.
    CHECK(report.checked_per_n.at(4) == 4);
    CHECK(report.checked_per_n.at(5) == 19);
    CHECK(report.checked == 23);
    CHECK(report.holds == 23);
}

TEST_CASE("exhaustive scan to n=6 keeps the sharp graphs tight") {
    const ScanReport report = run_exhaustive_scan(6);
    CHECK(report.exceptions.empty());
    CHECK(report.violators.empty());
    CHECK(report.checked_per_n.at(6) == 110);
}

TEST_CASE("scan refuses n beyond the exhaustive cap") {
    CHECK_THROWS_AS(run_exhaustive_scan(8), std::invalid_argument);
    CHECK_THROWS_AS(run_exhaustive_scan(0), std::invalid_argument);
}

TEST_CASE("randomized scan is deterministic under its seed") {
    const ScanReport a = run_random_scan(40, 9, 12345);
    const ScanReport b = run_random_scan(40, 9, 12345);
    CHECK(dump_json(scan_report_to_json(a)) == dump_json(scan_report_to_json(b)));
    CHECK(a.checked == b.checked);
    CHECK(a.violators.empty());
}

TEST_SUITE_END();
