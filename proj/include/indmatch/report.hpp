#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "indmatch/bounds.hpp"
#include "indmatch/constructive.hpp"
#include "indmatch/exact.hpp"
#include "indmatch/scan.hpp"

namespace indmatch {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json edges_to_json(const EdgeList& edges);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json exact_result_to_json(const ExactResult& result);
nlohmann::json run_trace_to_json(const RunTrace& trace);
nlohmann::json component_check_to_json(const ComponentCheck& check);

// Scan reports carry no timing so identical flags give identical bytes.
nlohmann::json scan_report_to_json(const ScanReport& report);

std::string dump_json(const nlohmann::json& j);

}  // namespace indmatch
