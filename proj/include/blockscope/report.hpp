#pragma once

#include "blockscope/invariants.hpp"

namespace blockscope {

struct AnalysisReport {
    std::string tableName;
    long long prime = 0;
    std::vector<BlockReport> blocks;
    std::vector<std::string> anomalies; // aggregated, deterministic order
    double elapsedSeconds = 0;          // informational; never serialized
};

// Analyzes all blocks (or just blockIndex when >= 0).
AnalysisReport analyze_table(const CharacterTable& table, long long p,
                             int blockIndex = -1, bool assertAbelian = false);

// Deterministic JSON per the report schema; no floating point anywhere.
std::string report_to_json(const AnalysisReport& report);
std::string report_to_markdown(const AnalysisReport& report);

} // namespace blockscope
