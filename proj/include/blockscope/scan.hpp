#pragma once

#include <string>
#include <vector>

#include "blockscope/report.hpp"

namespace blockscope {

struct ScanOptions {
    std::vector<long long> primes; // empty: all primes dividing each |G|
    int threads = 0;               // 0: hardware default, capped by env
};

struct ScanRow {
    std::string file;
    std::string table;
    long long prime = 0;
    int block = 0;
    Rat gamma;
    NilpotencyIndicators indicators;
    std::vector<std::string> anomalies;
};

struct ScanResult {
    std::vector<ScanRow> rows;        // sorted by (file, prime, block)
    std::vector<std::string> warnings; // unreadable entries, skipped
    long long tablesScanned = 0;
    long long gammaBelowOne = 0;
    long long conjectureAnomalies = 0;

    bool found_refutation() const { return gammaBelowOne > 0; }
};

// Scans every *.ctj file in the directory (non-recursive, sorted order).
ScanResult scan_directory(const std::string& dir, const ScanOptions& opts);

std::string scan_to_json(const ScanResult& result);

} // namespace blockscope
