#include "blockscope/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include <json.hpp>

#include "blockscope/ctj.hpp"

namespace blockscope {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct FileOutcome {
    std::vector<ScanRow> rows;
    std::vector<std::string> warnings;
    bool scanned = false;
};

FileOutcome scan_file(const std::string& path, const ScanOptions& opts) {
    FileOutcome out;
    try {
        CharacterTable table = load_table(path);
        std::vector<long long> primes = opts.primes;
        if (primes.empty()) primes = prime_divisors(table.order());
        for (long long p : primes) {
            if (!is_prime_ll(p)) continue;
            AnalysisReport rep = analyze_table(table, p);
            for (const auto& b : rep.blocks) {
                ScanRow row;
                row.file = fs::path(path).filename().string();
                row.table = table.name();
                row.prime = p;
                row.block = b.blockIndex;
                row.gamma = b.gamma;
                row.indicators = b.nilpotency;
                row.anomalies = b.anomalies;
                out.rows.push_back(std::move(row));
            }
        }
        out.scanned = true;
    } catch (const std::exception& e) {
        out.rows.clear();
        out.warnings.push_back(fs::path(path).filename().string() + ": " + e.what());
    }
    return out;
}

int thread_budget(const ScanOptions& opts) {
    int n = opts.threads;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    if (const char* env = std::getenv("BLOCKSCOPE_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

} // namespace

ScanResult scan_directory(const std::string& dir, const ScanOptions& opts) {
    ScanResult result;
    std::vector<std::string> files;
    {
        std::error_code ec;
        fs::directory_iterator it(dir, ec);
        if (ec) throw ParseError("cannot read directory: " + dir);
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".ctj")
                files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());

    std::vector<FileOutcome> outcomes(files.size());
    const int nthreads =
        std::min(thread_budget(opts),
                 static_cast<int>(std::max<size_t>(files.size(), 1)));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= files.size()) break;
            outcomes[i] = scan_file(files[i], opts);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (auto& o : outcomes) {
        if (o.scanned) ++result.tablesScanned;
        result.warnings.insert(result.warnings.end(), o.warnings.begin(),
                               o.warnings.end());
        result.rows.insert(result.rows.end(), o.rows.begin(), o.rows.end());
    }
    std::sort(result.rows.begin(), result.rows.end(),
              [](const ScanRow& a, const ScanRow& b) {
                  if (a.file != b.file) return a.file < b.file;
                  if (a.prime != b.prime) return a.prime < b.prime;
                  return a.block < b.block;
              });
    for (const auto& row : result.rows) {
        if (row.gamma < 1) ++result.gammaBelowOne;
        if (row.indicators.gammaEqualsOne != row.indicators.heightZeroDegreesEqual)
            ++result.conjectureAnomalies;
    }
    return result;
}

std::string scan_to_json(const ScanResult& result) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& row : result.rows) {
        ordered_json r;
        r["file"] = row.file;
        r["table"] = row.table;
        r["prime"] = row.prime;
        r["block"] = row.block;
        r["gamma"] = rat_string(row.gamma);
        ordered_json ind;
        ind["defectZero"] = row.indicators.defectZero;
        ind["allDegreesEqual"] = row.indicators.allDegreesEqual;
        ind["heightZeroDegreesEqual"] = row.indicators.heightZeroDegreesEqual;
        ind["gammaEqualsOne"] = row.indicators.gammaEqualsOne;
        r["indicators"] = std::move(ind);
        r["anomaly"] = !row.anomalies.empty();
        r["anomalies"] = row.anomalies;
        j["rows"].push_back(std::move(r));
    }
    ordered_json summary;
    summary["tablesScanned"] = result.tablesScanned;
    summary["rows"] = result.rows.size();
    summary["gammaBelowOne"] = result.gammaBelowOne;
    summary["conjectureAnomalies"] = result.conjectureAnomalies;
    summary["warnings"] = result.warnings;
    j["summary"] = std::move(summary);
    return j.dump(1) + "\n";
}

} // namespace blockscope
