// blockscope: p-block invariants from character table files.
//
// Exit codes: 0 success, 1 anomaly found (scan), 2 validation failure,
// 3 I/O or parse error, 4 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blockscope/ctj.hpp"
#include "blockscope/report.hpp"
#include "blockscope/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 4;

using namespace blockscope;

int cmd_validate(const std::string& file, bool lenient) {
    std::vector<std::string> warnings;
    CharacterTable table = load_table(file, lenient, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "valid: " << table.name() << " (order " << table.order() << ", "
              << table.num_classes() << " classes)\n";
    return kExitOk;
}

int cmd_blocks(const std::string& file, long long p) {
    CharacterTable table = load_table(file);
    auto blocks = block_partition(table, p);
    std::cout << table.name() << ", p = " << p << ": " << blocks.size()
              << " block(s)\n";
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        std::cout << "block " << i << ": defect " << b.defect << ", k(B) = "
                  << b.k() << ", l(B) = " << l_of_block(table, b) << "\n";
        std::cout << "  characters:";
        for (int c : b.characters) std::cout << " " << c;
        std::cout << "\n  heights:";
        for (size_t j = 0; j < b.characters.size(); ++j)
            std::cout << " " << b.heights[j];
        std::cout << "\n  defect-class support:";
        for (int c : defect_class_support(table, b)) std::cout << " " << c;
        std::cout << "\n  defect group normal: "
                  << (is_defect_group_normal(table, b) ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const std::string& file, long long p, int blockIndex,
                bool assertAbelian, const std::string& format) {
    CharacterTable table = load_table(file);
    AnalysisReport rep = analyze_table(table, p, blockIndex, assertAbelian);
    if (format == "md")
        std::cout << report_to_markdown(rep);
    else
        std::cout << report_to_json(rep);
    std::cerr << "analyzed " << rep.blocks.size() << " block(s) in "
              << rep.elapsedSeconds << "s\n";
    return kExitOk;
}

int cmd_gamma(const std::string& file, long long p) {
    CharacterTable table = load_table(file);
    auto blocks = block_partition(table, p);
    for (size_t i = 0; i < blocks.size(); ++i) {
        FusionReport f = fusion_number(table, blocks, static_cast<int>(i));
        std::cout << "block " << i << ": gamma " << rat_string(f.gamma) << "\n";
    }
    return kExitOk;
}

int cmd_scan(const std::string& dir, const std::string& primesArg,
             const std::string& reportPath, int threads) {
    ScanOptions opts;
    opts.threads = threads;
    if (!primesArg.empty() && primesArg != "all") {
        std::stringstream ss(primesArg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            long long p = std::stoll(tok);
            if (!is_prime_ll(p)) throw UsageError("not a prime: " + tok);
            opts.primes.push_back(p);
        }
    }
    ScanResult result = scan_directory(dir, opts);
    std::string json = scan_to_json(result);
    if (!reportPath.empty()) {
        std::ofstream out(reportPath);
        if (!out) throw ParseError("cannot write report: " + reportPath);
        out << json;
    } else {
        std::cout << json;
    }
    std::cerr << "scanned " << result.tablesScanned << " table(s), "
              << result.rows.size() << " block row(s), " << result.gammaBelowOne
              << " gamma<1, " << result.conjectureAnomalies
              << " conjecture anomalies\n";
    return result.found_refutation() ? kExitAnomaly : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-block defect-group invariants from character tables"};
    app.require_subcommand(1);

    std::string file, dir, reportPath, format = "json", primesArg = "all";
    long long p = 0;
    int blockIndex = -1, threads = 0;
    bool lenient = false, assertAbelian = false;

    auto* validate = app.add_subcommand("validate", "validate a CTJ file");
    validate->add_option("file", file)->required();
    validate->add_flag("--lenient", lenient,
                       "downgrade derived checks to warnings");

    auto* blocks = app.add_subcommand("blocks", "print the block partition");
    blocks->add_option("file", file)->required();
    blocks->add_option("-p,--prime", p)->required();

    auto* analyze = app.add_subcommand("analyze", "full invariant report");
    analyze->add_option("file", file)->required();
    analyze->add_option("-p,--prime", p)->required();
    analyze->add_option("--block", blockIndex, "only this block index");
    analyze->add_flag("--assert-abelian", assertAbelian,
                      "caller asserts the defect groups are abelian");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

    auto* gamma = app.add_subcommand("gamma", "fusion numbers per block");
    gamma->add_option("file", file)->required();
    gamma->add_option("-p,--prime", p)->required();

    auto* scan = app.add_subcommand("scan", "scan a directory of CTJ files");
    scan->add_option("dir", dir)->required();
    scan->add_option("--primes", primesArg, "\"all\" or comma-separated primes");
    scan->add_option("--report", reportPath, "output JSON path");
    scan->add_option("--threads", threads, "worker cap (also BLOCKSCOPE_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(file, lenient);
        if (app.got_subcommand(blocks)) {
            if (!is_prime_ll(p)) throw UsageError("p must be prime");
            return cmd_blocks(file, p);
        }
        if (app.got_subcommand(analyze)) {
            if (!is_prime_ll(p)) throw UsageError("p must be prime");
            return cmd_analyze(file, p, blockIndex, assertAbelian, format);
        }
        if (app.got_subcommand(gamma)) {
            if (!is_prime_ll(p)) throw UsageError("p must be prime");
            return cmd_gamma(file, p);
        }
        if (app.got_subcommand(scan))
            return cmd_scan(dir, primesArg, reportPath, threads);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
}
