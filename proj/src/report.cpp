#include "blockscope/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace blockscope {

using nlohmann::ordered_json;

AnalysisReport analyze_table(const CharacterTable& table, long long p,
                             int blockIndex, bool assertAbelian) {
    auto start = std::chrono::steady_clock::now();
    if (!is_prime_ll(p)) throw UsageError("p must be prime");
    AnalysisReport rep;
    rep.tableName = table.name();
    rep.prime = p;
    auto blocks = block_partition(table, p);
    if (blockIndex >= static_cast<int>(blocks.size()))
        throw UsageError("block index out of range");
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        if (blockIndex >= 0 && i != blockIndex) continue;
        rep.blocks.push_back(build_block_report(table, blocks, i, assertAbelian));
    }
    for (const auto& b : rep.blocks)
        for (const auto& a : b.anomalies)
            rep.anomalies.push_back("block " + std::to_string(b.blockIndex) + ": " +
                                    a);
    rep.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

namespace {

ordered_json p_power_json(long long p, long long exp) {
    ordered_json j;
    j["p"] = p;
    j["exp"] = exp;
    return j;
}

ordered_json block_to_json(const BlockReport& b) {
    ordered_json j;
    j["characters"] = b.characters;
    j["defect"] = b.defect;
    j["k"] = b.kB;
    j["l"] = b.lB;
    j["gamma"] = rat_string(b.gamma);
    ordered_json divs = ordered_json::array();
    for (const auto& [e, mult] : b.elementaryDivisors) {
        ordered_json d = p_power_json(b.p, e);
        d["multiplicity"] = mult;
        divs.push_back(std::move(d));
    }
    j["elementaryDivisors"] = std::move(divs);
    j["cyclicDefect"] = b.cyclicDefect;
    j["expCenter"] = p_power_json(b.p, b.expCenterExp);
    ordered_json ab;
    ab["necessaryCheck"] = b.abelian.necessaryCheck;
    if (b.abelian.necessaryCheck)
        ab["exponent"] = p_power_json(b.p, b.abelian.exponentExp);
    else
        ab["exponent"] = nullptr;
    if (b.abelian.isoType)
        ab["isoType"] = *b.abelian.isoType;
    else
        ab["isoType"] = nullptr;
    j["abelian"] = std::move(ab);
    if (b.dd4)
        j["dd4"] = *b.dd4;
    else
        j["dd4"] = nullptr;
    j["tame"] = tame_type_name(b.tame);
    ordered_json nil;
    nil["defectZero"] = b.nilpotency.defectZero;
    nil["allDegreesEqual"] = b.nilpotency.allDegreesEqual;
    nil["heightZeroDegreesEqual"] = b.nilpotency.heightZeroDegreesEqual;
    nil["gammaEqualsOne"] = b.nilpotency.gammaEqualsOne;
    j["nilpotency"] = std::move(nil);
    j["defectGroupNormal"] = b.defectGroupNormal;
    return j;
}

} // namespace

std::string report_to_json(const AnalysisReport& report) {
    ordered_json j;
    j["table"] = report.tableName;
    j["prime"] = report.prime;
    j["blocks"] = ordered_json::array();
    for (const auto& b : report.blocks) j["blocks"].push_back(block_to_json(b));
    j["anomalies"] = report.anomalies;
    return j.dump(1) + "\n";
}

std::string report_to_markdown(const AnalysisReport& report) {
    std::ostringstream os;
    os << "# " << report.tableName << ", p = " << report.prime << "\n\n";
    for (const auto& b : report.blocks) {
        os << "## Block " << b.blockIndex << "\n\n";
        os << "- characters:";
        for (int c : b.characters) os << " " << c;
        os << "\n- defect: " << b.defect << "\n";
        os << "- k(B): " << b.kB << ", l(B): " << b.lB << "\n";
        os << "- gamma: " << rat_string(b.gamma) << "\n";
        os << "- elementary divisors:";
        for (const auto& [e, mult] : b.elementaryDivisors)
            os << " " << b.p << "^" << e << " (x" << mult << ")";
        os << "\n- cyclic defect group: " << (b.cyclicDefect ? "yes" : "no") << "\n";
        os << "- exp(Z(D)): " << b.p << "^" << b.expCenterExp << "\n";
        os << "- abelian necessary check: "
           << (b.abelian.necessaryCheck ? "pass" : "fail") << "\n";
        if (b.abelian.necessaryCheck)
            os << "- abelian exponent: " << b.p << "^" << b.abelian.exponentExp
               << "\n";
        if (b.abelian.isoType) {
            os << "- abelian iso type: [";
            for (size_t i = 0; i < b.abelian.isoType->size(); ++i)
                os << (i ? ", " : "") << (*b.abelian.isoType)[i];
            os << "]\n";
        } else if (b.abelian.isoUndetermined) {
            os << "- abelian iso type: undetermined\n";
        }
        if (b.dd4) os << "- |D/D'| = 4: " << (*b.dd4 ? "yes" : "no") << "\n";
        os << "- tame: " << tame_type_name(b.tame) << "\n";
        os << "- nilpotency indicators: defectZero="
           << b.nilpotency.defectZero
           << " allDegreesEqual=" << b.nilpotency.allDegreesEqual
           << " heightZeroDegreesEqual=" << b.nilpotency.heightZeroDegreesEqual
           << " gammaEqualsOne=" << b.nilpotency.gammaEqualsOne << "\n";
        os << "- defect group normal: " << (b.defectGroupNormal ? "yes" : "no")
           << "\n\n";
    }
    if (!report.anomalies.empty()) {
        os << "## Anomalies\n\n";
        for (const auto& a : report.anomalies) os << "- " << a << "\n";
    }
    return os.str();
}

} // namespace blockscope
