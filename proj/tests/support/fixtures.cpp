#include "support/fixtures.hpp"

#include <json.hpp>

#include "blockscope/ctj.hpp"

namespace blockscope::testsupport {

using nlohmann::ordered_json;

std::vector<Fixture> fixture_catalog() {
    std::vector<Fixture> out;
    out.push_back({"c2", cyclic_group(2)});
    out.push_back({"c3", cyclic_group(3)});
    out.push_back({"c4", cyclic_group(4)});
    out.push_back({"c6", cyclic_group(6)});
    out.push_back({"c8", cyclic_group(8)});
    out.push_back({"c9", cyclic_group(9)});
    out.push_back({"c2xc2", direct_product("C2xC2", cyclic_group(2), cyclic_group(2))});
    out.push_back({"c2xc2xc2",
                   direct_product("C2xC2xC2",
                                  direct_product("C2xC2", cyclic_group(2),
                                                 cyclic_group(2)),
                                  cyclic_group(2))});
    out.push_back({"c3xc3", direct_product("C3xC3", cyclic_group(3), cyclic_group(3))});
    out.push_back({"c9xc3", direct_product("C9xC3", cyclic_group(9), cyclic_group(3))});
    out.push_back({"c4xc2xc2",
                   direct_product("C4xC2xC2",
                                  direct_product("C4xC2", cyclic_group(4),
                                                 cyclic_group(2)),
                                  cyclic_group(2))});
    out.push_back({"s3", symmetric3()});
    out.push_back({"c3xs3", direct_product("C3xS3", cyclic_group(3), symmetric3())});
    out.push_back({"s4", symmetric4()});
    out.push_back({"a4", alternating4()});
    out.push_back({"a5", alternating5()});
    out.push_back({"q8", quaternion8()});
    out.push_back({"d8", dihedral8()});
    out.push_back({"d16", dihedral16()});
    out.push_back({"sd16", semidihedral16()});
    out.push_back({"q16", quaternion16()});
    out.push_back({"m16", modular16()});
    out.push_back({"f20", frobenius20()});
    out.push_back({"sl23", sl2_3()});
    out.push_back({"s3xs3", direct_product("S3xS3", symmetric3(), symmetric3())});
    out.push_back({"dc_s3xs3", double_cover_s3s3()});
    return out;
}

std::string fixture_ctj(const Group& g) {
    DixonTable t = dixon_character_table(g);
    const int k = static_cast<int>(g.classes.size());

    ordered_json doc;
    doc["name"] = g.name;
    doc["order"] = g.n;
    doc["classes"] = ordered_json::array();
    for (int i = 0; i < k; ++i) {
        ordered_json jc;
        long long size = static_cast<long long>(g.classes[i].size());
        jc["name"] = std::to_string(g.elementOrder[g.classRep[i]]) + "_" +
                     std::to_string(i);
        jc["size"] = size;
        jc["centralizer"] = g.n / size;
        jc["elementOrder"] = g.elementOrder[g.classRep[i]];
        jc["inverse"] = g.inverseClass[i];
        doc["classes"].push_back(std::move(jc));
    }
    doc["powerMaps"] = ordered_json::object();
    for (long long q = 2; q <= g.n; ++q) {
        bool prime = q >= 2;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime || g.n % q != 0) continue;
        std::vector<int> pm(k);
        for (int i = 0; i < k; ++i) pm[i] = g.cls_of_power(i, q);
        doc["powerMaps"][std::to_string(q)] = pm;
    }
    doc["irreducibles"] = ordered_json::array();
    for (int chi = 0; chi < k; ++chi) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < k; ++j) {
            const CharValue& v = t.values[chi][j];
            if (v.n == 1) {
                row.push_back(v.mult[0]);
                continue;
            }
            ordered_json coeffs = ordered_json::array();
            for (long long s = 0; s < static_cast<long long>(v.mult.size()); ++s)
                if (v.mult[s] != 0)
                    coeffs.push_back(ordered_json::array({s, v.mult[s], 1}));
            ordered_json val;
            val["n"] = v.n;
            val["coeffs"] = std::move(coeffs);
            row.push_back(std::move(val));
        }
        doc["irreducibles"].push_back(std::move(row));
    }
    doc["meta"] = ordered_json::object();
    doc["meta"]["generator"] = "ctgen (Burnside-Dixon over F_q)";

    // Normalize through the engine parser/serializer; this also validates
    // orthogonality, power maps and the Brauer permutation lemma.
    CharacterTable table = parse_table(doc.dump());
    return serialize_table(table);
}

std::string expected_blocks_json(const Group& g, const DixonTable& t, long long p) {
    auto blocks = reference_blocks(g, t, p);
    long long a = 0, n = g.n;
    while (n % p == 0) { n /= p; ++a; }

    ordered_json doc;
    doc["table"] = g.name;
    doc["prime"] = p;
    doc["blocks"] = ordered_json::array();
    for (const auto& blk : blocks) {
        long long minv = a;
        for (int chi : blk) {
            long long d = t.degrees[chi], v = 0;
            while (d % p == 0) { d /= p; ++v; }
            minv = std::min(minv, v);
        }
        ordered_json jb;
        jb["characters"] = blk;
        jb["defect"] = a - minv;
        std::vector<long long> heights;
        for (int chi : blk) {
            long long d = t.degrees[chi], v = 0;
            while (d % p == 0) { d /= p; ++v; }
            heights.push_back(v - minv);
        }
        jb["heights"] = heights;
        doc["blocks"].push_back(std::move(jb));
    }
    return doc.dump(1) + "\n";
}

std::string fixture_dir() { return BLOCKSCOPE_FIXTURE_DIR; }
std::string expected_dir() { return BLOCKSCOPE_EXPECTED_DIR; }

std::string fixture_path(const std::string& stem) {
    return fixture_dir() + "/" + stem + ".ctj";
}

CharacterTable load_fixture(const std::string& stem) {
    return load_table(fixture_path(stem));
}

} // namespace blockscope::testsupport
