#include "blockscope/ctj.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blockscope {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Cyclotomic parse_value(const json& v, const char* where) {
    if (v.is_number_integer())
        return Cyclotomic(to_rat(v.get<long long>()));
    if (v.is_array()) {
        if (v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw ParseError(std::string("bad rational value at ") + where);
        long long den = v[1].get<long long>();
        if (den == 0) throw ParseError(std::string("zero denominator at ") + where);
        return Cyclotomic(to_rat(v[0].get<long long>(), den));
    }
    if (v.is_object()) {
        if (!v.contains("n") || !v.contains("coeffs"))
            throw ParseError(std::string("bad cyclotomic value at ") + where);
        long long n = v["n"].get<long long>();
        if (n < 1) throw ParseError(std::string("bad conductor at ") + where);
        Cyclotomic sum;
        for (const auto& term : v["coeffs"]) {
            if (!term.is_array() || term.size() != 3)
                throw ParseError(std::string("bad coefficient triple at ") + where);
            long long e = term[0].get<long long>();
            long long num = term[1].get<long long>();
            long long den = term[2].get<long long>();
            if (den == 0) throw ParseError(std::string("zero denominator at ") + where);
            sum = sum + Cyclotomic(to_rat(num, den)) * Cyclotomic::root_of_unity(n, e);
        }
        return sum;
    }
    throw ParseError(std::string("unrecognized value at ") + where);
}

ordered_json value_to_json(const Cyclotomic& c) {
    if (c.is_rational()) {
        const Rat& r = c.rational_value();
        if (r.get_den() == 1) {
            return ordered_json(r.get_num().get_si());
        }
        return ordered_json::array({r.get_num().get_si(), r.get_den().get_si()});
    }
    ordered_json coeffs = ordered_json::array();
    const auto& cs = c.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        coeffs.push_back(ordered_json::array({static_cast<long long>(i),
                                              cs[i].get_num().get_si(),
                                              cs[i].get_den().get_si()}));
    }
    ordered_json obj;
    obj["n"] = c.conductor();
    obj["coeffs"] = coeffs;
    return obj;
}

} // namespace

CharacterTable parse_table(const std::string& text, bool lenient,
                           std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("top level must be an object");
        std::string name = doc.value("name", std::string("unnamed"));
        if (!doc.contains("order")) throw ParseError("missing \"order\"");
        long long order = doc["order"].get<long long>();

        std::vector<ClassInfo> classes;
        if (!doc.contains("classes") || !doc["classes"].is_array())
            throw ParseError("missing \"classes\" array");
        for (const auto& c : doc["classes"]) {
            ClassInfo info;
            info.name = c.value("name", std::string());
            if (!c.contains("size") || !c.contains("centralizer") ||
                !c.contains("elementOrder") || !c.contains("inverse"))
                throw ParseError("class entry missing a required field");
            info.size = c["size"].get<long long>();
            info.centralizer = c["centralizer"].get<long long>();
            info.elementOrder = c["elementOrder"].get<long long>();
            info.inverseClass = c["inverse"].get<int>();
            classes.push_back(std::move(info));
        }

        std::map<long long, std::vector<int>> powerMaps;
        if (doc.contains("powerMaps")) {
            if (!doc["powerMaps"].is_object())
                throw ParseError("\"powerMaps\" must be an object");
            for (auto it = doc["powerMaps"].begin(); it != doc["powerMaps"].end();
                 ++it) {
                long long q;
                try {
                    q = std::stoll(it.key());
                } catch (...) {
                    throw ParseError("powerMaps key is not an integer: " + it.key());
                }
                std::vector<int> pm;
                for (const auto& x : it.value()) pm.push_back(x.get<int>());
                powerMaps[q] = std::move(pm);
            }
        }

        std::vector<std::vector<Cyclotomic>> irreducibles;
        if (!doc.contains("irreducibles") || !doc["irreducibles"].is_array())
            throw ParseError("missing \"irreducibles\" matrix");
        int rowIdx = 0;
        for (const auto& row : doc["irreducibles"]) {
            std::vector<Cyclotomic> r;
            int colIdx = 0;
            for (const auto& v : row) {
                std::ostringstream os;
                os << "(character " << rowIdx << ", class " << colIdx << ")";
                r.push_back(parse_value(v, os.str().c_str()));
                ++colIdx;
            }
            irreducibles.push_back(std::move(r));
            ++rowIdx;
        }

        CharacterTable table(std::move(name), order, std::move(classes),
                             std::move(powerMaps), std::move(irreducibles));
        auto warn = table.validate(lenient);
        if (warnings)
            warnings->insert(warnings->end(), warn.begin(), warn.end());
        return table;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed CTJ: ") + e.what());
    }
}

CharacterTable load_table(const std::string& path, bool lenient,
                          std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_table(os.str(), lenient, warnings);
}

std::string serialize_table(const CharacterTable& table) {
    ordered_json doc;
    doc["name"] = table.name();
    doc["order"] = table.order();
    doc["classes"] = ordered_json::array();
    for (const auto& c : table.classes()) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["size"] = c.size;
        jc["centralizer"] = c.centralizer;
        jc["elementOrder"] = c.elementOrder;
        jc["inverse"] = c.inverseClass;
        doc["classes"].push_back(std::move(jc));
    }
    doc["powerMaps"] = ordered_json::object();
    for (const auto& [q, pm] : table.power_maps())
        doc["powerMaps"][std::to_string(q)] = pm;
    doc["irreducibles"] = ordered_json::array();
    for (const auto& row : table.irreducibles()) {
        ordered_json jr = ordered_json::array();
        for (const auto& v : row) jr.push_back(value_to_json(v));
        doc["irreducibles"].push_back(std::move(jr));
    }
    return doc.dump(1) + "\n";
}

} // namespace blockscope
