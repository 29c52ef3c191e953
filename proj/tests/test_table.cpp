#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blockscope/ctj.hpp"
#include "support/fixtures.hpp"

using namespace blockscope;
using blockscope::testsupport::fixture_catalog;
using blockscope::testsupport::fixture_path;
using blockscope::testsupport::load_fixture;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::json fixture_json(const std::string& stem) {
    return nlohmann::json::parse(slurp(fixture_path(stem)));
}

int class_of_order(const CharacterTable& t, long long o) {
    for (int i = 0; i < t.num_classes(); ++i)
        if (t.cls(i).elementOrder == o) return i;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("minimal C2 document parses") {
    const char* doc = R"({
      "name": "C2", "order": 2,
      "classes": [
        {"name": "1a", "size": 1, "centralizer": 2, "elementOrder": 1, "inverse": 0},
        {"name": "2a", "size": 1, "centralizer": 2, "elementOrder": 2, "inverse": 1}
      ],
      "powerMaps": {"2": [0, 0]},
      "irreducibles": [[1, 1], [1, -1]]
    })";
    CharacterTable t = parse_table(doc);
    CHECK(t.order() == 2);
    CHECK(t.num_classes() == 2);
    CHECK(t.exponent() == 2);
    CHECK(t.trivial_character_index() == 0);
}

TEST_CASE("corrupted value is rejected with coordinates") {
    auto doc = fixture_json("s3");
    doc["irreducibles"][2][2] = 0; // degree-2 character at the 3-cycles
    CHECK_THROWS_AS(parse_table(doc.dump()), ValidationError);
    try {
        parse_table(doc.dump());
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("orthogonality") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("missing power map for a dividing prime is rejected") {
    auto doc = fixture_json("s3");
    doc["powerMaps"].erase("3");
    CHECK_THROWS_WITH_AS(parse_table(doc.dump()),
                         "powerMaps incomplete: missing prime 3", ValidationError);
}

TEST_CASE("power map inconsistent with element orders is rejected") {
    auto doc = fixture_json("s3");
    doc["powerMaps"]["2"][1] = 1; // transposition squared cannot have order 2
    CHECK_THROWS_AS(parse_table(doc.dump()), ValidationError);
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(parse_table("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_table("{\"order\": 2}"), ParseError);
    CHECK_THROWS_AS(load_table("/nonexistent/nowhere.ctj"), ParseError);
}

TEST_CASE("serialize(parse(t)) == t for every fixture") {
    for (const auto& fx : fixture_catalog()) {
        std::string text = slurp(fixture_path(fx.stem));
        CharacterTable t = parse_table(text);
        CHECK(serialize_table(t) == text);
    }
}

TEST_CASE("all fixtures validate strictly (orthogonality, Brauer lemma)") {
    for (const auto& fx : fixture_catalog()) {
        std::vector<std::string> warnings;
        CharacterTable t = load_table(fixture_path(fx.stem), false, &warnings);
        CHECK(warnings.empty());
        CHECK(t.order() == fx.group.n);
        for (long long p : prime_divisors(t.order()))
            if (p > 2) CHECK(t.brauer_permutation_lemma_holds(p));
    }
}

TEST_CASE("power_map basics") {
    CharacterTable c4 = load_fixture("c4");
    // k = 0 collapses everything onto the identity class.
    auto pm0 = c4.power_map(0);
    for (int i = 0; i < c4.num_classes(); ++i) CHECK(pm0[i] == 0);
    // identity map
    auto pm1 = c4.power_map(1);
    for (int i = 0; i < c4.num_classes(); ++i) CHECK(pm1[i] == i);
    // k = elementOrder(K) lands on the identity class
    for (int i = 0; i < c4.num_classes(); ++i)
        CHECK(c4.power_class(i, c4.cls(i).elementOrder) == 0);
    // In C4 squaring sends both generator classes to the order-2 class.
    int g2 = class_of_order(c4, 2);
    auto pm2 = c4.power_map(2);
    for (int i = 0; i < c4.num_classes(); ++i) {
        if (c4.cls(i).elementOrder == 4) CHECK(pm2[i] == g2);
    }
    // Exponent coprime to |G| works through the Galois route.
    CharacterTable s3 = load_fixture("s3");
    auto pm5 = s3.power_map(5); // g^5 = g^-1 on order-6 table elements
    for (int i = 0; i < s3.num_classes(); ++i)
        CHECK(pm5[i] == s3.cls(i).inverseClass);
}

TEST_CASE("p-factor classes") {
    CharacterTable c6 = load_fixture("c6");
    for (int i = 0; i < c6.num_classes(); ++i) {
        long long o = c6.cls(i).elementOrder;
        int pf = c6.p_factor_class(i, 2);
        // order of the p-factor is the p-part of o
        CHECK(c6.cls(pf).elementOrder == p_part_ll(o, 2));
        // idempotent
        CHECK(c6.p_factor_class(pf, 2) == pf);
        if (o % 2 != 0) CHECK(pf == 0);
        if (p_part_ll(o, 2) == o) CHECK(pf == i);
    }
    // generator of C6: 2-part is g^3
    int g6 = class_of_order(c6, 6);
    int g3cls = class_of_order(c6, 2);
    CHECK(c6.p_factor_class(g6, 2) == g3cls);
}

TEST_CASE("p-sections") {
    // p not dividing |G|: a single section at the identity.
    CharacterTable s3 = load_fixture("s3");
    auto sp5 = s3.p_sections(5);
    REQUIRE(sp5.representatives.size() == 1);
    CHECK(sp5.representatives[0] == 0);
    CHECK(sp5.memberClasses[0].size() == static_cast<size_t>(s3.num_classes()));

    // C4 at p = 2: every class is its own section.
    CharacterTable c4 = load_fixture("c4");
    auto sp = c4.p_sections(2);
    CHECK(sp.representatives.size() == 4);
    for (size_t i = 0; i < sp.representatives.size(); ++i) {
        CHECK(sp.memberClasses[i] ==
              std::vector<int>{sp.representatives[i]});
    }

    // S3 at p = 3: identity section = {1, transpositions}, 3-cycle section.
    auto sp3 = s3.p_sections(3);
    REQUIRE(sp3.representatives.size() == 2);
    CHECK(sp3.memberClasses[0] == std::vector<int>{0, 1});
    CHECK(sp3.memberClasses[1] == std::vector<int>{2});

    // Sections partition the classes on every fixture, every prime.
    for (const auto& fx : fixture_catalog()) {
        CharacterTable t = load_fixture(fx.stem);
        for (long long p : prime_divisors(t.order())) {
            auto s = t.p_sections(p);
            long long total = 0;
            for (const auto& mc : s.memberClasses) total += mc.size();
            CHECK(total == t.num_classes());
            // identity section is exactly the p-regular classes
            for (size_t r = 0; r < s.representatives.size(); ++r) {
                if (s.representatives[r] != 0) continue;
                for (int j = 0; j < t.num_classes(); ++j) {
                    bool inIdentity =
                        std::find(s.memberClasses[r].begin(),
                                  s.memberClasses[r].end(),
                                  j) != s.memberClasses[r].end();
                    CHECK(inIdentity == t.is_p_regular_class(j, p));
                }
            }
        }
    }
}

TEST_CASE("class multiplication coefficients") {
    CharacterTable s3 = load_fixture("s3");
    // a_{1LM} = delta_{LM}
    for (int L = 0; L < 3; ++L)
        for (int M = 0; M < 3; ++M)
            CHECK(s3.class_mult_coefficient(0, L, M) == (L == M ? 1 : 0));
    // transposition * transposition hits the identity 3 times
    CHECK(s3.class_mult_coefficient(1, 1, 0) == 3);

    CharacterTable c2 = load_fixture("c2");
    CHECK(c2.class_mult_coefficient(1, 1, 0) == 1);

    // a_{KLM} |M| is symmetric in K and L on all fixtures (spot a few).
    for (const auto& stem : {"s4", "q8", "a4"}) {
        CharacterTable t = load_fixture(stem);
        for (int K = 0; K < t.num_classes(); ++K)
            for (int L = 0; L < t.num_classes(); ++L)
                for (int M = 0; M < t.num_classes(); ++M) {
                    Int lhs = t.class_mult_coefficient(K, L, M);
                    Int rhs = t.class_mult_coefficient(L, K, M);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("galois class and character actions") {
    CharacterTable c3 = load_fixture("c3");
    auto id = c3.galois_character_action(1);
    CHECK(id == std::vector<int>{0, 1, 2});
    auto swap = c3.galois_character_action(2);
    CHECK(swap[0] == 0);
    CHECK(swap[1] != 1);
    CHECK(swap[swap[1]] == 1);

    // Rational table: every action is trivial on characters.
    CharacterTable s4 = load_fixture("s4");
    for (long long k : units_mod(s4.order())) {
        auto perm = s4.galois_character_action(k);
        for (int i = 0; i < s4.num_classes(); ++i) CHECK(perm[i] == i);
    }

    // Composition law on a value-rich table.
    CharacterTable a5 = load_fixture("a5");
    auto u = units_mod(a5.order());
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < u.size(); j += 7) {
            auto ab = a5.galois_class_action(u[i] * u[j] % a5.order());
            auto a = a5.galois_class_action(u[i]);
            auto b = a5.galois_class_action(u[j]);
            for (int c = 0; c < a5.num_classes(); ++c)
                CHECK(ab[c] == a[b[c]]);
        }

    CHECK_THROWS_AS(s4.galois_class_action(2), UsageError);
}

TEST_CASE("degrees and centralizer data") {
    for (const auto& fx : fixture_catalog()) {
        CharacterTable t = load_fixture(fx.stem);
        long long sumSq = 0;
        for (int i = 0; i < t.num_classes(); ++i) {
            long long d = t.degree(i);
            CHECK(d >= 1);
            sumSq += d * d;
        }
        CHECK(sumSq == t.order());
    }
}
