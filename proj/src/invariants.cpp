#include "blockscope/invariants.hpp"

#include <algorithm>

namespace blockscope {

std::string tame_type_name(TameType t) {
    switch (t) {
        case TameType::KleinFour: return "klein-four";
        case TameType::DihedralClass: return "dihedral-semidihedral-quaternion-class";
        default: return "none";
    }
}

bool cyclic_defect_test(const CharacterTable& table, const Block& B) {
    if (B.defect == 0) return true;
    Int target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(B.p),
                  static_cast<unsigned long>(B.defect - 1));
    for (const auto& orbit : p_conjugacy_orbits(table, B)) {
        Int size = to_int(static_cast<long long>(orbit.size()));
        if (size % target == 0) return true;
    }
    return false;
}

AbelianData abelian_exponent(const CharacterTable& table, const Block& B,
                             const LocalContext& ctx) {
    AbelianData data;
    const long long n = table.exponent();

    // Necessity: every p-element class in the block's support carries a
    // major subsection ("all subsections are major").
    data.necessaryCheck = true;
    auto support = defect_class_support(table, B);
    for (int j : support) {
        long long o = table.cls(j).elementOrder;
        if (p_part_ll(o, B.p) != o) continue;
        if (major_subsection_count(table, B, j, ctx) == 0) {
            data.necessaryCheck = false;
            break;
        }
    }

    if (B.defect == 0) {
        data.exponentExp = 0;
        return data;
    }
    std::vector<Cyclotomic> values;
    for (int chi : B.characters)
        for (int j = 0; j < table.num_classes(); ++j)
            values.push_back(table.value(chi, j));
    UnitSubgroup H = field_stabilizer(values, n);
    UnitSubgroup U = UnitSubgroup::congruent_one_mod(n, p_prime_part_ll(n, B.p));
    long long indexP = field_index_p_part(H, U, B.p);
    data.exponentExp = 1 + valuation_ll(indexP, B.p);
    return data;
}

void abelian_iso_type(const CharacterTable& table, const Block& B,
                      const LocalContext& ctx, AbelianData& data) {
    const int d = B.defect;
    const long long p = B.p;
    if (d > 5) return; // undecided beyond p^5
    if (d == 0) {
        data.isoType = std::vector<int>{};
        return;
    }
    const int E = static_cast<int>(data.exponentExp); // exp(D) = p^E

    auto forced = [&](std::initializer_list<int> parts) {
        data.isoType = std::vector<int>(parts);
    };

    if (E == d) { forced({d}); return; }
    if (E == 1) { data.isoType = std::vector<int>(d, 1); return; }
    if (d == 3) { forced({2, 1}); return; }              // E = 2
    if (d == 4 && E == 3) { forced({3, 1}); return; }
    if (d == 5 && E == 4) { forced({4, 1}); return; }
    // Remaining shapes need the orbit counts d_i of elements of order p^i.
    auto census = subsection_order_census(table, B, ctx);
    auto dOf = [&](int i) -> long long {
        auto it = census.find(i);
        long long c = (it == census.end()) ? 0 : it->second;
        long long scale = pow_ll(p, i - 1);
        if (c % scale != 0) throw Error("inconsistent census");
        return c / scale;
    };
    long long d1 = dOf(1), d2 = dOf(2);
    if (d == 4) {
        // E = 2: C_{p^2}^2 has d1 <= d2, C_{p^2} x C_p^2 has d1 > d2.
        if (d1 <= d2) forced({2, 2});
        else forced({2, 1, 1});
        return;
    }
    if (E == 3) {
        // d = 5: restrict to orders <= p^2 and reuse the p^4 comparison.
        if (d1 <= d2) forced({3, 2});
        else forced({3, 1, 1});
        return;
    }
    // d = 5, E = 2: C_{p^2} x C_p^3 vs C_{p^2}^2 x C_p.
    if (d1 > d2) forced({2, 1, 1, 1});
    else if (d1 < d2) forced({2, 2, 1});
    else data.isoUndetermined = true; // strict inequalities fail: bad input
}

bool dd4_test(const CharacterTable& table, const Block& B) {
    if (B.p != 2 || B.defect < 3)
        throw UsageError("dd4_test requires p = 2 and defect >= 3");
    const int d = B.defect;
    Int twoD;
    mpz_ui_pow_ui(twoD.get_mpz_t(), 2, static_cast<unsigned long>(d));
    if (to_int(B.k()) >= twoD) return false;

    const long long n = lcm_ll(table.exponent(), pow_ll(2, d));
    std::vector<Cyclotomic> values;
    for (int chi : B.characters)
        for (int j = 0; j < table.num_classes(); ++j)
            values.push_back(table.value(chi, j));
    UnitSubgroup H = field_stabilizer(values, n);
    UnitSubgroup U = UnitSubgroup::congruent_one_mod(n, p_prime_part_ll(n, 2));
    // Gal(Q_{2^d} / Q(B)Q_m n Q_{2^d}) is the image of H n U mod 2^d.
    UnitSubgroup S = H.intersect(U).image_mod(pow_ll(2, d));

    Cyclotomic zeta = Cyclotomic::root_of_unity(pow_ll(2, d - 1), 1);
    Cyclotomic zinv = zeta.inverse();
    UnitSubgroup plus = field_stabilizer({zeta + zinv}, pow_ll(2, d));
    UnitSubgroup minus = field_stabilizer({zeta - zinv}, pow_ll(2, d));
    return S == plus || S == minus;
}

TameType tame_type(const CharacterTable& table, const Block& B,
                   const LocalContext& ctx) {
    if (B.p != 2) return TameType::None;
    if (B.defect == 2) {
        AbelianData data = abelian_exponent(table, B, ctx);
        if (data.necessaryCheck && data.exponentExp == 1) return TameType::KleinFour;
        return TameType::None;
    }
    if (B.defect >= 3 && dd4_test(table, B)) return TameType::DihedralClass;
    return TameType::None;
}

BlockReport build_block_report(const CharacterTable& table,
                               const std::vector<Block>& blocks, int blockIndex,
                               bool assertAbelian) {
    const Block& B = blocks[blockIndex];
    LocalContext ctx = block_context(table, B.p);
    BlockReport rep;
    rep.p = B.p;
    rep.blockIndex = blockIndex;
    rep.characters = B.characters;
    rep.defect = B.defect;
    rep.kB = B.k();
    rep.lB = l_of_block(table, B);

    FusionReport fusion = fusion_number(table, blocks, blockIndex);
    rep.gamma = fusion.gamma;
    rep.elementaryDivisors = fusion.elementaryDivisors;

    for (const auto& orbit : p_conjugacy_orbits(table, B))
        rep.orbitSizes.push_back(static_cast<long long>(orbit.size()));
    std::sort(rep.orbitSizes.begin(), rep.orbitSizes.end());

    rep.cyclicDefect = cyclic_defect_test(table, B);
    rep.expCenterExp =
        valuation_ll(exp_center_of_defect(table, B, ctx), B.p);
    rep.abelian = abelian_exponent(table, B, ctx);
    if (assertAbelian && rep.abelian.necessaryCheck && B.defect <= 5)
        abelian_iso_type(table, B, ctx, rep.abelian);

    if (B.p == 2 && B.defect >= 3) rep.dd4 = dd4_test(table, B);
    rep.tame = tame_type(table, B, ctx);

    rep.nilpotency.defectZero = (B.defect == 0);
    long long deg0 = table.degree(B.characters.front());
    rep.nilpotency.allDegreesEqual = true;
    rep.nilpotency.heightZeroDegreesEqual = true;
    long long h0deg = -1;
    for (size_t i = 0; i < B.characters.size(); ++i) {
        long long deg = table.degree(B.characters[i]);
        if (deg != deg0) rep.nilpotency.allDegreesEqual = false;
        if (B.heights[i] == 0) {
            if (h0deg < 0) h0deg = deg;
            else if (deg != h0deg) rep.nilpotency.heightZeroDegreesEqual = false;
        }
    }
    rep.nilpotency.gammaEqualsOne = (rep.gamma == 1);
    rep.defectGroupNormal = is_defect_group_normal(table, B);

    if (rep.gamma < 1) rep.anomalies.push_back("gamma below one");
    // Surveillance flag: gamma = 1 should match the height-zero-degree
    // criterion for nilpotency. (The all-degrees version only characterizes
    // nilpotency for abelian defect groups; nonabelian p-groups break it.)
    if (rep.nilpotency.gammaEqualsOne != rep.nilpotency.heightZeroDegreesEqual)
        rep.anomalies.push_back("conjecture-relevant anomaly: gamma = 1 and equal "
                                "height-zero degrees disagree");
    return rep;
}

} // namespace blockscope
