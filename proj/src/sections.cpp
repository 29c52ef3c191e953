#include "blockscope/sections.hpp"

#include <algorithm>

namespace blockscope {

namespace {

std::vector<int> section_of(const CharacterTable& table, long long p, int x) {
    auto sp = table.p_sections(p);
    for (size_t i = 0; i < sp.representatives.size(); ++i)
        if (sp.representatives[i] == x) return sp.memberClasses[i];
    throw UsageError("class " + std::to_string(x) +
                     " is not a p-section representative");
}

} // namespace

std::vector<std::vector<Cyclotomic>> section_gram(const CharacterTable& table,
                                                  const Block& B, int x) {
    std::vector<int> sec = section_of(table, B.p, x);
    const size_t n = sec.size();
    std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Cyclotomic s;
            for (int chi : B.characters)
                s = s + table.value(chi, sec[i]) * table.value(chi, sec[j]).conjugate();
            m[i][j] = s;
        }
    return m;
}

DivisorMultiset local_elementary_divisors(std::vector<std::vector<Cyclotomic>> m,
                                          const LocalContext& ctx) {
    DivisorMultiset out;
    const size_t n = m.size();
    std::vector<bool> rowDone(n, false), colDone(n, false);
    for (;;) {
        bool found = false;
        Rat best;
        size_t pr = 0, pc = 0;
        for (size_t i = 0; i < n; ++i) {
            if (rowDone[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (colDone[j] || m[i][j].is_zero()) continue;
                Rat v = p_valuation_rational(m[i][j], ctx);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (!found) break;
        if (best.get_den() != 1)
            throw Error("non-integral elementary divisor");
        if (best < 0)
            throw UsageError("local_elementary_divisors: entries not p-integral");
        out[best.get_num().get_si()]++;
        // Clear the pivot column with row operations; the remaining minor is
        // the Schur complement.
        Cyclotomic pivInv = m[pr][pc].inverse();
        for (size_t i = 0; i < n; ++i) {
            if (rowDone[i] || i == pr || m[i][pc].is_zero()) continue;
            Cyclotomic f = m[i][pc] * pivInv;
            for (size_t j = 0; j < n; ++j) {
                if (colDone[j]) continue;
                m[i][j] = m[i][j] - f * m[pr][j];
            }
        }
        rowDone[pr] = true;
        colDone[pc] = true;
    }
    return out;
}

SectionAnalysis analyze_section(const CharacterTable& table, const Block& B,
                                int x, const LocalContext& ctx) {
    SectionAnalysis sa;
    sa.representativeClass = x;
    sa.sectionClasses = section_of(table, B.p, x);
    sa.gram = section_gram(table, B, x);
    sa.elementaryDivisors = local_elementary_divisors(sa.gram, ctx);
    auto it = sa.elementaryDivisors.find(B.defect);
    sa.majorCount = (it == sa.elementaryDivisors.end()) ? 0 : it->second;
    return sa;
}

long long major_subsection_count(const CharacterTable& table, const Block& B,
                                 int x, const LocalContext& ctx) {
    return analyze_section(table, B, x, ctx).majorCount;
}

long long exp_center_of_defect(const CharacterTable& table, const Block& B,
                               const LocalContext& ctx) {
    long long best = 1;
    for (int x : table.p_sections(B.p).representatives)
        if (major_subsection_count(table, B, x, ctx) > 0)
            best = std::max(best, table.cls(x).elementOrder);
    return best;
}

bool verify_section_field_index(const CharacterTable& table, const Block& B,
                                int x) {
    const long long n = table.exponent();
    std::vector<int> sec = section_of(table, B.p, x);
    std::vector<Cyclotomic> values;
    for (int chi : B.characters)
        for (int j : sec) values.push_back(table.value(chi, j));
    UnitSubgroup H = field_stabilizer(values, n);
    UnitSubgroup U = UnitSubgroup::congruent_one_mod(n, p_prime_part_ll(n, B.p));
    long long indexP = field_index_p_part(H, U, B.p);
    long long o = table.cls(x).elementOrder;
    if (o == 1) return indexP == 1;
    return B.p * indexP == o;
}

std::map<long long, long long> subsection_order_census(const CharacterTable& table,
                                                       const Block& B,
                                                       const LocalContext& ctx) {
    std::map<long long, long long> census;
    for (int x : table.p_sections(B.p).representatives) {
        long long c = major_subsection_count(table, B, x, ctx);
        if (c == 0) continue;
        census[valuation_ll(table.cls(x).elementOrder, B.p)] += c;
    }
    return census;
}

FusionReport fusion_number(const CharacterTable& table,
                           const std::vector<Block>& blocks, int blockIndex) {
    const Block& B = blocks[blockIndex];
    const long long p = B.p;
    FusionReport rep;

    std::vector<int> unionChars;
    int count = 0;
    for (const auto& other : blocks) {
        if (other.galoisOrbitId != B.galoisOrbitId) continue;
        unionChars.insert(unionChars.end(), other.characters.begin(),
                          other.characters.end());
        ++count;
    }
    std::sort(unionChars.begin(), unionChars.end());
    rep.galoisBlockCount = count;

    // Union Gram over all classes; Galois-stable, hence rational integers.
    const int k = table.num_classes();
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Cyclotomic s;
            for (int chi : unionChars)
                s = s + table.value(chi, i) * table.value(chi, j).conjugate();
            if (!s.is_rational() || s.rational_value().get_den() != 1)
                throw ValidationError(
                    "table inconsistent: union Gram matrix not integral");
            m[i][j] = s.rational_value();
        }

    // Nonzero elementary-divisor p-parts by minimal-valuation pivoting over
    // the rationals.
    DivisorMultiset unionDivs;
    std::vector<bool> rowDone(k, false), colDone(k, false);
    for (;;) {
        bool found = false;
        int bestV = 0, pr = 0, pc = 0;
        for (int i = 0; i < k; ++i) {
            if (rowDone[i]) continue;
            for (int j = 0; j < k; ++j) {
                if (colDone[j] || m[i][j] == 0) continue;
                int v = v_p(m[i][j], p);
                if (!found || v < bestV) {
                    found = true;
                    bestV = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (!found) break;
        unionDivs[bestV]++;
        Rat pivInv = Rat(1) / m[pr][pc];
        for (int i = 0; i < k; ++i) {
            if (rowDone[i] || i == pr || m[i][pc] == 0) continue;
            Rat f = m[i][pc] * pivInv;
            f.canonicalize();
            for (int j = 0; j < k; ++j) {
                if (colDone[j]) continue;
                m[i][j] -= f * m[pr][j];
                m[i][j].canonicalize();
            }
        }
        rowDone[pr] = true;
        colDone[pc] = true;
    }

    long long totalDivisors = 0;
    for (auto& [e, mult] : unionDivs) totalDivisors += mult;
    long long expected = 0;
    for (const auto& other : blocks)
        if (other.galoisOrbitId == B.galoisOrbitId) expected += other.k();
    if (totalDivisors != expected)
        throw ValidationError(
            "table inconsistent: union divisor count != sum of k(B)");

    Rat gammaUnion(0);
    for (auto& [e, mult] : unionDivs) {
        Int pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        gammaUnion += Rat(to_int(mult), pe);
    }
    gammaUnion.canonicalize();
    rep.gamma = gammaUnion / to_rat(count);
    rep.gamma.canonicalize();

    for (auto& [e, mult] : unionDivs) {
        if (mult % count != 0)
            throw ValidationError(
                "table inconsistent: union divisor multiplicity not divisible "
                "by the Galois block count");
        rep.elementaryDivisors[e] = mult / count;
    }
    return rep;
}

} // namespace blockscope
