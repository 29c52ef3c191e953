#pragma once

#include <map>

#include "blockscope/blocks.hpp"

namespace blockscope {

// Multiset of p-power elementary divisors, as exponent -> multiplicity.
using DivisorMultiset = std::map<long long, long long>;

// Analysis of one p-section for one block: the Gram matrix of block
// character values on the section, its nonzero elementary divisors over the
// local valuation ring, and the number of major subsections at the
// representative.
struct SectionAnalysis {
    int representativeClass = -1;
    std::vector<int> sectionClasses;
    std::vector<std::vector<Cyclotomic>> gram;
    DivisorMultiset elementaryDivisors;
    long long majorCount = 0;
};

struct FusionReport {
    Rat gamma;                      // exact
    DivisorMultiset elementaryDivisors; // attributed to this block
    int galoisBlockCount = 1;
};

// Gram matrix M[i][j] = sum_{chi in B} chi(g_i) conj(chi(g_j)) over the
// p-section of x (x a section representative class).
std::vector<std::vector<Cyclotomic>> section_gram(const CharacterTable& table,
                                                  const Block& B, int x);

// Nonzero elementary divisors (as p-powers) of a p-integral cyclotomic
// matrix over the local ring of ctx, by minimal-valuation pivoting. Ties
// broken at the lexicographically smallest (row, column).
DivisorMultiset local_elementary_divisors(
    std::vector<std::vector<Cyclotomic>> m, const LocalContext& ctx);

SectionAnalysis analyze_section(const CharacterTable& table, const Block& B,
                                int x, const LocalContext& ctx);

long long major_subsection_count(const CharacterTable& table, const Block& B,
                                 int x, const LocalContext& ctx);

// Largest element order among p-classes carrying a major subsection:
// the exponent of the center of the defect group.
long long exp_center_of_defect(const CharacterTable& table, const Block& B,
                               const LocalContext& ctx);

// Checks p * |Q(X_x) Q_m : Q_m|_p = o(x) at a major class x (index-one check
// at the identity).
bool verify_section_field_index(const CharacterTable& table, const Block& B,
                                int x);

// census[i] = number of G-classes of major subsections (x, b) with
// o(x) = p^i.
std::map<long long, long long> subsection_order_census(const CharacterTable& table,
                                                       const Block& B,
                                                       const LocalContext& ctx);

// gamma(B) via the union of Galois-conjugate blocks: the union Gram matrix
// is integral; its nonzero elementary-divisor p-parts give
// gamma(union) = sum 1/e_i, and gamma(B) = gamma(union) / #conjugates.
FusionReport fusion_number(const CharacterTable& table,
                           const std::vector<Block>& blocks, int blockIndex);

} // namespace blockscope
