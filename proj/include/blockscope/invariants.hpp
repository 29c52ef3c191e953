#pragma once

#include <optional>
#include <string>

#include "blockscope/sections.hpp"

namespace blockscope {

enum class TameType { None, KleinFour, DihedralClass };

std::string tame_type_name(TameType t);

struct NilpotencyIndicators {
    bool defectZero = false;
    bool allDegreesEqual = false;
    bool heightZeroDegreesEqual = false;
    bool gammaEqualsOne = false;
};

struct AbelianData {
    bool necessaryCheck = false;        // all p-classes in the support major
    long long exponentExp = 0;          // exp(D) = p^exponentExp when abelian
    std::optional<std::vector<int>> isoType; // partition of d, when decided
    bool isoUndetermined = false;       // d1 = d2 in the p^5/exp-p^2 branch
};

// Everything the reports serialize for one block.
struct BlockReport {
    long long p = 0;
    int blockIndex = 0;
    std::vector<int> characters;
    int defect = 0;
    long long kB = 0;
    long long lB = 0;
    Rat gamma;
    DivisorMultiset elementaryDivisors;
    std::vector<long long> orbitSizes;  // p-conjugacy orbit sizes, sorted
    bool cyclicDefect = false;
    long long expCenterExp = 0;         // exp(Z(D)) = p^expCenterExp
    AbelianData abelian;
    std::optional<bool> dd4;            // p = 2 and d >= 3 only
    TameType tame = TameType::None;
    NilpotencyIndicators nilpotency;
    bool defectGroupNormal = false;
    std::vector<std::string> anomalies;
};

// Some p-conjugacy orbit of Irr(B) has size divisible by p^(d-1); true for
// d = 0 as a degenerate case.
bool cyclic_defect_test(const CharacterTable& table, const Block& B);

// p * |Q(B) : Q(B) n Q_m|_p (the exponent of D when D is abelian) together
// with the necessary-for-abelian check.
AbelianData abelian_exponent(const CharacterTable& table, const Block& B,
                             const LocalContext& ctx);

// Isomorphism type of an abelian defect group of order <= p^5, as the
// partition of d by cyclic-factor exponents. Fills isoType/isoUndetermined
// of `data` using the subsection census.
void abelian_iso_type(const CharacterTable& table, const Block& B,
                      const LocalContext& ctx, AbelianData& data);

// k(B) < 2^d and Q(B)Q_m n Q_{2^d} = Q(zeta +- zeta^{-1}); p = 2, d >= 3.
bool dd4_test(const CharacterTable& table, const Block& B);

TameType tame_type(const CharacterTable& table, const Block& B,
                   const LocalContext& ctx);

// Assembles the whole report for blocks[blockIndex]. assertAbelian enables
// the iso-type computation (abelianness itself is a caller assertion).
BlockReport build_block_report(const CharacterTable& table,
                               const std::vector<Block>& blocks, int blockIndex,
                               bool assertAbelian);

} // namespace blockscope
