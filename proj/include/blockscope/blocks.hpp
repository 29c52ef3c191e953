#pragma once

#include <optional>

#include "blockscope/character_table.hpp"
#include "blockscope/unit_group.hpp"

namespace blockscope {

// A p-block: the set of irreducible characters whose central characters
// agree after reduction modulo the chosen prime ideal over p.
struct Block {
    long long p = 0;
    std::vector<int> characters;  // ascending row indices
    int defect = 0;               // d with |D| = p^d
    std::vector<int> heights;     // aligned with characters
    int galoisOrbitId = 0;        // groups Galois-conjugate blocks

    long long k() const { return static_cast<long long>(characters.size()); }
    bool contains(int chi) const {
        return std::binary_search(characters.begin(), characters.end(), chi);
    }
};

// omega_chi(K) = |K| chi(g_K) / chi(1); entries are algebraic integers.
std::vector<Cyclotomic> central_character(const CharacterTable& table, int chi);

// The context used for block distribution at p: m = p'-part of exp(G).
LocalContext block_context(const CharacterTable& table, long long p,
                           int variant = 0);

// Blocks in canonical order (defect descending, then smallest character
// index). For p not dividing |G| every character is its own block of
// defect 0.
std::vector<Block> block_partition(const CharacterTable& table, long long p);
std::vector<Block> block_partition(const CharacterTable& table, long long p,
                                   const LocalContext& ctx);

// Classes where some character of B does not vanish.
std::vector<int> defect_class_support(const CharacterTable& table, const Block& B);
bool is_defect_group_normal(const CharacterTable& table, const Block& B);

// Orbits of Irr(B) under G = { k mod |G| : k = 1 (mod |G|_{p'}) }.
std::vector<std::vector<int>> p_conjugacy_orbits(const CharacterTable& table,
                                                 const Block& B);

// Exact count of irreducible Brauer characters: rank of the block's value
// matrix on p-regular classes.
long long l_of_block(const CharacterTable& table, const Block& B);

// A block splitting: per block (same order as `blocks`), the classes whose
// projected class sums form a basis of the block's center; the sets
// partition all classes. Throws Error("splitting search exhausted") if no
// partition is found.
std::vector<std::vector<int>> block_splitting(const CharacterTable& table,
                                              const std::vector<Block>& blocks,
                                              const LocalContext& ctx);

} // namespace blockscope
