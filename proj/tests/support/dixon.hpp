#pragma once

#include <vector>

#include "support/group.hpp"

// Exact character tables by the Burnside-Dixon method: simultaneous
// diagonalization of the class-sum matrices over F_q (q = 1 mod exp(G)),
// then exact recovery of each value as a nonnegative-integer combination of
// roots of unity. Oracle code: shares nothing with the engine's cyclotomic
// arithmetic.

namespace blockscope::testsupport {

struct CharValue {
    long long n = 1;                   // zeta order (the class element order)
    std::vector<long long> mult;       // value = sum mult[s] * zeta_n^s
};

struct DixonTable {
    std::vector<long long> degrees;              // per character
    std::vector<std::vector<CharValue>> values;  // characters x classes
};

DixonTable dixon_character_table(const Group& g);

} // namespace blockscope::testsupport
