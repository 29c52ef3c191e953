#pragma once

#include "support/dixon.hpp"

namespace blockscope::testsupport {

// Independent p-block partition: central characters are reduced in the
// Galois ring (Z/p^L)[y]/(g) with a Teichmueller-lifted root of unity,
// nothing shared with the engine's cyclotomic-factor machinery. Returns the
// partition of character indices, each part sorted, parts ordered by
// (defect descending, least character index).
std::vector<std::vector<int>> reference_blocks(const Group& g,
                                               const DixonTable& table,
                                               long long p);

} // namespace blockscope::testsupport
