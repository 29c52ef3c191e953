#pragma once

#include <string>

#include "blockscope/character_table.hpp"

namespace blockscope {

// CTJ: character tables as JSON.
//
// { "name": str, "order": int,
//   "classes": [ { "name": str, "size": int, "centralizer": int,
//                  "elementOrder": int, "inverse": int } ],
//   "powerMaps": { "<prime>": [int, ...] },
//   "irreducibles": [ [ value, ... ], ... ],
//   "meta": { ... }   // optional, ignored by the engine
// }
//
// where value is int | [num, den] | {"n": int, "coeffs": [[exp, num, den],...]}
// meaning sum of (num/den) * zeta_n^exp. Indices are 0-based.

// Parses and validates. Throws ParseError on malformed input and
// ValidationError (with coordinates) on invariant violations. Warnings from
// lenient validation are appended to *warnings when given.
CharacterTable parse_table(const std::string& text, bool lenient = false,
                           std::vector<std::string>* warnings = nullptr);

CharacterTable load_table(const std::string& path, bool lenient = false,
                          std::vector<std::string>* warnings = nullptr);

// Canonical serialization; parse(serialize(t)) == t and serialization is
// byte-stable for a given table.
std::string serialize_table(const CharacterTable& table);

} // namespace blockscope
