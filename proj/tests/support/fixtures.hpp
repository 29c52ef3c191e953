#pragma once

#include <string>
#include <vector>

#include "blockscope/character_table.hpp"
#include "support/blockref.hpp"

namespace blockscope::testsupport {

struct Fixture {
    std::string stem; // file stem, e.g. "s3"
    Group group;
};

// Every shipped fixture group, deterministic order.
std::vector<Fixture> fixture_catalog();

// CTJ document for the group: Dixon values + group-derived class data,
// normalized through the engine's canonical serializer (which also runs the
// full validation).
std::string fixture_ctj(const Group& g);

// Reference blocks/defects/heights JSON for (group, p), from the
// independent Galois-ring oracle.
std::string expected_blocks_json(const Group& g, const DixonTable& t, long long p);

std::string fixture_dir();
std::string expected_dir();
std::string fixture_path(const std::string& stem);
blockscope::CharacterTable load_fixture(const std::string& stem);

} // namespace blockscope::testsupport
