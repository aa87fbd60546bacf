#pragma once

// Built-in diagrams with the invariant values they are expected to produce.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "medialink/diagram.hpp"

namespace medialink {

struct FixtureEntry {
  std::string name;
  LinkDiagram diagram;
  /// Partial fingerprint JSON; every key present must match recomputation.
  nlohmann::json expected;
  std::string provenance;
  bool stretch = false;
};

const std::vector<FixtureEntry>& fixture_corpus();
/// Usage error for unknown names.
const FixtureEntry& fixture(std::string_view name);

/// "fixture:NAME" or a path to a JSON / PD file.
LinkDiagram load_diagram(const std::string& source);

/// Joins two diagrams by reconnecting the ends of arc1 (in d1) and arc2 (in
/// d2); the two components become one.
LinkDiagram connected_sum(const LinkDiagram& d1, const std::string& arc1, const LinkDiagram& d2,
                          const std::string& arc2);

/// Paths (like "nu/torsion") where `actual` disagrees with the keys present in
/// `expected`. Arrays must match exactly.
std::vector<std::string> expected_mismatches(const nlohmann::json& expected,
                                             const nlohmann::json& actual);

}  // namespace medialink
