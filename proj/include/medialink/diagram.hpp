#pragma once

// Combinatorial oriented link diagrams.
//
// A crossing stores orientation-level data: the over arc, the under arc that
// enters the crossing, the under arc that leaves it, and the writhe. The
// geometric roles used by the crossing relation are derived from these:
//
//   writhe +1:  a2 = under_in,  a3 = under_out
//   writhe -1:  a2 = under_out, a3 = under_in
//
// so that in every case a3 = a2 ▷ a1 with a1 the over arc.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace medialink {

struct Arc {
  std::string id;
  int component = 1;  // 1-based

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Crossing {
  std::string id;
  std::string over;
  std::string under_in;
  std::string under_out;
  int writhe = 1;

  const std::string& a1() const { return over; }
  const std::string& a2() const { return writhe > 0 ? under_in : under_out; }
  const std::string& a3() const { return writhe > 0 ? under_out : under_in; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
  int mu = 1;
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;

  std::optional<std::size_t> arc_index(std::string_view id) const;
  std::optional<std::size_t> crossing_index(std::string_view id) const;
  /// Component of an arc; usage error for unknown ids.
  int component_of(std::string_view arc_id) const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// Every violated structural invariant, one message each. Empty iff valid.
std::vector<std::string> validate(const LinkDiagram& d);
/// Throws a validation error listing all violations.
void require_valid(const LinkDiagram& d);

/// Accepts the JSON diagram format or a PD-code line; the first
/// non-space character decides ('{' means JSON). The result is validated.
LinkDiagram parse_diagram(std::string_view text);
LinkDiagram parse_json_diagram(std::string_view text);
/// PD import: "X[i,j,k,l] ..." listed counterclockwise from the incoming
/// under-strand. Over-strand orientation is inferred by strand tracing; a
/// component that never passes under is oriented so labels ascend.
LinkDiagram parse_pd(std::string_view text);

nlohmann::json to_json(const LinkDiagram& d);
LinkDiagram from_json(const nlohmann::json& j);
/// JSON with sorted keys, two-space indent.
std::string render_json(const LinkDiagram& d);

struct ComponentTrace {
  /// cycles[i] is the cyclic arc order of component i+1.
  std::vector<std::vector<std::string>> cycles;
  /// arc -> (crossing where it starts, crossing where it ends); both empty
  /// for a crossing-free component.
  std::map<std::string, std::pair<std::string, std::string>> ends;
};

ComponentTrace trace_components(const LinkDiagram& d);

/// Every arc is under_in at one crossing and under_out at a different one,
/// and those two crossings have writhes +1 and -1.
bool has_alternating_writhes(const LinkDiagram& d);

/// Disjoint union. Arc and crossing ids of d2 get a prefix when they would
/// collide; d2's component indices are shifted by d1.mu.
LinkDiagram split_union(const LinkDiagram& d1, const LinkDiagram& d2);

/// Renumbers components: component i becomes perm[i-1]. perm must be a
/// bijection of 1..mu.
LinkDiagram relabel_components(const LinkDiagram& d, const std::vector<int>& perm);

/// An id built from `stem` that is not in use as an arc or crossing id.
std::string fresh_id(const LinkDiagram& d, const std::string& stem);

}  // namespace medialink
