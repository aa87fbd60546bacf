#include "medialink/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>

#include "medialink/error.hpp"

namespace medialink {

std::optional<std::size_t> LinkDiagram::arc_index(std::string_view id) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> LinkDiagram::crossing_index(std::string_view id) const {
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (crossings[i].id == id) return i;
  }
  return std::nullopt;
}

int LinkDiagram::component_of(std::string_view arc_id) const {
  auto i = arc_index(arc_id);
  if (!i) fail(ErrorKind::Usage, "unknown arc '" + std::string(arc_id) + "'");
  return arcs[*i].component;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const LinkDiagram& d) {
  std::vector<std::string> out;
  if (d.mu < 1) {
    out.push_back("mu must be at least 1");
    return out;
  }

  std::map<std::string, int> component;
  for (const auto& a : d.arcs) {
    if (a.id.empty()) out.push_back("arc with empty id");
    if (!component.emplace(a.id, a.component).second) {
      out.push_back("duplicate arc id " + a.id);
    }
    if (a.component < 1 || a.component > d.mu) {
      out.push_back("arc " + a.id + " has component " + std::to_string(a.component) +
                    " outside 1.." + std::to_string(d.mu));
    }
  }
  for (int i = 1; i <= d.mu; ++i) {
    bool seen = std::any_of(d.arcs.begin(), d.arcs.end(),
                            [i](const Arc& a) { return a.component == i; });
    if (!seen) out.push_back("component " + std::to_string(i) + " has no arcs");
  }

  std::set<std::string> crossing_ids;
  std::map<std::string, int> in_count, out_count;
  bool references_ok = true;
  for (const auto& c : d.crossings) {
    if (!crossing_ids.insert(c.id).second) out.push_back("duplicate crossing id " + c.id);
    for (const std::string* ref : {&c.over, &c.under_in, &c.under_out}) {
      if (!component.count(*ref)) {
        out.push_back("crossing " + c.id + " references unknown arc '" + *ref + "'");
        references_ok = false;
      }
    }
    if (c.writhe != 1 && c.writhe != -1) {
      out.push_back("crossing " + c.id + " has writhe " + std::to_string(c.writhe) +
                    " (must be +1 or -1)");
    }
    if (component.count(c.under_in) && component.count(c.under_out) &&
        component[c.under_in] != component[c.under_out]) {
      out.push_back("under arcs of crossing " + c.id + " on different components");
    }
    ++in_count[c.under_in];
    ++out_count[c.under_out];
  }

  bool counts_ok = true;
  for (const auto& a : d.arcs) {
    int ni = in_count[a.id];
    int no = out_count[a.id];
    if (ni > 1 || no > 1 || ni != no) {
      out.push_back("arc " + a.id + " is under_in at " + std::to_string(ni) +
                    " crossings and under_out at " + std::to_string(no));
      counts_ok = false;
    }
  }

  if (out.empty() && references_ok && counts_ok) {
    // Each component must be one closed walk through all of its arcs.
    std::map<std::string, std::string> next;  // arc -> following arc
    for (const auto& c : d.crossings) next[c.under_in] = c.under_out;
    for (int i = 1; i <= d.mu; ++i) {
      std::vector<std::string> members;
      for (const auto& a : d.arcs) {
        if (a.component == i) members.push_back(a.id);
      }
      const std::string& start = members.front();
      if (!next.count(start)) {
        if (members.size() != 1) {
          out.push_back("component " + std::to_string(i) +
                        " has a crossing-free arc but more than one arc");
        }
        continue;
      }
      std::size_t steps = 0;
      std::string cur = start;
      do {
        cur = next.at(cur);
        ++steps;
      } while (cur != start && steps <= members.size());
      if (cur != start || steps != members.size()) {
        out.push_back("component " + std::to_string(i) + " is not a single cycle");
      }
    }
  }
  return out;
}

void require_valid(const LinkDiagram& d) {
  auto violations = validate(d);
  if (violations.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& v : violations) msg += "\n  " + v;
  fail(ErrorKind::Validation, msg);
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const LinkDiagram& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : d.arcs) arcs.push_back({{"id", a.id}, {"component", a.component}});
  nlohmann::json crossings = nlohmann::json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back({{"id", c.id},
                         {"over", c.over},
                         {"under_in", c.under_in},
                         {"under_out", c.under_out},
                         {"writhe", c.writhe}});
  }
  return {{"mu", d.mu}, {"arcs", arcs}, {"crossings", crossings}};
}

LinkDiagram from_json(const nlohmann::json& j) {
  auto field = [](const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
      fail(ErrorKind::Parse, where + ": missing field \"" + key + "\"");
    }
    return obj.at(key);
  };
  auto str = [&](const nlohmann::json& obj, const char* key, const std::string& where) {
    auto v = field(obj, key, where);
    if (!v.is_string()) fail(ErrorKind::Parse, where + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
  };
  auto integer = [&](const nlohmann::json& obj, const char* key, const std::string& where) {
    auto v = field(obj, key, where);
    if (!v.is_number_integer()) {
      fail(ErrorKind::Parse, where + ": field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
  };

  LinkDiagram d;
  d.mu = integer(j, "mu", "diagram");
  auto arcs = field(j, "arcs", "diagram");
  auto crossings = field(j, "crossings", "diagram");
  if (!arcs.is_array() || !crossings.is_array()) {
    fail(ErrorKind::Parse, "diagram: \"arcs\" and \"crossings\" must be arrays");
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string where = "arcs[" + std::to_string(i) + "]";
    d.arcs.push_back({str(arcs[i], "id", where), integer(arcs[i], "component", where)});
  }
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    std::string where = "crossings[" + std::to_string(i) + "]";
    const auto& c = crossings[i];
    d.crossings.push_back({str(c, "id", where), str(c, "over", where),
                           str(c, "under_in", where), str(c, "under_out", where),
                           integer(c, "writhe", where)});
  }
  return d;
}

LinkDiagram parse_json_diagram(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("JSON syntax error at byte ") +
                               std::to_string(e.byte) + ": " + e.what());
  }
  LinkDiagram d = from_json(j);
  require_valid(d);
  return d;
}

std::string render_json(const LinkDiagram& d) { return to_json(d).dump(2); }

// ---------------------------------------------------------------------------
// PD import

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::array<long, 4>> tokenize_pd(std::string_view text) {
  std::vector<std::array<long, 4>> out;
  std::size_t pos = 0;
  auto error = [&](const std::string& what) {
    fail(ErrorKind::Parse, "PD syntax error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) error(std::string("expected '") + c + "'");
    ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) error("expected a positive integer strand label");
    long v = std::stol(std::string(text.substr(start, pos - start)));
    if (v < 1) error("strand labels must be positive");
    return v;
  };
  skip();
  bool wrapped = false;
  if (text.substr(pos, 3) == "PD[") {
    wrapped = true;
    pos += 3;
  }
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    if (wrapped && text[pos] == ']') {
      ++pos;
      skip();
      if (pos != text.size()) error("trailing characters after PD[...]");
      wrapped = false;
      break;
    }
    expect('X');
    expect('[');
    std::array<long, 4> x{};
    for (int k = 0; k < 4; ++k) x[k] = number();  // separators are eaten by skip()
    expect(']');
    out.push_back(x);
  }
  if (wrapped) error("unterminated PD[");
  return out;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  auto xs = tokenize_pd(text);
  if (xs.empty()) fail(ErrorKind::Parse, "PD code has no crossings");

  // Endpoint nodes: (crossing, slot) -> 4*crossing + slot.
  std::map<long, std::vector<std::size_t>> where;  // label -> endpoint nodes
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (std::size_t s = 0; s < 4; ++s) where[xs[c][s]].push_back(4 * c + s);
  }
  for (const auto& [label, nodes] : where) {
    if (nodes.size() != 2) {
      fail(ErrorKind::Parse, "strand label " + std::to_string(label) + " appears " +
                                 std::to_string(nodes.size()) + " times (expected 2)");
    }
  }
  std::vector<long> labels;
  for (const auto& [label, nodes] : where) labels.push_back(label);
  std::map<long, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index[labels[i]] = i;

  const std::size_t nodes = 4 * xs.size();
  auto label_at = [&](std::size_t node) { return xs[node / 4][node % 4]; };
  // partner(node): the other endpoint of the same strand label.
  auto partner = [&](std::size_t node) {
    const auto& w = where.at(label_at(node));
    return w[0] == node ? w[1] : w[0];
  };
  // The endpoint paired with this one through the crossing (i<->k, j<->l).
  auto across = [](std::size_t node) { return 4 * (node / 4) + (node % 4 + 2) % 4; };

  // head[node] = 1 when the strand at that endpoint points into the crossing.
  std::vector<int> head(nodes, -1);
  std::vector<std::size_t> stack;
  auto assign = [&](std::size_t node, int value) {
    if (head[node] == -1) {
      head[node] = value;
      stack.push_back(node);
    } else if (head[node] != value) {
      fail(ErrorKind::Parse, "PD orientation is inconsistent at crossing " +
                                 std::to_string(node / 4 + 1));
    }
  };
  auto propagate = [&] {
    while (!stack.empty()) {
      std::size_t n = stack.back();
      stack.pop_back();
      assign(partner(n), 1 - head[n]);
      assign(across(n), 1 - head[n]);
    }
  };
  for (std::size_t c = 0; c < xs.size(); ++c) {
    assign(4 * c + 0, 1);
    assign(4 * c + 2, 0);
  }
  propagate();
  // Components that never pass under: orient so that labels ascend.
  for (long label : labels) {
    const auto& w = where.at(label);
    if (head[w[0]] != -1) continue;
    // Gather the labels of this unoriented strand system.
    std::set<long> group;
    std::vector<std::size_t> todo{w[0]};
    std::set<std::size_t> seen;
    while (!todo.empty()) {
      std::size_t n = todo.back();
      todo.pop_back();
      if (!seen.insert(n).second) continue;
      group.insert(label_at(n));
      todo.push_back(partner(n));
      todo.push_back(across(n));
    }
    auto next = group.upper_bound(label);
    std::size_t chosen = w[0];
    if (next != group.end()) {
      for (std::size_t n : w) {
        if (label_at(across(n)) == *next) chosen = n;
      }
    }
    assign(chosen, 1);
    propagate();
  }

  // Arcs: strands joined where they pass over. Components: joined everywhere.
  UnionFind arcs(labels.size()), comps(labels.size());
  for (const auto& x : xs) {
    arcs.unite(label_index[x[1]], label_index[x[3]]);
    comps.unite(label_index[x[1]], label_index[x[3]]);
    comps.unite(label_index[x[0]], label_index[x[2]]);
  }
  std::map<std::size_t, int> comp_number;  // root -> 1-based index (by min label)
  std::map<std::size_t, std::string> arc_name;
  int next_comp = 1, next_arc = 1;
  LinkDiagram d;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t cr = comps.find(i);
    if (!comp_number.count(cr)) comp_number[cr] = next_comp++;
    std::size_t ar = arcs.find(i);
    if (!arc_name.count(ar)) {
      arc_name[ar] = "a" + std::to_string(next_arc++);
      d.arcs.push_back({arc_name[ar], comp_number[cr]});
    }
  }
  d.mu = next_comp - 1;
  auto arc_of = [&](long label) { return arc_name.at(arcs.find(label_index.at(label))); };
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto& x = xs[c];
    // Over strand entering from slot l (west) and leaving at j (east) is a
    // positive crossing when the under strand runs south to north.
    int writhe = head[4 * c + 3] == 1 ? 1 : -1;
    d.crossings.push_back({"c" + std::to_string(c + 1), arc_of(x[1]), arc_of(x[0]),
                           arc_of(x[2]), writhe});
  }
  require_valid(d);
  return d;
}

LinkDiagram parse_diagram(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(),
                            [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) fail(ErrorKind::Parse, "empty diagram text");
  if (*first == '{') return parse_json_diagram(text);
  return parse_pd(text);
}

// ---------------------------------------------------------------------------
// Structure

ComponentTrace trace_components(const LinkDiagram& d) {
  ComponentTrace trace;
  std::map<std::string, std::string> next, start, end;
  for (const auto& c : d.crossings) {
    next[c.under_in] = c.under_out;
    end[c.under_in] = c.id;
    start[c.under_out] = c.id;
  }
  std::size_t total = 0;
  for (int i = 1; i <= d.mu; ++i) {
    std::vector<std::string> cycle;
    auto first = std::find_if(d.arcs.begin(), d.arcs.end(),
                              [i](const Arc& a) { return a.component == i; });
    if (first == d.arcs.end()) fail(ErrorKind::Internal, "component without arcs");
    std::string cur = first->id;
    do {
      cycle.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end()) break;
      cur = it->second;
      if (cycle.size() > d.arcs.size()) fail(ErrorKind::Internal, "broken component cycle");
    } while (cur != first->id);
    total += cycle.size();
    trace.cycles.push_back(std::move(cycle));
  }
  if (total != d.arcs.size()) fail(ErrorKind::Internal, "component cycles do not cover all arcs");
  for (const auto& a : d.arcs) {
    trace.ends[a.id] = {start.count(a.id) ? start[a.id] : std::string(),
                        end.count(a.id) ? end[a.id] : std::string()};
  }
  return trace;
}

bool has_alternating_writhes(const LinkDiagram& d) {
  std::map<std::string, std::vector<std::size_t>> in, out;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    in[d.crossings[i].under_in].push_back(i);
    out[d.crossings[i].under_out].push_back(i);
  }
  for (const auto& a : d.arcs) {
    if (in[a.id].size() != 1 || out[a.id].size() != 1) return false;
    std::size_t ci = in[a.id][0], co = out[a.id][0];
    if (ci == co) return false;
    if (d.crossings[ci].writhe + d.crossings[co].writhe != 0) return false;
  }
  return true;
}

std::string fresh_id(const LinkDiagram& d, const std::string& stem) {
  std::set<std::string> used;
  for (const auto& a : d.arcs) used.insert(a.id);
  for (const auto& c : d.crossings) used.insert(c.id);
  for (int n = 1;; ++n) {
    std::string candidate = stem + "_" + std::to_string(n);
    if (!used.count(candidate)) return candidate;
  }
}

LinkDiagram split_union(const LinkDiagram& d1, const LinkDiagram& d2) {
  std::set<std::string> used;
  for (const auto& a : d1.arcs) used.insert(a.id);
  for (const auto& c : d1.crossings) used.insert(c.id);
  bool collide = false;
  for (const auto& a : d2.arcs) collide = collide || used.count(a.id);
  for (const auto& c : d2.crossings) collide = collide || used.count(c.id);
  std::string prefix;
  if (collide) {
    for (int n = 2;; ++n) {
      prefix = "u" + std::to_string(n) + ".";
      bool clash = false;
      for (const auto& a : d2.arcs) clash = clash || used.count(prefix + a.id);
      for (const auto& c : d2.crossings) clash = clash || used.count(prefix + c.id);
      if (!clash) break;
    }
  }
  LinkDiagram out = d1;
  out.mu = d1.mu + d2.mu;
  for (const auto& a : d2.arcs) out.arcs.push_back({prefix + a.id, a.component + d1.mu});
  for (const auto& c : d2.crossings) {
    out.crossings.push_back({prefix + c.id, prefix + c.over, prefix + c.under_in,
                             prefix + c.under_out, c.writhe});
  }
  return out;
}

LinkDiagram relabel_components(const LinkDiagram& d, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(d.mu)) {
    fail(ErrorKind::Usage, "permutation length differs from component count");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d.mu; ++i) {
    if (sorted[i] != i + 1) fail(ErrorKind::Usage, "not a permutation of 1..mu");
  }
  LinkDiagram out = d;
  for (auto& a : out.arcs) a.component = perm[a.component - 1];
  return out;
}

}  // namespace medialink
