#include "medialink/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "medialink/error.hpp"

namespace medialink {

namespace {

using nlohmann::json;

LinkDiagram unknot() { return from_json(json::parse(R"({"mu":1,"arcs":[{"id":"c","component":1}],"crossings":[]})")); }

LinkDiagram hopf() {
  return from_json(json::parse(R"({"mu":2,
    "arcs":[{"id":"a","component":1},{"id":"b","component":2}],
    "crossings":[{"id":"c1","over":"a","under_in":"b","under_out":"b","writhe":1},
                 {"id":"c2","over":"b","under_in":"a","under_out":"a","writhe":1}]})"));
}

LinkDiagram trefoil() {
  return from_json(json::parse(R"({"mu":1,
    "arcs":[{"id":"a","component":1},{"id":"b","component":1},{"id":"c","component":1}],
    "crossings":[{"id":"c1","over":"c","under_in":"a","under_out":"b","writhe":1},
                 {"id":"c2","over":"a","under_in":"b","under_out":"c","writhe":1},
                 {"id":"c3","over":"b","under_in":"c","under_out":"a","writhe":1}]})"));
}

// Labels as in the drawn trefoil-and-unknot diagram: arc d is the unknot.
LinkDiagram trefoil_unknot() {
  return from_json(json::parse(R"({"mu":2,
    "arcs":[{"id":"a","component":1},{"id":"b","component":1},{"id":"c","component":1},
            {"id":"d","component":2}],
    "crossings":[{"id":"c1","over":"c","under_in":"b","under_out":"a","writhe":1},
                 {"id":"c2","over":"b","under_in":"a","under_out":"c","writhe":1},
                 {"id":"c3","over":"a","under_in":"c","under_out":"b","writhe":1}]})"));
}

LinkDiagram two_hopf() {
  return from_json(json::parse(R"({"mu":4,
    "arcs":[{"id":"a","component":1},{"id":"b","component":2},
            {"id":"c","component":3},{"id":"d","component":4}],
    "crossings":[{"id":"c1","over":"a","under_in":"b","under_out":"b","writhe":1},
                 {"id":"c2","over":"b","under_in":"a","under_out":"a","writhe":1},
                 {"id":"c3","over":"c","under_in":"d","under_out":"d","writhe":1},
                 {"id":"c4","over":"d","under_in":"c","under_out":"c","writhe":1}]})"));
}

LinkDiagram l_prime() {
  return from_json(json::parse(R"({"mu":4,
    "arcs":[{"id":"v","component":1},{"id":"w","component":2},{"id":"x","component":2},
            {"id":"y","component":3},{"id":"z","component":4}],
    "crossings":[{"id":"c1","over":"w","under_in":"v","under_out":"v","writhe":1},
                 {"id":"c2","over":"v","under_in":"x","under_out":"w","writhe":1},
                 {"id":"c3","over":"x","under_in":"y","under_out":"y","writhe":1},
                 {"id":"c4","over":"y","under_in":"w","under_out":"x","writhe":1}]})"));
}

const char* const kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* const kCinquefoil = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
const char* const kHopfPD = "X[1,3,2,4] X[3,1,4,2]";
const char* const kTorus24 = "X[6,1,7,2] X[8,3,5,4] X[2,5,3,6] X[4,7,1,8]";

json expect(std::size_t rational_rank, std::vector<std::string> factors, std::size_t nu_rank,
            std::vector<std::string> torsion) {
  return {{"rational", {{"rank", rational_rank}, {"factors", factors}}},
          {"nu", {{"rank", nu_rank}, {"torsion", torsion}}}};
}

std::vector<FixtureEntry> build_corpus() {
  std::vector<FixtureEntry> c;

  {
    json e = expect(1, {}, 1, {});
    e["delta"] = {{"values", {"0"}}};
    e["orbit_count"] = 1;
    e["colorings"] = json::array();
    for (auto [n, u] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 3}, {5, 2}, {5, 3}, {7, 3}, {8, 3}, {9, 2}}) {
      e["colorings"].push_back({{"n", n}, {"u", u}, {"count", std::to_string(n)}});
    }
    e["displacement"] = {{"rank", 0}, {"factors", json::array()}};
    c.push_back({"unknot", unknot(), e, "zero-crossing circle; every value by definition"});
  }
  {
    json e = expect(1, {"-1 + t"}, 1, {"2"});
    e["nu"]["torsion_image"] = {"0", "1"};
    e["orbit_count"] = 2;
    e["displacement"] = {{"rank", 0}, {"factors", json::array()}};
    c.push_back({"hopf", hopf(), e,
                 "relation (1-t2)a = (1-t1)b; reduced module Λ ⊕ Λ/(t-1); hand computation"});
  }
  {
    json e = expect(1, {"1 - t + t^2"}, 1, {"3"});
    e["delta"] = {{"values", {"0", "1 - t + t^2"}}};
    e["colorings"] = json::array({{{"n", 2}, {"u", 1}, {"count", "2"}}, {{"n", 3}, {"u", 2}, {"count", "9"}}});
    e["displacement"] = {{"rank", 0}, {"factors", {"1 - t + t^2"}}};
    c.push_back({"trefoil", trefoil(), e,
                 "standard 3-crossing diagram; colorings (3,2) by brute force over 3^3"});
  }
  {
    json e = expect(1, {"1 - 3*t + t^2"}, 1, {"5"});
    e["delta"] = {{"values", {"0", "1 - 3*t + t^2"}}};
    c.push_back({"figure-eight", parse_pd(kFigureEight), e,
                 "PD " + std::string(kFigureEight) + "; Δ1 from the 3x3 minors, ν torsion from |Δ1(-1)|"});
  }
  {
    json e = expect(1, {"1 - t + t^2 - t^3 + t^4"}, 1, {"5"});
    e["delta"] = {{"values", {"0", "1 - t + t^2 - t^3 + t^4"}}};
    c.push_back({"cinquefoil", parse_pd(kCinquefoil), e,
                 "PD " + std::string(kCinquefoil) + "; Δ1 from the 4x4 minors"});
  }
  {
    json e = expect(1, {"-1 + t"}, 1, {"2"});
    e["orbit_count"] = 2;
    c.push_back({"hopf-pd", parse_pd(kHopfPD), e, "PD " + std::string(kHopfPD)});
  }
  {
    LinkDiagram d = split_union(hopf(), unknot());
    json e = expect(2, {"-1 + t"}, 2, {"2"});
    e["nu"]["torsion_image"] = {"00", "10"};
    e["orbit_count"] = 3;
    c.push_back({"hopf-unknot", d, e, "drawn Hopf link with a split unknot as component 3"});
    json s = expect(2, {"-1 + t"}, 2, {"2"});
    s["nu"]["torsion_image"] = {"00", "01"};
    s["orbit_count"] = 3;
    c.push_back({"hopf-unknot-swapped", relabel_components(d, {1, 3, 2}), s,
                 "hopf-unknot with components 2 and 3 interchanged"});
  }
  {
    LinkDiagram d = trefoil_unknot();
    json e = expect(2, {"1 - t + t^2"}, 2, {"3"});
    e["colorings"] = json::array({{{"n", 2}, {"u", 1}, {"count", "4"}}, {{"n", 3}, {"u", 2}, {"count", "27"}}});
    c.push_back({"trefoil-unknot", d, e, "drawn trefoil (arcs a, b, c) with split unknot d"});
    c.push_back({"trefoil-unknot-swapped", relabel_components(d, {2, 1}), e,
                 "trefoil-unknot with components interchanged"});
  }
  {
    json e = expect(2, {"-1 + t", "-1 + t"}, 2, {"2", "2"});
    e["nu"]["torsion_image"] = {"000", "011", "100", "111"};
    e["orbit_count"] = 4;
    e["displacement"] = {{"rank", 1}, {"factors", json::array()}};
    c.push_back({"two-hopf", two_hopf(), e, "split union of two Hopf links, components 1-2 and 3-4"});
  }
  {
    json e = expect(2, {"-1 + t", "-1 + t"}, 2, {"2", "2"});
    e["nu"]["torsion_image"] = {"000", "010", "100", "110"};
    e["orbit_count"] = 4;
    c.push_back({"l-prime", l_prime(), e,
                 "components {v},{w,x},{y},{z}; reduced relations force w = x and (1-t)x = (1-t)y"});
  }
  {
    // T(2,2) # T(2,4): the second Hopf component is summed with the first
    // component of T(2,4).
    LinkDiagram t24 = parse_pd(kTorus24);
    LinkDiagram d = connected_sum(hopf(), "b", t24, t24.arcs.front().id);
    c.push_back({"t22-sum-t24", d, json::object(), "connected sum of torus links T(2,2) and T(2,4)", true});
    c.push_back({"t22-sum-t24-reindexed", relabel_components(d, {2, 1, 3}), json::object(),
                 "t22-sum-t24 with components 1 and 2 interchanged", true});
  }
  return c;
}

}  // namespace

const std::vector<FixtureEntry>& fixture_corpus() {
  static const std::vector<FixtureEntry> corpus = build_corpus();
  return corpus;
}

const FixtureEntry& fixture(std::string_view name) {
  for (const auto& f : fixture_corpus()) {
    if (f.name == name) return f;
  }
  fail(ErrorKind::Usage, "unknown fixture '" + std::string(name) + "'");
}

LinkDiagram load_diagram(const std::string& source) {
  static const std::string prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) return fixture(source.substr(prefix.size())).diagram;
  std::ifstream in(source);
  if (!in) fail(ErrorKind::Usage, "cannot open " + source);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

LinkDiagram connected_sum(const LinkDiagram& d1, const std::string& arc1, const LinkDiagram& d2,
                          const std::string& arc2) {
  auto i1 = d1.arc_index(arc1);
  auto i2 = d2.arc_index(arc2);
  if (!i1 || !i2) fail(ErrorKind::Usage, "connected_sum: unknown arc");
  LinkDiagram u = split_union(d1, d2);
  const std::string a = u.arcs[*i1].id;
  const std::string b = u.arcs[d1.arcs.size() + *i2].id;
  const int ca = u.arcs[*i1].component;
  const int cb = u.arcs[d1.arcs.size() + *i2].component;
  auto ea = std::find_if(u.crossings.begin(), u.crossings.end(), [&](const Crossing& c) { return c.under_in == a; });
  auto eb = std::find_if(u.crossings.begin(), u.crossings.end(), [&](const Crossing& c) { return c.under_in == b; });
  // an arc with no end crossing is a crossingless circle; summing with it is a no-op
  if (eb == u.crossings.end()) return d1;
  if (ea == u.crossings.end()) return d2;
  ea->under_in = b;
  eb->under_in = a;
  for (auto& arc : u.arcs) {
    if (arc.component == cb) arc.component = ca;
    else if (arc.component > cb) --arc.component;
  }
  --u.mu;
  require_valid(u);
  return u;
}

std::vector<std::string> expected_mismatches(const nlohmann::json& expected,
                                             const nlohmann::json& actual) {
  std::vector<std::string> out;
  std::function<void(const json&, const json&, const std::string&)> walk =
      [&](const json& e, const json& a, const std::string& path) {
        if (e.is_object()) {
          if (!a.is_object()) {
            out.push_back(path.empty() ? "/" : path);
            return;
          }
          for (const auto& [k, v] : e.items()) {
            std::string p = path + "/" + k;
            if (!a.contains(k)) out.push_back(p);
            else walk(v, a.at(k), p);
          }
        } else if (e.is_array() && a.is_array() && e.size() <= a.size() && !e.empty() &&
                   e.front().is_object()) {
          // arrays of objects: compare the listed prefix element-wise
          for (std::size_t i = 0; i < e.size(); ++i) walk(e[i], a[i], path + "/" + std::to_string(i));
        } else if (e != a) {
          out.push_back(path);
        }
      };
  walk(expected, actual, "");
  return out;
}

}  // namespace medialink
