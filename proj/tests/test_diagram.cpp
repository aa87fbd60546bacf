#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "medialink/diagram.hpp"
#include "medialink/distinguish.hpp"
#include "medialink/error.hpp"
#include "medialink/fixtures.hpp"

using namespace medialink;

namespace {

const LinkDiagram& F(const char* name) { return fixture(name).diagram; }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("hopf JSON parses with two components") {
  auto d = parse_diagram(R"({"mu":2,"arcs":[{"id":"a","component":1},{"id":"b","component":2}],
    "crossings":[{"id":"c1","over":"a","under_in":"b","under_out":"b","writhe":1},
                 {"id":"c2","over":"b","under_in":"a","under_out":"a","writhe":1}]})");
  CHECK(d.mu == 2);
  CHECK(d == F("hopf"));
  CHECK(validate(d).empty());
}

TEST_CASE("zero-crossing unknot is valid") {
  auto d = parse_diagram(R"({"mu":1,"arcs":[{"id":"c","component":1}],"crossings":[]})");
  CHECK(validate(d).empty());
  CHECK(d.crossings.empty());
}

TEST_CASE("PD hopf has the same bundle as the JSON hopf") {
  auto d = parse_diagram("X[1,3,2,4] X[3,1,4,2]");
  CHECK(d.mu == 2);
  CHECK(d.crossings.size() == 2);
  RunConfig cfg;
  CHECK(to_json(link_fingerprint(d, cfg)) == to_json(link_fingerprint(F("hopf"), cfg)));
}

TEST_CASE("PD parsing accepts PD[...] wrappers and rejects junk") {
  auto a = parse_pd("PD[X[1,3,2,4], X[3,1,4,2]]");
  auto b = parse_pd("X[1,3,2,4] X[3,1,4,2]");
  CHECK(a == b);
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), Error);
  CHECK_THROWS_AS(parse_pd("X[1,1,2,3]"), Error);
  CHECK_THROWS_AS(parse_pd(""), Error);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), Error);
}

TEST_CASE("validate reports constructed violations") {
  LinkDiagram d = F("hopf");
  CHECK(validate(d).empty());

  LinkDiagram bad = d;
  bad.crossings[0].under_in = "a";
  bad.crossings[0].under_out = "b";
  bad.crossings[1].under_in = "b";
  bad.crossings[1].under_out = "a";
  CHECK(contains(validate(bad), "under arcs of crossing c1 on different components"));

  LinkDiagram missing = F("unknot");
  missing.mu = 2;
  CHECK(validate(missing) == std::vector<std::string>{"component 2 has no arcs"});

  LinkDiagram unknown = d;
  unknown.crossings[0].over = "zz";
  CHECK(contains(validate(unknown), "crossing c1 references unknown arc 'zz'"));

  LinkDiagram writhe = d;
  writhe.crossings[1].writhe = 0;
  CHECK(!validate(writhe).empty());

  LinkDiagram dup = d;
  dup.crossings[1].id = "c1";
  CHECK(contains(validate(dup), "duplicate crossing id c1"));

  CHECK_THROWS_AS(require_valid(bad), Error);
  try {
    parse_diagram(render_json(bad));
    FAIL("invalid diagram parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
  }
}

TEST_CASE("malformed JSON is a parse error") {
  try {
    parse_diagram("{\"mu\": 1, \"arcs\": [");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("trace examples") {
  auto h = trace_components(F("hopf"));
  REQUIRE(h.cycles.size() == 2);
  CHECK(h.cycles[0] == std::vector<std::string>{"a"});
  CHECK(h.cycles[1] == std::vector<std::string>{"b"});

  auto t = trace_components(F("trefoil"));
  REQUIRE(t.cycles.size() == 1);
  auto cyc = t.cycles[0];
  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), "a"), cyc.end());
  CHECK(cyc == std::vector<std::string>{"a", "b", "c"});

  auto u = trace_components(split_union(F("hopf"), F("unknot")));
  REQUIRE(u.cycles.size() == 3);
  CHECK(u.cycles[2] == std::vector<std::string>{"c"});
  CHECK(u.ends.at("c").first.empty());
}

TEST_CASE("split_union sizes") {
  auto hu = split_union(F("hopf"), F("unknot"));
  CHECK(hu.mu == 3);
  CHECK(hu.arcs.size() == 3);
  CHECK(hu.crossings.size() == 2);
  auto tu = split_union(F("trefoil"), F("unknot"));
  CHECK(tu.mu == 2);
  CHECK(tu.arcs.size() == 4);
  CHECK(tu.crossings.size() == 3);
  auto hh = split_union(F("hopf"), F("hopf"));
  CHECK(hh.mu == 4);
  CHECK(hh.arcs.size() == 4);
  CHECK(hh.crossings.size() == 4);
  CHECK(validate(hh).empty());  // colliding ids were prefixed
}

TEST_CASE("relabel_components") {
  auto d = relabel_components(F("hopf-unknot"), {1, 3, 2});
  CHECK(d == F("hopf-unknot-swapped"));
  CHECK(relabel_components(d, {1, 3, 2}) == F("hopf-unknot"));
  CHECK_THROWS_AS(relabel_components(d, {1, 1, 2}), Error);
  CHECK_THROWS_AS(relabel_components(d, {1, 2}), Error);
}

TEST_CASE("corpus round-trips and traces cleanly") {
  for (const auto& f : fixture_corpus()) {
    CAPTURE(f.name);
    const auto& d = f.diagram;
    CHECK(validate(d).empty());
    auto back = parse_diagram(render_json(d));
    CHECK(back == d);
    CHECK(render_json(back) == render_json(d));
    auto t = trace_components(d);
    CHECK(t.cycles.size() == static_cast<std::size_t>(d.mu));
    std::size_t total = 0;
    for (const auto& c : t.cycles) total += c.size();
    CHECK(total == d.arcs.size());
  }
}

TEST_CASE("fresh_id avoids existing ids") {
  auto d = F("trefoil");
  auto id = fresh_id(d, "c1");
  CHECK(!d.arc_index(id));
  CHECK(!d.crossing_index(id));
}
