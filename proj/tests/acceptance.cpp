// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "medialink/alexander.hpp"
#include "medialink/distinguish.hpp"
#include "medialink/fixtures.hpp"
#include "medialink/modulealg.hpp"
#include "medialink/moves.hpp"
#include "medialink/quandle.hpp"
#include "oracles.hpp"

using namespace medialink;

namespace {

const LinkDiagram& F(const char* name) { return fixture(name).diagram; }

// Collects the first few problems of one criterion.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string factors(const RatSmithResult& r) {
  std::string s = "rank " + std::to_string(r.rank) + " [";
  for (std::size_t i = 0; i < r.factors.size(); ++i) s += (i ? ", " : "") + r.factors[i].to_string();
  return s + "]";
}

std::string group(const NuFingerprint& n) {
  std::string s = "Z^" + std::to_string(n.rank);
  for (const auto& t : n.torsion) s += " + Z_" + t.get_str();
  return s;
}

const Witness* witness(const ComparisonReport& r, const std::string& name) {
  for (const auto& w : r.witnesses)
    if (w.name == name) return &w;
  return nullptr;
}

RunConfig config;

void c1(Check& c) {
  auto f = link_fingerprint(F("hopf-unknot"), config);
  c.expect(factors(f.rational) == "rank 2 [-1 + t]", "rational " + factors(f.rational));
  c.expect(group(f.nu) == "Z^2 + Z_2", "nu " + group(f.nu));
}

void c2(Check& c) {
  auto plain = compare(F("hopf-unknot"), F("hopf-unknot-swapped"), false, config);
  c.expect(plain.distinguished(), "not separated without permutations");
  c.expect(witness(plain, "E2-evaluation") != nullptr, "no E2-evaluation witness");
  auto perm = compare(F("hopf-unknot"), F("hopf-unknot-swapped"), true, config);
  c.expect(perm.verdict == "not distinguished", "with permutations: " + perm.verdict);
}

void c3(Check& c) {
  auto f = link_fingerprint(F("trefoil-unknot"), config);
  c.expect(factors(f.rational) == "rank 2 [1 - t + t^2]", "rational " + factors(f.rational));
  auto perm = compare(F("trefoil-unknot"), F("trefoil-unknot-swapped"), true, config);
  c.expect(perm.verdict == "not distinguished", "with permutations: " + perm.verdict);
  auto plain = compare(F("trefoil-unknot"), F("trefoil-unknot-swapped"), false, config);
  for (const auto& w : plain.witnesses) {
    c.expect(w.level == "multivariate", "reduced-level difference " + w.name);
  }
}

void c4(Check& c) {
  for (const char* name : {"two-hopf", "l-prime"}) {
    auto f = link_fingerprint(F(name), config);
    c.expect(factors(f.rational) == "rank 2 [-1 + t, -1 + t]", std::string(name) + " " + factors(f.rational));
    c.expect(group(f.nu) == "Z^2 + Z_2 + Z_2", std::string(name) + " nu " + group(f.nu));
  }
  auto r = compare(F("two-hopf"), F("l-prime"), true, config);
  c.expect(r.distinguished(), "verdict " + r.verdict);
  c.expect(r.permutations_tested == 24, "permutations " + std::to_string(r.permutations_tested));
  auto w = witness(r, "nu-torsion-image");
  c.expect(w && w->universal && w->differing == 24, "nu-torsion-image not universal");
}

void c5(Check& c) {
  auto f8 = reduce_tau(build_presentation(F("figure-eight")));
  auto c5 = reduce_tau(build_presentation(F("cinquefoil")));
  auto d8 = alexander_poly(f8, 1), d5 = alexander_poly(c5, 1);
  c.expect(d8 == normalize_unit(oracle::delta_by_minors(f8, 1)), "4_1 differs from minors oracle");
  c.expect(d5 == normalize_unit(oracle::delta_by_minors(c5, 1)), "5_1 differs from minors oracle");
  c.expect(d8 == IntLaurent::parse("t^2 - 3*t + 1", 1), "4_1 Delta1 " + d8.to_string());
  c.expect(d5 == IntLaurent::parse("t^4 - t^3 + t^2 - t + 1", 1), "5_1 Delta1 " + d5.to_string());
  auto r = compare(F("figure-eight"), F("cinquefoil"), false, config);
  c.expect(witness(r, "Delta1") != nullptr, "no Delta1 witness");
  c.expect(witness(r, "nu-group") == nullptr && witness(r, "nu-torsion-image") == nullptr,
           "nu fingerprints differ");
  auto n8 = link_fingerprint(F("figure-eight"), config).nu;
  c.expect(group(n8) == "Z^1 + Z_5", "4_1 nu " + group(n8));
}

void c6(Check& c) {
  for (const auto& f : fixture_corpus()) {
    const std::string want = to_json(link_fingerprint(f.diagram, config)).dump();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      int length = 1 + static_cast<int>(seed % 20);
      auto moved = random_moves(f.diagram, length, seed).diagram;
      if (to_json(link_fingerprint(moved, config)).dump() != want) {
        auto r = compare(f.diagram, moved, false, config);
        std::string names;
        for (const auto& w : r.witnesses) names += " " + w.name;
        c.expect(false, f.name + " seed " + std::to_string(seed) + ":" + names);
      }
    }
  }
}

void c7(Check& c) {
  for (const auto& f : fixture_corpus()) {
    auto alt = make_alternating(f.diagram);
    c.expect(has_alternating_writhes(alt), f.name + ": predicate fails");
    c.expect(to_json(link_fingerprint(alt, config)) == to_json(link_fingerprint(f.diagram, config)),
             f.name + ": bundle changed");
  }
}

void c8(Check& c) {
  std::size_t brute = 0;
  for (const auto& f : fixture_corpus()) {
    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
      const LinkDiagram d = seed ? random_moves(f.diagram, 3, seed).diagram : f.diagram;
      for (auto s : config.battery) {
        if (std::pow(double(s.n), double(d.arcs.size())) > 1e6) continue;
        ++brute;
        auto fast = count_colorings(d, s);
        c.expect(fast == count_colorings_brute(d, s) && fast == oracle::colorings(d, s.n, s.u),
                 f.name + " (" + std::to_string(s.n) + "," + std::to_string(s.u) + ")");
      }
    }
    for (const auto& g : fixture_corpus()) {
      if (f.diagram.mu + g.diagram.mu > 8) continue;
      auto u = split_union(f.diagram, g.diagram);
      for (auto s : config.battery) {
        c.expect(count_colorings(u, s) == count_colorings(f.diagram, s) * count_colorings(g.diagram, s),
                 "multiplicativity " + f.name + " + " + g.name);
      }
    }
    for (std::uint64_t n = 2; n <= 9; ++n) {
      Integer want = 1;
      for (int i = 0; i < f.diagram.mu; ++i) want *= n;
      c.expect(count_colorings(f.diagram, {n, 1}) == want, f.name + " (n,1) count");
    }
  }
  c.expect(brute > 100, "too few brute-force comparisons");
}

void c9(Check& c) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t u = 1; u < std::max<std::uint64_t>(n, 2); ++u) {
      if (std::gcd(u, n) != 1) continue;
      auto q = affine_quandle({n, u});
      std::string at = "(" + std::to_string(n) + "," + std::to_string(u) + ")";
      c.expect(check_quandle_axioms(q).empty(), at + " axioms");
      c.expect(check_medial(q), at + " medial");
      c.expect(check_semiregular(q), at + " semiregular");
      c.expect(dis_group_order(q) == oracle::translation_subgroup_order(n, u), at + " dis order");
    }
  }
}

void c10(Check& c) {
  for (const auto& f : fixture_corpus()) {
    c.expect(check_crowell_compat(build_presentation(f.diagram)), f.name);
    c.expect(check_crowell_compat(reduce_tau(build_presentation(f.diagram))), f.name + " reduced");
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto moved = random_moves(f.diagram, 1 + static_cast<int>(seed % 20), seed).diagram;
      c.expect(check_crowell_compat(build_presentation(moved)), f.name + " seed " + std::to_string(seed));
    }
    c.expect(check_crowell_compat(build_presentation(make_alternating(f.diagram))), f.name + " alternating");
  }
}

}  // namespace

int main() {
  config = default_config();
  struct Criterion {
    const char* label;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1  hopf-unknot: factors [t-1] rank 2, nu Z^2+Z_2", c1},
      {"2  hopf-unknot reindexing: E2 without permutations, not distinguished with", c2},
      {"3  trefoil-unknot: factors [t^2-t+1] rank 2, reindexing invisible", c3},
      {"4  two-hopf vs l-prime: same modules, nu torsion image universal over 24", c4},
      {"5  4_1 vs 5_1: Delta1 separates, nu agrees", c5},
      {"6  Reidemeister fuzz: 100 seeds x <=20 moves per corpus diagram", c6},
      {"7  alternating writhes: predicate and bundle preserved", c7},
      {"8  colorings: brute force, multiplicativity, n^mu", c8},
      {"9  affine quandles n<=12: axioms, medial, semiregular, |Dis|", c9},
      {"10 Crowell compatibility on corpus and fuzzed diagrams", c10},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.problems.empty() ? "PASS" : "FAIL") << "  " << cr.label;
    line.precision(2);
    line << std::fixed << "  (" << secs << "s)";
    std::cout << line.str() << "\n";
    for (std::size_t i = 0; i < c.problems.size() && i < 5; ++i) std::cout << "      " << c.problems[i] << "\n";
    failures += !c.problems.empty();
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << criteria.size() - failures << "/"
            << criteria.size() << ")\n";
  return failures;
}
