#pragma once

// The invariant bundle of a link diagram and comparison of two diagrams up
// to renumbering of components.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "medialink/diagram.hpp"
#include "medialink/modulealg.hpp"
#include "medialink/quandle.hpp"

namespace medialink {

struct RunConfig {
  std::vector<AffineQuandleSpec> battery{{2, 1}, {3, 2}, {4, 3}, {5, 2},
                                         {5, 3}, {7, 3}, {8, 3}, {9, 2}};
  /// E_k evaluation fingerprints for k in [ideal_k_min, ideal_k_max];
  /// ideal_k_max = 0 means "up to mu".
  int ideal_k_min = 1;
  int ideal_k_max = 0;
  std::size_t point_cap = 256;
  MinorCaps minors;
  std::size_t torsion_cap = 1024;
  int permutation_guard = 8;
  std::uint64_t seed = 0;
};

/// Unknown keys are a usage error; missing keys keep their defaults.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
RunConfig load_config_file(const std::string& path);
/// Defaults, overridden by the file named in MEDIALINK_CONFIG when set.
RunConfig default_config();

struct ColoringCount {
  AffineQuandleSpec spec;
  Integer count;
};

struct TauFingerprint {
  int mu = 1;
  int orbit_count = 1;
  RatSmithResult rational;
  DeltaList delta;
  NuFingerprint nu;
  std::vector<IdealFingerprint> ideals;
  std::vector<ColoringCount> colorings;
  RatSmithResult displacement;
  std::uint64_t seed = 0;
};

TauFingerprint link_fingerprint(const LinkDiagram& d, const RunConfig& cfg);
nlohmann::json to_json(const TauFingerprint& f);

/// ν image vectors after renumbering components by perm (component i
/// becomes perm[i-1]).
std::vector<int> permute_image(const std::vector<int>& v, const std::vector<int>& perm);

/// The fingerprint of relabel_components(d, perm), given the fingerprint f
/// of d: ideal fingerprints are recomputed from the relabeled diagram, ν
/// images are rewritten, everything else is carried over.
TauFingerprint permute_components(const TauFingerprint& f, const LinkDiagram& d,
                                  const std::vector<int>& perm, const RunConfig& cfg);

struct Witness {
  std::string name;
  std::string level;  // "components", "multivariate", "reduced" or "nu"
  bool universal = false;
  std::size_t differing = 0;  // permutations under which the values differ
  std::string detail;
};

struct ComparisonReport {
  std::string verdict;  // "distinguished" or "not distinguished"
  bool allow_permutations = false;
  std::size_t permutations_tested = 0;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  bool distinguished() const { return verdict == "distinguished"; }
};

/// With permutations, mu! relabelings of d2 are tried (mu must not exceed
/// the guard). "distinguished" requires an invariant that differs under
/// every permutation tried.
ComparisonReport compare(const LinkDiagram& d1, const LinkDiagram& d2, bool allow_permutations,
                         const RunConfig& cfg);

nlohmann::json to_json(const ComparisonReport& r);
std::string render_table(const ComparisonReport& r);

}  // namespace medialink
