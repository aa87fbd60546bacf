#include "medialink/distinguish.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "medialink/alexander.hpp"
#include "medialink/error.hpp"

namespace medialink {

// ---------------------------------------------------------------------------
// Config

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "config must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "battery") {
        c.battery.clear();
        for (const auto& pair : value) {
          c.battery.push_back({pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>()});
        }
      } else if (key == "ideal_k_min") {
        c.ideal_k_min = value.get<int>();
      } else if (key == "ideal_k_max") {
        c.ideal_k_max = value.get<int>();
      } else if (key == "point_cap") {
        c.point_cap = value.get<std::size_t>();
      } else if (key == "max_minor_rows") {
        c.minors.max_rows = value.get<std::size_t>();
      } else if (key == "max_minor_size") {
        c.minors.max_minor = value.get<std::size_t>();
      } else if (key == "torsion_cap") {
        c.torsion_cap = value.get<std::size_t>();
      } else if (key == "permutation_guard") {
        c.permutation_guard = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else {
        fail(ErrorKind::Usage, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("config: ") + e.what());
  }
  for (const auto& s : c.battery) require_affine_spec(s);
  if (c.ideal_k_min < 0 || c.ideal_k_max < 0) fail(ErrorKind::Usage, "ideal k-range must be non-negative");
  if (c.point_cap == 0 || c.minors.max_rows == 0 || c.minors.max_minor == 0 || c.torsion_cap == 0 ||
      c.permutation_guard <= 0) {
    fail(ErrorKind::Usage, "config caps must be positive");
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json battery = nlohmann::json::array();
  for (const auto& s : c.battery) battery.push_back({s.n, s.u});
  return {{"battery", battery},
          {"ideal_k_min", c.ideal_k_min},
          {"ideal_k_max", c.ideal_k_max},
          {"point_cap", c.point_cap},
          {"max_minor_rows", c.minors.max_rows},
          {"max_minor_size", c.minors.max_minor},
          {"torsion_cap", c.torsion_cap},
          {"permutation_guard", c.permutation_guard},
          {"seed", c.seed}};
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return config_from_json(j);
}

RunConfig default_config() {
  const char* path = std::getenv("MEDIALINK_CONFIG");
  if (path && *path) return load_config_file(path);
  return RunConfig{};
}

// ---------------------------------------------------------------------------
// Fingerprint

namespace {

std::vector<IdealFingerprint> ideal_block(const LinkDiagram& d, const RunConfig& cfg) {
  Presentation p = simplify(build_presentation(d));
  int kmax = cfg.ideal_k_max == 0 ? d.mu : cfg.ideal_k_max;
  std::vector<IdealFingerprint> out;
  for (int k = cfg.ideal_k_min; k <= kmax; ++k) {
    out.push_back(ideal_fingerprint_of(p, k, cfg.point_cap));
  }
  return out;
}

}  // namespace

TauFingerprint link_fingerprint(const LinkDiagram& d, const RunConfig& cfg) {
  require_valid(d);
  TauFingerprint f;
  f.mu = d.mu;
  f.seed = cfg.seed;
  f.orbit_count = orbit_count(d);

  Presentation full = build_presentation(d);
  if (!check_crowell_compat(full)) fail(ErrorKind::Internal, "Crowell compatibility failed");
  Presentation multi = simplify(full);
  Presentation reduced = simplify(reduce_tau(multi));
  if (!check_crowell_compat(reduced)) fail(ErrorKind::Internal, "reduced Crowell compatibility failed");

  f.rational = rational_invariants(reduced);
  f.delta = alexander_polys(reduced, cfg.minors);
  f.nu = nu_fingerprint(specialize_nu(reduced), cfg.torsion_cap);
  int kmax = cfg.ideal_k_max == 0 ? d.mu : cfg.ideal_k_max;
  for (int k = cfg.ideal_k_min; k <= kmax; ++k) {
    f.ideals.push_back(ideal_fingerprint_of(multi, k, cfg.point_cap));
  }
  for (const auto& s : cfg.battery) f.colorings.push_back({s, count_colorings(d, s)});
  f.displacement = displacement_rational_factors(reduced, reduced.generators.at(0));
  return f;
}

nlohmann::json to_json(const TauFingerprint& f) {
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& i : f.ideals) ideals.push_back(to_json(i));
  nlohmann::json colorings = nlohmann::json::array();
  for (const auto& c : f.colorings) {
    colorings.push_back({{"n", c.spec.n}, {"u", c.spec.u}, {"count", c.count.get_str()}});
  }
  return {{"mu", f.mu},
          {"orbit_count", f.orbit_count},
          {"rational", to_json(f.rational)},
          {"delta", to_json(f.delta)},
          {"nu", to_json(f.nu)},
          {"ideals", ideals},
          {"colorings", colorings},
          {"displacement", to_json(f.displacement)},
          {"seed", f.seed}};
}

std::vector<int> permute_image(const std::vector<int>& v, const std::vector<int>& perm) {
  const std::size_t mu = perm.size();
  if (v.size() + 1 != mu) fail(ErrorKind::Usage, "image vector length must be mu-1");
  // coefficients on (t_i - 1)⊗1; c_1 is fixed by the free coordinate being 0
  std::vector<int> c(mu, 0);
  int parity = 0;
  for (std::size_t j = 1; j < mu; ++j) {
    c[j] = v[j - 1];
    parity ^= v[j - 1];
  }
  c[0] = parity;
  std::vector<int> moved(mu, 0);
  for (std::size_t i = 0; i < mu; ++i) moved[perm[i] - 1] = c[i];
  return std::vector<int>(moved.begin() + 1, moved.end());
}

TauFingerprint permute_components(const TauFingerprint& f, const LinkDiagram& d,
                                  const std::vector<int>& perm, const RunConfig& cfg) {
  LinkDiagram relabeled = relabel_components(d, perm);  // checks perm
  TauFingerprint out = f;
  out.ideals = ideal_block(relabeled, cfg);
  out.nu.torsion_image.clear();
  for (const auto& v : f.nu.torsion_image) out.nu.torsion_image.insert(permute_image(v, perm));
  return out;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

struct Check {
  std::string name;
  std::string level;
  std::function<std::string(const TauFingerprint&)> value;
};

std::string dump(const nlohmann::json& j) { return j.dump(); }

std::vector<Check> checks_for(const TauFingerprint& a, const TauFingerprint& b,
                              std::vector<std::string>& notes) {
  std::vector<Check> out;
  out.push_back({"rational-factors", "reduced",
                 [](const TauFingerprint& f) { return dump(to_json(f.rational)); }});
  if (a.delta.status == "ok" && b.delta.status == "ok") {
    std::size_t n = std::max(a.delta.values.size(), b.delta.values.size());
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back({"Delta" + std::to_string(k), "reduced", [k](const TauFingerprint& f) {
                       return k < f.delta.values.size() ? f.delta.values[k].to_string()
                                                        : std::string("1");
                     }});
    }
  } else {
    notes.push_back("Alexander polynomials skipped: minor cap exceeded");
  }
  out.push_back({"nu-group", "nu", [](const TauFingerprint& f) {
                   nlohmann::json t = nlohmann::json::array();
                   for (const auto& x : f.nu.torsion) t.push_back(x.get_str());
                   return dump({{"rank", f.nu.rank}, {"torsion", t}});
                 }});
  out.push_back({"nu-torsion-image", "nu", [](const TauFingerprint& f) {
                   nlohmann::json t = nlohmann::json::array();
                   for (const auto& v : f.nu.torsion_image) t.push_back(render_bits(v));
                   return dump(t);
                 }});
  for (std::size_t i = 0; i < a.ideals.size() && i < b.ideals.size(); ++i) {
    out.push_back({"E" + std::to_string(a.ideals[i].k) + "-evaluation", "multivariate",
                   [i](const TauFingerprint& f) { return dump(to_json(f.ideals[i])); }});
  }
  out.push_back({"colorings", "reduced", [](const TauFingerprint& f) {
                   nlohmann::json t = nlohmann::json::array();
                   for (const auto& c : f.colorings) t.push_back(c.count.get_str());
                   return dump(t);
                 }});
  out.push_back({"displacement-factors", "reduced",
                 [](const TauFingerprint& f) { return dump(to_json(f.displacement)); }});
  return out;
}

std::string shorten(const std::string& s) {
  return s.size() <= 60 ? s : s.substr(0, 57) + "...";
}

}  // namespace

ComparisonReport compare(const LinkDiagram& d1, const LinkDiagram& d2, bool allow_permutations,
                         const RunConfig& cfg) {
  require_valid(d1);
  require_valid(d2);
  ComparisonReport r;
  r.allow_permutations = allow_permutations;
  if (d1.mu != d2.mu) {
    r.verdict = "distinguished";
    r.witnesses.push_back({"orbit-count", "components", true, 1,
                           std::to_string(orbit_count(d1)) + " vs " + std::to_string(orbit_count(d2))});
    return r;
  }
  if (allow_permutations && d1.mu > cfg.permutation_guard) {
    fail(ErrorKind::CapExceeded, "refusing to try " + std::to_string(d1.mu) +
                                     "! component permutations (guard is mu <= " +
                                     std::to_string(cfg.permutation_guard) + ")");
  }
  TauFingerprint f1 = link_fingerprint(d1, cfg);
  TauFingerprint f2 = link_fingerprint(d2, cfg);
  std::vector<Check> checks = checks_for(f1, f2, r.notes);
  std::vector<std::size_t> differing(checks.size(), 0);
  std::vector<std::string> details(checks.size());

  std::vector<int> perm(static_cast<std::size_t>(d1.mu));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    TauFingerprint g = permute_components(f2, d2, perm, cfg);
    ++r.permutations_tested;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      std::string a = checks[i].value(f1);
      std::string b = checks[i].value(g);
      if (a != b) {
        if (differing[i]++ == 0) details[i] = shorten(a) + " vs " + shorten(b);
      }
    }
  } while (allow_permutations && std::next_permutation(perm.begin(), perm.end()));

  bool any_universal = false;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (differing[i] == 0) continue;
    bool universal = differing[i] == r.permutations_tested;
    any_universal = any_universal || universal;
    r.witnesses.push_back({checks[i].name, checks[i].level, universal, differing[i], details[i]});
  }
  r.verdict = any_universal ? "distinguished" : "not distinguished";
  if (!any_universal) {
    r.notes.push_back("no tested invariant separates the links; this does not show they are equivalent");
  }
  return r;
}

nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"name", x.name},
                 {"level", x.level},
                 {"universal", x.universal},
                 {"differing_permutations", x.differing},
                 {"detail", x.detail}});
  }
  return {{"verdict", r.verdict},
          {"allow_permutations", r.allow_permutations},
          {"permutations_tested", r.permutations_tested},
          {"witnesses", w},
          {"notes", r.notes}};
}

std::string render_table(const ComparisonReport& r) {
  std::ostringstream out;
  out << "verdict: " << r.verdict << "  (permutations tested: " << r.permutations_tested << ")\n";
  if (!r.witnesses.empty()) {
    std::size_t wn = 9, wl = 5;
    for (const auto& w : r.witnesses) {
      wn = std::max(wn, w.name.size());
      wl = std::max(wl, w.level.size());
    }
    auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n - s.size(), ' '); };
    out << pad("invariant", wn) << "  " << pad("level", wl) << "  universal  differs  detail\n";
    for (const auto& w : r.witnesses) {
      std::string differs = r.permutations_tested == 0 ? "-" : std::to_string(w.differing) + "/" + std::to_string(r.permutations_tested);
      out << pad(w.name, wn) << "  " << pad(w.level, wl) << "  " << pad(w.universal ? "yes" : "no", 9)
          << "  " << pad(differs, 7) << "  " << w.detail << "\n";
    }
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace medialink
