// medialink command-line tool. Talks to the engine only through medialink.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "medialink/medialink.h"

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kCap = 2;
constexpr int kDrift = 3;
constexpr int kDistinguished = 10;

struct Failure {
  ml_status status;
  std::string what;
};

void check(ml_status s, const std::string& context) {
  if (s != ML_OK) throw Failure{s, context + ": " + ml_last_error()};
}

struct DiagramDel {
  void operator()(ml_diagram* d) const { ml_diagram_free(d); }
};
struct ConfigDel {
  void operator()(ml_config* c) const { ml_config_free(c); }
};
using Diagram = std::unique_ptr<ml_diagram, DiagramDel>;
using Config = std::unique_ptr<ml_config, ConfigDel>;

// takes ownership of a malloc'd string from the library
std::string take(char* s) {
  std::string out = s ? s : "";
  ml_string_free(s);
  return out;
}

Diagram load(const std::string& source) {
  ml_diagram* d = nullptr;
  check(ml_diagram_load(source.c_str(), &d), source);
  return Diagram(d);
}

Config config(const std::string& path, const std::uint64_t* seed) {
  ml_config* c = nullptr;
  check(ml_config_load(path.empty() ? nullptr : path.c_str(), &c), "config");
  Config out(c);
  if (seed) check(ml_config_set_seed(c, *seed), "config");
  return out;
}

std::string invariants(const ml_diagram* d, const ml_config* c) {
  char* s = nullptr;
  check(ml_invariants(d, c, &s), "invariants");
  return take(s);
}

std::string render(const ml_diagram* d) {
  char* s = nullptr;
  check(ml_diagram_render(d, &s), "render");
  return take(s);
}

// Witness names of a comparison without permutations, or "" if none.
std::string drift_names(const ml_diagram* a, const ml_diagram* b, const ml_config* c) {
  char* report = nullptr;
  int distinguished = 0;
  check(ml_compare(a, b, c, 0, &distinguished, &report, nullptr), "compare");
  auto j = nlohmann::json::parse(take(report));
  std::string names;
  for (const auto& w : j["witnesses"]) {
    if (!names.empty()) names += ", ";
    names += w["name"].get<std::string>();
  }
  return names;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Failure{ML_ERR_USAGE, "cannot write " + path};
  f << text << "\n";
}

std::string slurp(const std::string& source) {
  if (source == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(source);
  if (!f) throw Failure{ML_ERR_USAGE, "cannot read " + source};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Bundle before and after must agree; names the invariants that moved.
int compare_bundles(const ml_diagram* before, const ml_diagram* after, const ml_config* c,
                    const std::string& what) {
  if (invariants(before, c) == invariants(after, c)) return kOk;
  std::string names = drift_names(before, after, c);
  std::cerr << what << ": invariant drift in " << (names.empty() ? "fingerprint" : names) << "\n";
  return kDrift;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"medialink: exact link invariants from diagrams"};
  app.require_subcommand(1);
  app.fallthrough();  // --config may follow the subcommand

  std::string config_path;
  app.add_option("--config", config_path, "RunConfig JSON (default: $MEDIALINK_CONFIG)");

  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* inv = app.add_subcommand("invariants", "print the invariant bundle as JSON");
  std::string inv_src;
  bool inv_json = false;
  inv->add_option("source", inv_src, "fixture:NAME, JSON or PD file")->required();
  inv->add_flag("--json", inv_json, "JSON output (the default)");
  auto* inv_seed = inv->add_option("--seed", seed, "seed recorded in the output");

  auto* dist = app.add_subcommand("distinguish", "compare two diagrams");
  std::string da, db;
  bool perms = false, table = false;
  dist->add_option("first", da)->required();
  dist->add_option("second", db)->required();
  dist->add_flag("--permutations", perms, "allow renumbering of components");
  dist->add_flag("--table", table, "aligned text instead of JSON");

  auto* col = app.add_subcommand("colorings", "count affine quandle colorings");
  std::string col_src;
  std::uint64_t n = 0, u = 0, limit = 1000000;
  bool brute = false;
  col->add_option("source", col_src)->required();
  col->add_option("-n,--modulus", n)->required();
  col->add_option("-u,--unit", u)->required();
  col->add_flag("--brute", brute, "also enumerate and compare");
  col->add_option("--limit", limit, "largest n^arcs the enumeration may visit");

  auto* alt = app.add_subcommand("alternating", "rewrite to alternating writhes");
  std::string alt_src, alt_out;
  alt->add_option("source", alt_src)->required();
  alt->add_option("-o,--output", alt_out, "output file (default stdout)");

  auto* fuzz = app.add_subcommand("fuzz", "apply random Reidemeister moves and recheck");
  std::string fz_src, fz_out;
  int fz_moves = 20;
  fuzz->add_option("source", fz_src)->required();
  fuzz->add_option("--moves", fz_moves)->check(CLI::NonNegativeNumber);
  auto* fz_seed = fuzz->add_option("--seed", seed);
  fuzz->add_option("-o,--output", fz_out, "write the moved diagram here");

  auto* val = app.add_subcommand("validate", "list well-formedness violations");
  std::string val_src;
  val->add_option("source", val_src, "JSON or PD file, or - for stdin")->required();

  auto* ren = app.add_subcommand("render", "print a diagram as JSON");
  std::string ren_src;
  bool list = false, pres = false, reduced = false;
  ren->add_option("source", ren_src);
  ren->add_flag("--list", list, "list built-in fixtures");
  ren->add_flag("--presentation", pres, "print the presentation matrix instead");
  ren->add_flag("--reduced", reduced, "with --presentation: identify all variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*inv) {
      (void)inv_json;
      seed_given = inv_seed->count() > 0;
      auto d = load(inv_src);
      auto c = config(config_path, seed_given ? &seed : nullptr);
      std::cout << invariants(d.get(), c.get()) << "\n";
      return kOk;
    }

    if (*dist) {
      auto a = load(da);
      auto b = load(db);
      auto c = config(config_path, nullptr);
      char* report = nullptr;
      char* tab = nullptr;
      int distinguished = 0;
      check(ml_compare(a.get(), b.get(), c.get(), perms ? 1 : 0, &distinguished, &report, &tab),
            "distinguish");
      std::string r = take(report), t = take(tab);
      std::cout << (table ? t : r + "\n");
      return distinguished ? kDistinguished : kOk;
    }

    if (*col) {
      auto d = load(col_src);
      char* s = nullptr;
      check(ml_colorings(d.get(), n, u, &s), "colorings");
      std::string count = take(s);
      if (!brute) {
        std::cout << count << "\n";
        return kOk;
      }
      check(ml_colorings_brute(d.get(), n, u, limit, &s), "brute force");
      std::string enumerated = take(s);
      std::cout << "smith " << count << "\nbrute " << enumerated << "\n";
      if (count != enumerated) {
        std::cerr << "colorings: counts disagree\n";
        return kDrift;
      }
      return kOk;
    }

    if (*alt) {
      auto d = load(alt_src);
      auto c = config(config_path, nullptr);
      ml_diagram* raw = nullptr;
      check(ml_make_alternating(d.get(), &raw), "alternating");
      Diagram out(raw);
      if (!ml_has_alternating_writhes(out.get())) {
        std::cerr << "alternating: result does not have alternating writhes\n";
        return kDrift;
      }
      int rc = compare_bundles(d.get(), out.get(), c.get(), "alternating");
      if (rc != kOk) return rc;
      write_out(alt_out, render(out.get()));
      std::cerr << "alternating writhes, " << ml_diagram_crossings(out.get()) << " crossings, bundle unchanged\n";
      return kOk;
    }

    if (*fuzz) {
      seed_given = fz_seed->count() > 0;
      auto d = load(fz_src);
      auto c = config(config_path, seed_given ? &seed : nullptr);
      ml_diagram* raw = nullptr;
      char* mv = nullptr;
      check(ml_random_moves(d.get(), fz_moves, seed, &raw, &mv), "fuzz");
      Diagram out(raw);
      std::string moves = take(mv);
      int rc = compare_bundles(d.get(), out.get(), c.get(), "fuzz (seed " + std::to_string(seed) + ")");
      if (rc != kOk) {
        std::cerr << "moves: " << moves << "\n";
        return rc;
      }
      if (!fz_out.empty()) write_out(fz_out, render(out.get()));
      std::cout << "bundle stable (seed " << seed << ", " << fz_moves << " moves, "
                << ml_diagram_crossings(out.get()) << " crossings)\n";
      return kOk;
    }

    if (*val) {
      std::string text;
      if (val_src.rfind("fixture:", 0) == 0) {
        auto d = load(val_src);
        text = render(d.get());
      } else {
        text = slurp(val_src);
      }
      int valid = 0;
      char* v = nullptr;
      check(ml_validate_text(text.c_str(), &valid, &v), "validate");
      std::cout << take(v) << "\n";
      return valid ? kOk : kError;
    }

    if (*ren) {
      if (list) {
        char* s = nullptr;
        check(ml_fixture_names(&s), "fixtures");
        std::cout << take(s) << "\n";
        return kOk;
      }
      if (ren_src.empty()) throw Failure{ML_ERR_USAGE, "render: source required"};
      auto d = load(ren_src);
      if (pres) {
        char* s = nullptr;
        check(ml_presentation(d.get(), reduced ? 1 : 0, &s), "presentation");
        std::cout << take(s) << "\n";
      } else {
        std::cout << render(d.get()) << "\n";
      }
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "medialink: " << ml_status_name(f.status) << ": " << f.what << "\n";
    return f.status == ML_ERR_CAP ? kCap : kError;
  } catch (const std::exception& e) {
    std::cerr << "medialink: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
