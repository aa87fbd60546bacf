#include "medialink/medialink.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "medialink/alexander.hpp"
#include "medialink/distinguish.hpp"
#include "medialink/error.hpp"
#include "medialink/fixtures.hpp"
#include "medialink/moves.hpp"
#include "medialink/quandle.hpp"

struct ml_diagram {
  medialink::LinkDiagram d;
};

struct ml_config {
  medialink::RunConfig c;
};

namespace {

thread_local std::string last_error;

ml_status status_of(medialink::ErrorKind k) {
  using medialink::ErrorKind;
  switch (k) {
    case ErrorKind::Usage: return ML_ERR_USAGE;
    case ErrorKind::Parse: return ML_ERR_PARSE;
    case ErrorKind::Validation: return ML_ERR_VALIDATION;
    case ErrorKind::Domain: return ML_ERR_DOMAIN;
    case ErrorKind::CapExceeded: return ML_ERR_CAP;
    case ErrorKind::Internal: return ML_ERR_INTERNAL;
  }
  return ML_ERR_INTERNAL;
}

template <class F>
ml_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return ML_OK;
  } catch (const medialink::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return ML_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) medialink::fail(medialink::ErrorKind::Usage, std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* ml_last_error(void) { return last_error.c_str(); }

const char* ml_status_name(ml_status s) {
  switch (s) {
    case ML_OK: return "ok";
    case ML_ERR_USAGE: return "usage error";
    case ML_ERR_PARSE: return "parse error";
    case ML_ERR_VALIDATION: return "validation error";
    case ML_ERR_DOMAIN: return "domain error";
    case ML_ERR_CAP: return "cap exceeded";
    case ML_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void ml_string_free(char* s) { std::free(s); }

ml_status ml_diagram_parse(const char* text, ml_diagram** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new ml_diagram{medialink::parse_diagram(text)};
  });
}

ml_status ml_diagram_load(const char* source, ml_diagram** out) {
  return guarded([&] {
    need(source, "source");
    need(out, "out");
    *out = new ml_diagram{medialink::load_diagram(source)};
  });
}

void ml_diagram_free(ml_diagram* d) { delete d; }

ml_status ml_diagram_render(const ml_diagram* d, char** json) {
  return guarded([&] {
    need(d, "diagram");
    *json = dup(medialink::render_json(d->d));
  });
}

int ml_diagram_mu(const ml_diagram* d) { return d ? d->d.mu : 0; }

size_t ml_diagram_crossings(const ml_diagram* d) { return d ? d->d.crossings.size() : 0; }

ml_status ml_validate_text(const char* text, int* valid, char** violations_json) {
  return guarded([&] {
    need(text, "text");
    std::string s(text);
    std::vector<std::string> v;
    auto first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && s[first] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(s);
      } catch (const nlohmann::json::parse_error& e) {
        medialink::fail(medialink::ErrorKind::Parse, e.what());
      }
      v = medialink::validate(medialink::from_json(j));
    } else {
      try {
        medialink::parse_pd(s);
      } catch (const medialink::Error& e) {
        if (e.kind() != medialink::ErrorKind::Validation) throw;
        v.push_back(e.what());
      }
    }
    *valid = v.empty() ? 1 : 0;
    *violations_json = dup(nlohmann::json(v).dump(2));
  });
}

ml_status ml_fixture_names(char** json) {
  return guarded([&] {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : medialink::fixture_corpus()) {
      j.push_back({{"name", f.name}, {"stretch", f.stretch}, {"provenance", f.provenance}});
    }
    *json = dup(j.dump(2));
  });
}

ml_status ml_config_load(const char* path, ml_config** out) {
  return guarded([&] {
    need(out, "out");
    medialink::RunConfig c = path ? medialink::load_config_file(path) : medialink::default_config();
    *out = new ml_config{c};
  });
}

void ml_config_free(ml_config* c) { delete c; }

ml_status ml_config_set_seed(ml_config* c, uint64_t seed) {
  return guarded([&] {
    need(c, "config");
    c->c.seed = seed;
  });
}

ml_status ml_config_render(const ml_config* c, char** json) {
  return guarded([&] {
    need(c, "config");
    *json = dup(medialink::to_json(c->c).dump(2));
  });
}

ml_status ml_invariants(const ml_diagram* d, const ml_config* c, char** json) {
  return guarded([&] {
    need(d, "diagram");
    need(c, "config");
    *json = dup(medialink::to_json(medialink::link_fingerprint(d->d, c->c)).dump(2));
  });
}

ml_status ml_presentation(const ml_diagram* d, int reduced, char** json) {
  return guarded([&] {
    need(d, "diagram");
    auto p = medialink::build_presentation(d->d);
    if (reduced) p = medialink::reduce_tau(p);
    *json = dup(medialink::to_json(p).dump(2));
  });
}

ml_status ml_colorings(const ml_diagram* d, uint64_t n, uint64_t u, char** count) {
  return guarded([&] {
    need(d, "diagram");
    *count = dup(medialink::count_colorings(d->d, {n, u}).get_str());
  });
}

ml_status ml_colorings_brute(const ml_diagram* d, uint64_t n, uint64_t u, uint64_t limit,
                             char** count) {
  return guarded([&] {
    need(d, "diagram");
    *count = dup(medialink::count_colorings_brute(d->d, {n, u}, limit).get_str());
  });
}

ml_status ml_compare(const ml_diagram* a, const ml_diagram* b, const ml_config* c,
                     int allow_permutations, int* distinguished, char** report_json, char** table) {
  return guarded([&] {
    need(a, "first diagram");
    need(b, "second diagram");
    need(c, "config");
    auto r = medialink::compare(a->d, b->d, allow_permutations != 0, c->c);
    if (distinguished) *distinguished = r.distinguished() ? 1 : 0;
    if (report_json) *report_json = dup(medialink::to_json(r).dump(2));
    if (table) *table = dup(medialink::render_table(r));
  });
}

ml_status ml_make_alternating(const ml_diagram* d, ml_diagram** out) {
  return guarded([&] {
    need(d, "diagram");
    *out = new ml_diagram{medialink::make_alternating(d->d)};
  });
}

int ml_has_alternating_writhes(const ml_diagram* d) {
  return d && medialink::has_alternating_writhes(d->d) ? 1 : 0;
}

ml_status ml_random_moves(const ml_diagram* d, int moves, uint64_t seed, ml_diagram** out,
                          char** moves_json) {
  return guarded([&] {
    need(d, "diagram");
    if (moves < 0) medialink::fail(medialink::ErrorKind::Usage, "move count must be non-negative");
    auto r = medialink::random_moves(d->d, moves, seed);
    if (moves_json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& m : r.applied) j.push_back(m.describe());
      *moves_json = dup(j.dump(2));
    }
    *out = new ml_diagram{std::move(r.diagram)};
  });
}

}  // extern "C"
