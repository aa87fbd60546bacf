#include "medialink/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "medialink/error.hpp"

namespace medialink {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Inverse: return "R1inv";
    case MoveKind::R2: return "R2";
    case MoveKind::R2Inverse: return "R2inv";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string MoveSpec::describe() const {
  std::string s = to_string(kind);
  auto list = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  if (!arcs.empty()) s += " arcs=" + list(arcs);
  if (!crossings.empty()) s += " crossings=" + list(crossings);
  if (kind == MoveKind::R2) s += " w=" + std::to_string(writhe);
  if (kind == MoveKind::R1Plus || kind == MoveKind::R1Minus) {
    s += over_first ? " over-first" : " under-first";
  }
  return s;
}

namespace {

std::optional<std::size_t> end_crossing(const LinkDiagram& d, const std::string& arc) {
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (d.crossings[i].under_in == arc) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> start_crossing(const LinkDiagram& d, const std::string& arc) {
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (d.crossings[i].under_out == arc) return i;
  }
  return std::nullopt;
}

bool passes_over(const LinkDiagram& d, const std::string& arc) {
  return std::any_of(d.crossings.begin(), d.crossings.end(),
                     [&](const Crossing& c) { return c.over == arc; });
}

std::size_t require_arc(const LinkDiagram& d, const std::string& id, const MoveSpec& m) {
  auto i = d.arc_index(id);
  if (!i) fail(ErrorKind::Usage, m.describe() + ": unknown arc '" + id + "'");
  return *i;
}

std::size_t require_crossing(const LinkDiagram& d, const std::string& id, const MoveSpec& m) {
  auto i = d.crossing_index(id);
  if (!i) fail(ErrorKind::Usage, m.describe() + ": unknown crossing '" + id + "'");
  return *i;
}

[[noreturn]] void mismatch(const MoveSpec& m, const std::string& why) {
  fail(ErrorKind::Usage, m.describe() + ": site does not match (" + why + ")");
}

void rename_arc(LinkDiagram& d, const std::string& from, const std::string& to) {
  for (auto& c : d.crossings) {
    if (c.over == from) c.over = to;
    if (c.under_in == from) c.under_in = to;
    if (c.under_out == from) c.under_out = to;
  }
  d.arcs.erase(std::remove_if(d.arcs.begin(), d.arcs.end(),
                              [&](const Arc& a) { return a.id == from; }),
               d.arcs.end());
}

void remove_crossings(LinkDiagram& d, const std::vector<std::string>& ids) {
  d.crossings.erase(std::remove_if(d.crossings.begin(), d.crossings.end(),
                                   [&](const Crossing& c) {
                                     return std::find(ids.begin(), ids.end(), c.id) != ids.end();
                                   }),
                    d.crossings.end());
}

void insert_arc_after(LinkDiagram& d, std::size_t index, Arc arc) {
  d.arcs.insert(d.arcs.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(arc));
}

LinkDiagram kink(const LinkDiagram& d, const std::string& arc, int w, bool over_first,
                 const MoveSpec& m) {
  if (w != 1 && w != -1) fail(ErrorKind::Usage, "kink writhe must be +1 or -1");
  std::size_t ai = require_arc(d, arc, m);
  LinkDiagram out = d;
  auto end = end_crossing(out, arc);
  if (!end) {
    out.crossings.push_back({fresh_id(out, "k"), arc, arc, arc, w});
    return out;
  }
  std::string piece = fresh_id(out, arc);
  insert_arc_after(out, ai, {piece, out.arcs[ai].component});
  out.crossings[*end].under_in = piece;
  std::string k = fresh_id(out, "k");
  out.crossings.push_back({k, over_first ? arc : piece, arc, piece, w});
  return out;
}

bool is_kink(const Crossing& c) {
  if (c.under_in == c.under_out) return c.over == c.under_in;
  return c.over == c.under_in || c.over == c.under_out;
}

LinkDiagram undo_kink(const LinkDiagram& d, const MoveSpec& m) {
  if (m.crossings.size() != 1) fail(ErrorKind::Usage, "R1inv needs exactly one crossing");
  const Crossing c = d.crossings[require_crossing(d, m.crossings[0], m)];
  if (!is_kink(c)) mismatch(m, "crossing " + c.id + " is not a kink");
  LinkDiagram out = d;
  remove_crossings(out, {c.id});
  if (c.under_in != c.under_out) rename_arc(out, c.under_out, c.under_in);
  return out;
}

LinkDiagram bigon(const LinkDiagram& d, const MoveSpec& m) {
  if (m.arcs.size() != 2) fail(ErrorKind::Usage, "R2 needs {over arc, under arc}");
  const std::string& x = m.arcs[0];
  const std::string& y = m.arcs[1];
  require_arc(d, x, m);
  std::size_t yi = require_arc(d, y, m);
  if (x == y) mismatch(m, "over and under arc coincide");
  if (m.writhe != 1 && m.writhe != -1) mismatch(m, "writhe must be +1 or -1");
  LinkDiagram out = d;
  int comp = out.arcs[yi].component;
  std::string y2 = fresh_id(out, y);
  insert_arc_after(out, yi, {y2, comp});
  std::string y3 = y;
  if (auto end = end_crossing(out, y)) {
    y3 = fresh_id(out, y);
    insert_arc_after(out, yi + 1, {y3, comp});
    out.crossings[*end].under_in = y3;
  }
  std::string c1 = fresh_id(out, "k");
  out.crossings.push_back({c1, x, y, y2, m.writhe});
  std::string c2 = fresh_id(out, "k");
  out.crossings.push_back({c2, x, y2, y3, -m.writhe});
  return out;
}

std::optional<std::string> bigon_inverse_problem(const LinkDiagram& d, const Crossing& c1,
                                                 const Crossing& c2) {
  if (c1.id == c2.id) return "crossings coincide";
  if (c1.over != c2.over) return "different over arcs";
  if (c1.writhe != -c2.writhe) return "writhes do not cancel";
  if (c1.under_out != c2.under_in) return "crossings are not consecutive along the under strand";
  const std::string& middle = c1.under_out;
  if (middle == c1.over) return "middle arc is the over arc";
  if (passes_over(d, middle)) return "middle arc " + middle + " passes over another crossing";
  return std::nullopt;
}

LinkDiagram undo_bigon(const LinkDiagram& d, const MoveSpec& m) {
  if (m.crossings.size() != 2) fail(ErrorKind::Usage, "R2inv needs two crossings");
  const Crossing c1 = d.crossings[require_crossing(d, m.crossings[0], m)];
  const Crossing c2 = d.crossings[require_crossing(d, m.crossings[1], m)];
  if (auto why = bigon_inverse_problem(d, c1, c2)) mismatch(m, *why);
  LinkDiagram out = d;
  remove_crossings(out, {c1.id, c2.id});
  rename_arc(out, c1.under_out, c1.under_in);  // middle arc disappears
  if (c2.under_out != c1.under_in) rename_arc(out, c2.under_out, c1.under_in);
  return out;
}

// R3 site: cA = (T over M_in -> M_out), cB = (T over B), cC = (M over B),
// consecutive along B. Returns the reason when the triple is not a site.
std::optional<std::string> triangle_problem(const LinkDiagram& d, const Crossing& ca,
                                            const Crossing& cb, const Crossing& cc) {
  if (ca.id == cb.id || ca.id == cc.id || cb.id == cc.id) return "crossings must be distinct";
  if (ca.over != cb.over) return "first two crossings need the same over arc";
  if (ca.writhe != cb.writhe) return "first two crossings need equal writhes";
  const std::string& top = ca.over;
  std::string middle;
  if (cb.under_out == cc.under_in) {
    if (cc.over != ca.under_out) return "middle strand does not pass over after the top crossing";
    middle = cb.under_out;
  } else if (cc.under_out == cb.under_in) {
    if (cc.over != ca.under_in) return "middle strand does not pass over before the top crossing";
    middle = cc.under_out;
  } else {
    return "bottom crossings are not consecutive";
  }
  if (middle == top || middle == ca.under_in || middle == ca.under_out) {
    return "bottom middle arc is shared with another strand";
  }
  if (passes_over(d, middle)) return "bottom middle arc passes over another crossing";
  return std::nullopt;
}

LinkDiagram triangle(const LinkDiagram& d, const MoveSpec& m) {
  if (m.crossings.size() != 3) fail(ErrorKind::Usage, "R3 needs three crossings");
  std::size_t ia = require_crossing(d, m.crossings[0], m);
  std::size_t ib = require_crossing(d, m.crossings[1], m);
  std::size_t ic = require_crossing(d, m.crossings[2], m);
  const Crossing ca = d.crossings[ia], cb = d.crossings[ib], cc = d.crossings[ic];
  if (auto why = triangle_problem(d, ca, cb, cc)) mismatch(m, *why);
  LinkDiagram out = d;
  Crossing& nb = out.crossings[ib];
  Crossing& nc = out.crossings[ic];
  if (cb.under_out == cc.under_in) {
    // B passes under T then under M: afterwards under M (now M_in) then T.
    nc.under_in = cb.under_in;
    nc.under_out = cb.under_out;
    nc.over = ca.under_in;
    nb.under_in = cb.under_out;
    nb.under_out = cc.under_out;
  } else {
    nb.under_in = cc.under_in;
    nb.under_out = cc.under_out;
    nc.under_in = cc.under_out;
    nc.under_out = cb.under_out;
    nc.over = ca.under_out;
  }
  return out;
}

}  // namespace

LinkDiagram insert_trivial_crossing(const LinkDiagram& d, const std::string& arc, int w) {
  MoveSpec m{w > 0 ? MoveKind::R1Plus : MoveKind::R1Minus, {arc}, {}, w, true};
  return kink(d, arc, w, true, m);
}

LinkDiagram make_alternating(const LinkDiagram& d) {
  require_valid(d);
  LinkDiagram out = d;
  for (int i = 1; i <= d.mu; ++i) {
    bool passes_under = std::any_of(out.crossings.begin(), out.crossings.end(), [&](const Crossing& c) {
      return out.component_of(c.under_in) == i;
    });
    if (passes_under) continue;
    auto arc = std::find_if(out.arcs.begin(), out.arcs.end(),
                            [i](const Arc& a) { return a.component == i; });
    out = insert_trivial_crossing(out, arc->id, 1);
  }
  std::vector<std::string> snapshot;
  for (const auto& a : out.arcs) snapshot.push_back(a.id);
  for (const auto& id : snapshot) {
    auto in = end_crossing(out, id);
    auto from = start_crossing(out, id);
    if (!in || !from) fail(ErrorKind::Internal, "arc " + id + " lacks underpass incidences");
    int w_in = out.crossings[*in].writhe;
    int w_from = out.crossings[*from].writhe;
    if (*in == *from || w_in == w_from) out = insert_trivial_crossing(out, id, -w_in);
  }
  return out;
}

LinkDiagram reidemeister_move(const LinkDiagram& d, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::R1Plus:
    case MoveKind::R1Minus: {
      if (m.arcs.size() != 1) fail(ErrorKind::Usage, "R1 needs exactly one arc");
      return kink(d, m.arcs[0], m.kind == MoveKind::R1Plus ? 1 : -1, m.over_first, m);
    }
    case MoveKind::R1Inverse: return undo_kink(d, m);
    case MoveKind::R2: return bigon(d, m);
    case MoveKind::R2Inverse: return undo_bigon(d, m);
    case MoveKind::R3: return triangle(d, m);
  }
  fail(ErrorKind::Usage, "unknown move kind");
}

std::vector<MoveSpec> legal_moves(const LinkDiagram& d, MoveKind kind) {
  std::vector<MoveSpec> out;
  switch (kind) {
    case MoveKind::R1Plus:
    case MoveKind::R1Minus: {
      int w = kind == MoveKind::R1Plus ? 1 : -1;
      for (const auto& a : d.arcs) {
        out.push_back({kind, {a.id}, {}, w, true});
        if (end_crossing(d, a.id)) out.push_back({kind, {a.id}, {}, w, false});
      }
      break;
    }
    case MoveKind::R1Inverse:
      for (const auto& c : d.crossings) {
        if (is_kink(c)) out.push_back({kind, {}, {c.id}});
      }
      break;
    case MoveKind::R2:
      for (const auto& x : d.arcs) {
        for (const auto& y : d.arcs) {
          if (x.id == y.id) continue;
          out.push_back({kind, {x.id, y.id}, {}, 1});
          out.push_back({kind, {x.id, y.id}, {}, -1});
        }
      }
      break;
    case MoveKind::R2Inverse:
      for (const auto& c1 : d.crossings) {
        for (const auto& c2 : d.crossings) {
          if (c1.under_out == c2.under_in && !bigon_inverse_problem(d, c1, c2)) {
            out.push_back({kind, {}, {c1.id, c2.id}});
          }
        }
      }
      break;
    case MoveKind::R3:
      for (const auto& ca : d.crossings) {
        for (const auto& cb : d.crossings) {
          if (cb.id == ca.id || cb.over != ca.over || cb.writhe != ca.writhe) continue;
          for (const auto& cc : d.crossings) {
            if (!triangle_problem(d, ca, cb, cc)) out.push_back({kind, {}, {ca.id, cb.id, cc.id}});
          }
        }
      }
      break;
  }
  return out;
}

FuzzResult random_moves(const LinkDiagram& d, int count, std::uint64_t seed) {
  static constexpr MoveKind kinds[] = {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R1Inverse,
                                       MoveKind::R2,     MoveKind::R2Inverse, MoveKind::R3};
  std::mt19937_64 rng(seed);
  FuzzResult result{d, {}};
  for (int step = 0; step < count; ++step) {
    std::vector<std::vector<MoveSpec>> options;
    for (MoveKind k : kinds) {
      auto sites = legal_moves(result.diagram, k);
      if (!sites.empty()) options.push_back(std::move(sites));
    }
    const auto& sites = options[rng() % options.size()];
    const MoveSpec& m = sites[rng() % sites.size()];
    result.diagram = reidemeister_move(result.diagram, m);
    result.applied.push_back(m);
  }
  return result;
}

}  // namespace medialink
