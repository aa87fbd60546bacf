#include "medialink/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "medialink/error.hpp"

namespace medialink {

void require_affine_spec(const AffineQuandleSpec& spec) {
  if (spec.n < 1) fail(ErrorKind::Usage, "modulus must be positive");
  if (spec.n > (std::uint64_t{1} << 31)) fail(ErrorKind::Usage, "modulus too large");
  if (std::gcd(spec.u % spec.n, spec.n) != 1 && spec.n != 1) {
    fail(ErrorKind::Usage, "u=" + std::to_string(spec.u) + " is not a unit mod " + std::to_string(spec.n));
  }
}

CayleyQuandle affine_quandle(const AffineQuandleSpec& spec) {
  require_affine_spec(spec);
  const std::uint64_t n = spec.n;
  const std::uint64_t u = spec.u % n;
  const std::uint64_t v = (1 + n - u) % n;  // 1 - u
  CayleyQuandle q;
  q.table.assign(n, std::vector<int>(n, 0));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) q.table[x][y] = static_cast<int>((u * x + v * y) % n);
  return q;
}

std::vector<std::string> check_quandle_axioms(const CayleyQuandle& q) {
  std::vector<std::string> out;
  const int n = static_cast<int>(q.size());
  for (const auto& row : q.table) {
    if (static_cast<int>(row.size()) != n) return {"table is not square"};
    for (int v : row) {
      if (v < 0 || v >= n) return {"table entry " + std::to_string(v) + " out of range"};
    }
  }
  for (int x = 0; x < n; ++x) {
    if (q.op(x, x) != x) out.push_back("idempotence fails at " + std::to_string(x));
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) hit[q.op(x, y)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      out.push_back("column " + std::to_string(y) + " is not a permutation");
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) {
          out.push_back("right distributivity fails at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
          return out;
        }
      }
  return out;
}

bool check_medial(const CayleyQuandle& q) {
  const int n = static_cast<int>(q.size());
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (q.op(q.op(w, x), q.op(y, z)) != q.op(q.op(w, y), q.op(x, z))) return false;
        }
  return true;
}

namespace {

using Perm = std::vector<int>;

Perm translation(const CayleyQuandle& q, int y) {
  Perm p(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) p[x] = q.op(static_cast<int>(x), y);
  return p;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// (a ∘ b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

std::vector<std::vector<int>> displacement_group(const CayleyQuandle& q) {
  if (!check_quandle_axioms(q).empty()) fail(ErrorKind::Usage, "table is not a quandle");
  const int n = static_cast<int>(q.size());
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> gens;
  std::set<Perm> seen_gen;
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      Perm g = compose(translation(q, y), inverse(translation(q, z)));
      if (g != id && seen_gen.insert(g).second) gens.push_back(g);
    }
  }
  std::vector<Perm> elements{id};
  std::set<Perm> seen{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm h = compose(g, elements[i]);
      if (seen.insert(h).second) elements.push_back(std::move(h));
    }
  }
  return elements;
}

std::size_t dis_group_order(const CayleyQuandle& q) { return displacement_group(q).size(); }

bool check_semiregular(const CayleyQuandle& q) {
  auto group = displacement_group(q);
  for (std::size_t i = 1; i < group.size(); ++i) {
    for (std::size_t x = 0; x < group[i].size(); ++x) {
      if (group[i][x] == static_cast<int>(x)) return false;
    }
  }
  return true;
}

CayleyQuandle conjugation_quandle(const std::vector<std::vector<int>>& group) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
  CayleyQuandle q;
  q.table.assign(group.size(), std::vector<int>(group.size(), 0));
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = 0; y < group.size(); ++y) {
      Perm c = compose(compose(group[y], group[x]), inverse(group[y]));
      auto it = index.find(c);
      if (it == index.end()) fail(ErrorKind::Usage, "element list is not closed under conjugation");
      q.table[x][y] = it->second;
    }
  }
  return q;
}

nlohmann::json to_json(const CayleyQuandle& q) { return q.table; }

CayleyQuandle quandle_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "quandle table must be an array of rows");
  CayleyQuandle q;
  try {
    q.table = j.get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("quandle table: ") + e.what());
  }
  const auto n = static_cast<int>(q.table.size());
  for (const auto& row : q.table) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::Parse, "quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(ErrorKind::Parse, "quandle table entry " + std::to_string(v) + " out of range");
  }
  return q;
}

// ---------------------------------------------------------------------------
// Colorings

namespace {

using i64 = long long;

i64 mulmod(i64 a, i64 b, i64 n) { return static_cast<i64>((__int128)a * b % n); }

}  // namespace

Integer count_colorings(const LinkDiagram& d, const AffineQuandleSpec& spec) {
  require_valid(d);
  require_affine_spec(spec);
  const i64 n = static_cast<i64>(spec.n);
  const i64 u = static_cast<i64>(spec.u % spec.n);
  const std::size_t R = d.arcs.size();
  const std::size_t C = d.crossings.size();
  std::vector<std::vector<i64>> A(R, std::vector<i64>(C, 0));
  auto add = [&](std::size_t r, std::size_t c, i64 v) { A[r][c] = ((A[r][c] + v) % n + n) % n; };
  for (std::size_t j = 0; j < C; ++j) {
    const Crossing& c = d.crossings[j];
    add(*d.arc_index(c.a1()), j, 1 - u);
    add(*d.arc_index(c.a2()), j, u);
    add(*d.arc_index(c.a3()), j, -1);
  }

  // Diagonalize by Euclidean row and column operations; entries stay in [0, n).
  std::vector<i64> diag;
  const std::size_t m = std::min(R, C);
  for (std::size_t t = 0; t < m; ++t) {
    for (;;) {
      bool found = false;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (A[i][j] != 0 && (!found || A[i][j] < A[bi][bj])) {
            found = true;
            bi = i;
            bj = j;
          }
        }
      if (!found) break;
      std::swap(A[bi], A[t]);
      for (auto& row : A) std::swap(row[bj], row[t]);
      const i64 p = A[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A[i][t] == 0) continue;
        i64 q = A[i][t] / p;
        for (std::size_t j = t; j < C; ++j) A[i][j] = ((A[i][j] - mulmod(q, A[t][j], n)) % n + n) % n;
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A[t][j] == 0) continue;
        i64 q = A[t][j] / p;
        for (std::size_t i = t; i < R; ++i) A[i][j] = ((A[i][j] - mulmod(q, A[i][t], n)) % n + n) % n;
        if (A[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(A[t][t]);
  }

  Integer count = 1;
  for (std::size_t r = 0; r < R; ++r) {
    i64 dr = r < diag.size() ? diag[r] : 0;
    count *= static_cast<unsigned long>(std::gcd(dr, n));
  }
  return count;
}

Integer count_colorings_brute(const LinkDiagram& d, const AffineQuandleSpec& spec,
                              std::uint64_t limit) {
  require_valid(d);
  require_affine_spec(spec);
  const std::uint64_t n = spec.n;
  const std::size_t g = d.arcs.size();
  Integer total = 1;
  for (std::size_t i = 0; i < g; ++i) {
    total *= static_cast<unsigned long>(n);
    if (total > limit) {
      fail(ErrorKind::CapExceeded, "brute-force coloring search needs " + std::to_string(n) + "^" +
                                       std::to_string(g) + " assignments, above " +
                                       std::to_string(limit));
    }
  }
  struct Row {
    std::size_t a1, a2, a3;
  };
  std::vector<Row> rows;
  for (const auto& c : d.crossings) {
    rows.push_back({*d.arc_index(c.a1()), *d.arc_index(c.a2()), *d.arc_index(c.a3())});
  }
  const std::uint64_t u = spec.u % n;
  const std::uint64_t v = (1 + n - u) % n;
  std::vector<std::uint64_t> color(g, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = std::all_of(rows.begin(), rows.end(), [&](const Row& r) {
      return (u * color[r.a2] + v * color[r.a1]) % n == color[r.a3];
    });
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < g && ++color[pos] == n) color[pos++] = 0;
    if (pos == g) break;
  }
  return Integer(static_cast<unsigned long>(count));
}

int orbit_count(const LinkDiagram& d) {
  require_valid(d);
  std::vector<std::size_t> parent(d.arcs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : d.crossings) {
    parent[find(*d.arc_index(c.under_in))] = find(*d.arc_index(c.under_out));
  }
  std::map<std::size_t, int> label;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    auto [it, fresh] = label.emplace(find(i), d.arcs[i].component);
    if (!fresh && it->second != d.arcs[i].component) {
      fail(ErrorKind::Internal, "orbit of arc " + d.arcs[i].id + " spans two components");
    }
  }
  int classes = static_cast<int>(label.size());
  if (classes != d.mu) {
    fail(ErrorKind::Internal, "orbit sweep found " + std::to_string(classes) + " classes, mu is " +
                                  std::to_string(d.mu));
  }
  return classes;
}

Presentation displacement_presentation(const LinkDiagram& d, const std::string& base) {
  require_valid(d);
  auto b = d.arc_index(base);
  if (!b) fail(ErrorKind::Usage, "unknown base arc '" + base + "'");
  Presentation p;
  p.level = Level::Reduced;
  p.mu = d.mu;
  p.varcount = 1;
  const CrowellCoord cb = arc_coord(d.arcs[*b].component, d.mu);
  for (const auto& a : d.arcs) {
    p.generators.push_back("d(" + a.id + ")");
    p.components.push_back(0);
    CrowellCoord c = arc_coord(a.component, d.mu);
    c.free -= cb.free;
    for (std::size_t i = 0; i < c.tors.size(); ++i) c.tors[i] -= cb.tors[i];
    p.coords.push_back(std::move(c));
  }
  const std::size_t C = d.crossings.size() + 1;
  p.matrix.assign(d.arcs.size(), std::vector<IntLaurent>(C, IntLaurent(1)));
  const IntLaurent one = IntLaurent::constant(1, 1);
  const IntLaurent t = IntLaurent::variable(0, 1);
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const Crossing& c = d.crossings[j];
    p.relations.push_back(c.id);
    p.matrix[*d.arc_index(c.a1())][j] += one - t;
    p.matrix[*d.arc_index(c.a2())][j] += t;
    p.matrix[*d.arc_index(c.a3())][j] -= one;
  }
  p.relations.push_back("base");
  p.matrix[*b][C - 1] = one;
  return p;
}

RatSmithResult displacement_rational_factors(const Presentation& reduced, const std::string& base) {
  RatSmithResult m0 = rational_invariants(m0_presentation(reduced, base));
  RatSmithResult out;
  out.rank = m0.rank;
  const RatLaurent t_minus_1 = RatLaurent::monomial(1, 1) - RatLaurent::constant(1);
  for (const auto& f : m0.factors) {
    auto [q, r] = rat_euclid_step(f, t_minus_1);
    RatLaurent g = r.is_zero() ? q.canonical() : f;
    if (!g.is_unit()) out.factors.push_back(g);
  }
  return out;
}

}  // namespace medialink
