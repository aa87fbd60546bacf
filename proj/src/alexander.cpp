#include "medialink/alexander.hpp"

#include <algorithm>

#include "medialink/error.hpp"

namespace medialink {

CrowellCoord arc_coord(int component, int mu) {
  CrowellCoord c;
  c.free = IntLaurent::constant(1, 1);
  c.tors.assign(mu > 1 ? mu - 1 : 0, Integer(0));
  if (component >= 2) c.tors[component - 2] = 1;
  return c;
}

Presentation build_presentation(const LinkDiagram& d) {
  require_valid(d);
  Presentation p;
  p.level = Level::Multivariate;
  p.mu = d.mu;
  p.varcount = static_cast<std::size_t>(d.mu);
  for (const auto& a : d.arcs) {
    p.generators.push_back(a.id);
    p.components.push_back(a.component);
    p.crowell.push_back(IntLaurent::variable(a.component - 1, p.varcount) -
                        IntLaurent::constant(1, p.varcount));
  }
  p.matrix.assign(p.rows(), std::vector<IntLaurent>(d.crossings.size(), p.zero()));
  for (std::size_t j = 0; j < d.crossings.size(); ++j) {
    const Crossing& c = d.crossings[j];
    p.relations.push_back(c.id);
    std::size_t r1 = *d.arc_index(c.a1());
    std::size_t r2 = *d.arc_index(c.a2());
    std::size_t r3 = *d.arc_index(c.a3());
    auto t = [&](std::size_t row) {
      return IntLaurent::variable(p.components[row] - 1, p.varcount);
    };
    IntLaurent one = IntLaurent::constant(1, p.varcount);
    // kinks share rows; coefficients add
    p.matrix[r1][j] += one - t(r2);
    p.matrix[r2][j] += t(r1);
    p.matrix[r3][j] -= one;
  }
  if (!check_crowell_compat(p)) {
    fail(ErrorKind::Internal, "presentation is not Crowell compatible");
  }
  return p;
}

bool check_crowell_compat(const Presentation& p) {
  for (std::size_t j = 0; j < p.cols(); ++j) {
    if (p.level == Level::Multivariate) {
      IntLaurent sum = p.zero();
      for (std::size_t r = 0; r < p.rows(); ++r) sum += p.crowell[r] * p.matrix[r][j];
      if (!sum.is_zero()) return false;
    } else {
      IntLaurent free(1);
      std::vector<Integer> tors(p.mu > 1 ? p.mu - 1 : 0, Integer(0));
      for (std::size_t r = 0; r < p.rows(); ++r) {
        const IntLaurent& m = p.matrix[r][j];
        if (m.is_zero()) continue;
        free += m * p.coords[r].free;
        Integer e = augmentation(m);
        for (std::size_t i = 0; i < tors.size(); ++i) tors[i] += e * p.coords[r].tors[i];
      }
      if (!free.is_zero()) return false;
      if (std::any_of(tors.begin(), tors.end(), [](const Integer& x) { return x != 0; })) {
        return false;
      }
    }
  }
  return true;
}

Presentation reduce_tau(const Presentation& p) {
  if (p.level != Level::Multivariate) fail(ErrorKind::Usage, "reduce_tau needs a multivariate presentation");
  Presentation out;
  out.level = Level::Reduced;
  out.mu = p.mu;
  out.varcount = 1;
  out.generators = p.generators;
  out.components = p.components;
  out.relations = p.relations;
  out.matrix.resize(p.rows());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (const auto& e : p.matrix[r]) out.matrix[r].push_back(substitute_tau(e));
    out.coords.push_back(arc_coord(p.components[r], p.mu));
  }
  return out;
}

NuPresentation specialize_nu(const Presentation& p) {
  NuPresentation out;
  out.mu = p.mu;
  out.generators = p.generators;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    std::vector<Integer> row;
    for (const auto& e : p.matrix[r]) row.push_back(evaluate_nu(e));
    out.matrix.push_back(std::move(row));
    CrowellCoord c = p.level == Level::Reduced ? p.coords[r] : arc_coord(p.components[r], p.mu);
    NuCoord n;
    n.free = evaluate_nu(c.free);
    for (const auto& x : c.tors) {
      Integer m = x % 2;
      n.tors.push_back(m == 0 ? 0 : 1);
    }
    out.coords.push_back(std::move(n));
  }
  return out;
}

Presentation m0_presentation(const Presentation& p, const std::string& base) {
  if (p.level != Level::Reduced) fail(ErrorKind::Usage, "M_0 needs a reduced presentation");
  auto it = std::find(p.generators.begin(), p.generators.end(), base);
  if (it == p.generators.end()) fail(ErrorKind::Usage, "unknown base arc '" + base + "'");
  std::size_t b = static_cast<std::size_t>(it - p.generators.begin());

  // a = d(a) + base; the base coefficient of each column is the column sum,
  // which vanishes for reduced relations.
  for (std::size_t j = 0; j < p.cols(); ++j) {
    IntLaurent sum(1);
    for (std::size_t r = 0; r < p.rows(); ++r) sum += p.matrix[r][j];
    if (!sum.is_zero()) {
      fail(ErrorKind::Internal, "relation " + p.relations[j] + " has nonzero coefficient sum");
    }
  }
  Presentation out;
  out.level = Level::Reduced;
  out.mu = p.mu;
  out.varcount = 1;
  out.relations = p.relations;
  const CrowellCoord& cb = p.coords[b];
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (r == b) continue;
    out.generators.push_back("d(" + p.generators[r] + ")");
    out.components.push_back(0);
    out.matrix.push_back(p.matrix[r]);
    CrowellCoord c = p.coords[r];
    c.free -= cb.free;
    for (std::size_t i = 0; i < c.tors.size(); ++i) c.tors[i] -= cb.tors[i];
    out.coords.push_back(std::move(c));
  }
  return out;
}

namespace {

IntLaurent unit_inverse(const IntLaurent& u) {
  const auto& [e, c] = *u.terms().begin();
  ExponentVector inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return IntLaurent::monomial(inv, c);  // c is ±1
}

}  // namespace

Presentation simplify(const Presentation& p) {
  const std::size_t rows = p.rows();
  const std::size_t cols = p.cols();
  Matrix<IntLaurent> m = p.matrix;
  std::vector<bool> row_alive(rows, true), col_alive(cols, true);

  for (;;) {
    std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_alive[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (col_alive[c] && !m[r][c].is_zero()) {
          ++row_nnz[r];
          ++col_nnz[c];
        }
      }
    }
    bool found = false;
    std::size_t pr = 0, pc = 0, best = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!row_alive[r]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!col_alive[c] || !m[r][c].is_unit()) continue;
        std::size_t score = (row_nnz[r] - 1) * (col_nnz[c] - 1);
        if (!found || score < best) {
          found = true;
          best = score;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) break;

    IntLaurent inv = unit_inverse(m[pr][pc]);
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == pc || !col_alive[c] || m[pr][c].is_zero()) continue;
      IntLaurent factor = m[pr][c] * inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (row_alive[r] && !m[r][pc].is_zero()) m[r][c] -= factor * m[r][pc];
      }
    }
    row_alive[pr] = false;
    col_alive[pc] = false;
  }

  Presentation out;
  out.level = p.level;
  out.mu = p.mu;
  out.varcount = p.varcount;
  std::vector<std::size_t> keep_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!col_alive[c]) continue;
    bool nonzero = false;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_alive[r] && !m[r][c].is_zero()) nonzero = true;
    }
    if (nonzero) {
      keep_cols.push_back(c);
      out.relations.push_back(p.relations[c]);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (!row_alive[r]) continue;
    out.generators.push_back(p.generators[r]);
    out.components.push_back(p.components[r]);
    if (!p.crowell.empty()) out.crowell.push_back(p.crowell[r]);
    if (!p.coords.empty()) out.coords.push_back(p.coords[r]);
    std::vector<IntLaurent> row;
    for (std::size_t c : keep_cols) row.push_back(m[r][c]);
    out.matrix.push_back(std::move(row));
  }
  return out;
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  j["level"] = p.level == Level::Multivariate ? "multivariate" : "reduced";
  j["mu"] = p.mu;
  j["generators"] = p.generators;
  j["relations"] = p.relations;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : p.matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  j["matrix"] = rows;
  if (p.level == Level::Multivariate) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& e : p.crowell) c.push_back(e.to_string());
    j["crowell"] = c;
  } else {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& e : p.coords) {
      nlohmann::json tors = nlohmann::json::array();
      for (const auto& x : e.tors) tors.push_back(x.get_si());
      c.push_back({{"free", e.free.to_string()}, {"tors", tors}});
    }
    j["crowell"] = c;
  }
  return j;
}

}  // namespace medialink
