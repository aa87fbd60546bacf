#include "medialink/modulealg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "medialink/error.hpp"

namespace medialink {

// ---------------------------------------------------------------------------
// Integer Smith form

namespace {

class IntegerSmith {
 public:
  IntegerSmith(Matrix<Integer> a, std::size_t cols, bool track)
      : A(std::move(a)), R(A.size()), C(cols), track_(track) {
    if (track_) {
      U = identity(R);
      Uinv = identity(R);
      V = identity(C);
    }
  }

  void run() {
    const std::size_t n = std::min(R, C);
    for (std::size_t t = 0; t < n; ++t) {
      if (!pivot_into(t, t, true)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (A[i][t] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
          row_add(i, t, -q);
          if (A[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (A[t][j] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
          col_add(j, t, -q);
          if (A[t][j] != 0) clean = false;
        }
        if (!clean) {
          pivot_into(t, t, false);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < R && !fixed; ++i) {
          for (std::size_t j = t + 1; j < C; ++j) {
            if (A[i][j] % A[t][t] != 0) {
              row_add(t, i, 1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (A[t][t] < 0) row_negate(t);
    }
  }

  SmithResult result() && {
    SmithResult s;
    for (std::size_t i = 0; i < std::min(R, C); ++i) s.diag.push_back(A[i][i]);
    s.D = std::move(A);
    s.U = std::move(U);
    s.V = std::move(V);
    s.Uinv = std::move(Uinv);
    return s;
  }

 private:
  static Matrix<Integer> identity(std::size_t n) {
    Matrix<Integer> m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  // Moves the smallest nonzero |entry| into (t, t). The full search covers
  // the trailing submatrix; otherwise only row t and column t.
  bool pivot_into(std::size_t t, std::size_t, bool full) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (A[i][j] == 0) return;
      Integer v = abs(A[i][j]);
      if (!found || v < best) {
        found = true;
        best = v;
        bi = i;
        bj = j;
      }
    };
    if (full) {
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < R; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < C; ++j) consider(t, j);
    }
    if (!found) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < C; ++j) A[dst][j] += q * A[src][j];
    if (!track_) return;
    for (std::size_t j = 0; j < R; ++j) U[dst][j] += q * U[src][j];
    for (std::size_t i = 0; i < R; ++i) Uinv[i][src] -= q * Uinv[i][dst];
  }
  void row_swap(std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    if (!track_) return;
    std::swap(U[a], U[b]);
    for (std::size_t i = 0; i < R; ++i) std::swap(Uinv[i][a], Uinv[i][b]);
  }
  void row_negate(std::size_t a) {
    for (auto& x : A[a]) x = -x;
    if (!track_) return;
    for (auto& x : U[a]) x = -x;
    for (std::size_t i = 0; i < R; ++i) Uinv[i][a] = -Uinv[i][a];
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < R; ++i) A[i][dst] += q * A[i][src];
    if (!track_) return;
    for (std::size_t i = 0; i < C; ++i) V[i][dst] += q * V[i][src];
  }
  void col_swap(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < R; ++i) std::swap(A[i][a], A[i][b]);
    if (!track_) return;
    for (std::size_t i = 0; i < C; ++i) std::swap(V[i][a], V[i][b]);
  }

  Matrix<Integer> A, U, V, Uinv;
  std::size_t R, C;
  bool track_;
};

}  // namespace

SmithResult smith_integer(const Matrix<Integer>& A, std::size_t cols, bool track) {
  for (const auto& row : A) {
    if (row.size() != cols) fail(ErrorKind::Usage, "smith_integer: ragged matrix");
  }
  IntegerSmith s(A, cols, track);
  s.run();
  return std::move(s).result();
}

SmithResult smith_integer(const Matrix<Integer>& A, bool track) {
  return smith_integer(A, A.empty() ? 0 : A[0].size(), track);
}

AbelianGroup abelian_invariants(const Matrix<Integer>& A, std::size_t gens) {
  if (A.size() != gens) fail(ErrorKind::Usage, "abelian_invariants: row count differs from generator count");
  SmithResult s = smith_integer(A, false);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : s.diag) {
    if (d != 0) ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.rank = gens - nonzero;
  return g;
}

// ---------------------------------------------------------------------------
// Rational Smith form over Q[t^{±1}]

RatSmithResult smith_rational_univariate(const Matrix<RatLaurent>& input, std::size_t gens) {
  if (input.size() != gens) fail(ErrorKind::Usage, "smith_rational_univariate: row count differs from generator count");
  Matrix<RatLaurent> A = input;
  const std::size_t R = A.size();
  const std::size_t C = R ? A[0].size() : 0;

  auto row_sub = [&](std::size_t dst, std::size_t src, const RatLaurent& q) {
    for (std::size_t j = 0; j < C; ++j) {
      if (!A[src][j].is_zero()) A[dst][j] -= q * A[src][j];
    }
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const RatLaurent& q) {
    for (std::size_t i = 0; i < R; ++i) {
      if (!A[i][src].is_zero()) A[i][dst] -= q * A[i][src];
    }
  };
  auto pivot_into = [&](std::size_t t, bool full) {
    bool found = false;
    std::size_t bi = t, bj = t;
    int best = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (A[i][j].is_zero()) return;
      int s = A[i][j].span_degree();
      if (!found || s < best) {
        found = true;
        best = s;
        bi = i;
        bj = j;
      }
    };
    if (full) {
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < R; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < C; ++j) consider(t, j);
    }
    if (!found) return false;
    if (bi != t) std::swap(A[bi], A[t]);
    if (bj != t) {
      for (std::size_t i = 0; i < R; ++i) std::swap(A[i][bj], A[i][t]);
    }
    return true;
  };

  std::vector<RatLaurent> diag;
  const std::size_t n = std::min(R, C);
  for (std::size_t t = 0; t < n; ++t) {
    if (!pivot_into(t, true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A[i][t].is_zero()) continue;
        auto [q, r] = rat_euclid_step(A[i][t], A[t][t]);
        row_sub(i, t, q);
        if (!A[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A[t][j].is_zero()) continue;
        auto [q, r] = rat_euclid_step(A[t][j], A[t][t]);
        col_sub(j, t, q);
        if (!A[t][j].is_zero()) clean = false;
      }
      if (!clean) {
        pivot_into(t, false);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (A[i][j].is_zero()) continue;
          if (!rat_euclid_step(A[i][j], A[t][t]).second.is_zero()) {
            for (std::size_t c = 0; c < C; ++c) A[t][c] += A[i][c];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(A[t][t]);
  }

  RatSmithResult out;
  out.rank = gens - diag.size();
  for (const auto& d : diag) {
    if (!d.is_unit()) out.factors.push_back(d.canonical());
  }
  return out;
}

RatSmithResult rational_invariants(const Presentation& p) {
  if (p.varcount != 1) fail(ErrorKind::Usage, "rational invariants need a one-variable presentation");
  Matrix<RatLaurent> A;
  for (const auto& row : p.matrix) {
    std::vector<RatLaurent> r;
    for (const auto& e : row) r.push_back(RatLaurent::from(e));
    A.push_back(std::move(r));
  }
  return smith_rational_univariate(A, p.rows());
}

// ---------------------------------------------------------------------------
// Minors

namespace {

// Calls f on every m x m minor of M (row subsets in lexicographic order,
// columns in lexicographic order when all_columns is set, otherwise only the
// nonzero ones in mask order). Stops when f returns false.
template <class F>
void for_each_minor(const Matrix<IntLaurent>& M, std::size_t cols, std::size_t m,
                    std::size_t varcount, bool all_columns, F&& f) {
  const std::size_t rows = M.size();
  std::vector<std::size_t> R(m);
  for (std::size_t i = 0; i < m; ++i) R[i] = i;
  const IntLaurent zero(varcount);
  for (;;) {
    std::map<std::uint64_t, IntLaurent> level{{0, IntLaurent::constant(1, varcount)}};
    for (std::size_t i = 0; i < m; ++i) {
      std::map<std::uint64_t, IntLaurent> next;
      for (const auto& [mask, val] : level) {
        for (std::size_t j = 0; j < cols; ++j) {
          std::uint64_t bit = std::uint64_t{1} << j;
          if ((mask & bit) || M[R[i]][j].is_zero()) continue;
          IntLaurent term = M[R[i]][j] * val;
          int above = std::popcount(mask >> j);
          auto [it, fresh] = next.try_emplace(mask | bit, zero);
          if (above % 2) it->second -= term;
          else it->second += term;
        }
      }
      level = std::move(next);
    }
    if (all_columns) {
      std::vector<std::size_t> Cs(m);
      for (std::size_t i = 0; i < m; ++i) Cs[i] = i;
      for (;;) {
        std::uint64_t mask = 0;
        for (auto c : Cs) mask |= std::uint64_t{1} << c;
        auto it = level.find(mask);
        if (!f(it == level.end() ? zero : it->second)) return;
        std::size_t i = m;
        while (i > 0 && Cs[i - 1] == cols - m + i - 1) --i;
        if (i == 0) break;
        ++Cs[i - 1];
        for (std::size_t j = i; j < m; ++j) Cs[j] = Cs[j - 1] + 1;
      }
    } else {
      for (const auto& [mask, val] : level) {
        if (!val.is_zero() && !f(val)) return;
      }
    }
    std::size_t i = m;
    while (i > 0 && R[i - 1] == rows - m + i - 1) --i;
    if (i == 0) break;
    ++R[i - 1];
    for (std::size_t j = i; j < m; ++j) R[j] = R[j - 1] + 1;
  }
}

// Size of the minors for E_k, or -1 for the zero ideal, 0 for the unit ideal.
long minor_size(const Presentation& p, int k, const MinorCaps& caps) {
  if (k < 0 || static_cast<std::size_t>(k) > p.rows()) {
    fail(ErrorKind::Usage, "ideal index k=" + std::to_string(k) + " outside 0.." +
                               std::to_string(p.rows()));
  }
  long m = static_cast<long>(p.rows()) - k;
  if (m <= 0) return 0;
  if (static_cast<std::size_t>(m) > p.cols()) return -1;
  if (p.rows() > caps.max_rows) {
    fail(ErrorKind::CapExceeded, "minor enumeration: " + std::to_string(p.rows()) +
                                     " rows exceeds the cap of " + std::to_string(caps.max_rows));
  }
  if (static_cast<std::size_t>(m) > caps.max_minor) {
    fail(ErrorKind::CapExceeded, "minor enumeration: size " + std::to_string(m) +
                                     " exceeds the cap of " + std::to_string(caps.max_minor));
  }
  if (p.cols() > 64) fail(ErrorKind::CapExceeded, "minor enumeration: more than 64 relations");
  return m;
}

}  // namespace

std::vector<IntLaurent> elementary_ideal_generators(const Presentation& p, int k,
                                                    const MinorCaps& caps) {
  long m = minor_size(p, k, caps);
  if (m == 0) return {IntLaurent::constant(1, p.varcount)};
  if (m < 0) return {};
  std::vector<IntLaurent> out;
  for_each_minor(p.matrix, p.cols(), static_cast<std::size_t>(m), p.varcount, true,
                 [&](const IntLaurent& v) {
                   out.push_back(v);
                   return true;
                 });
  return out;
}

IntLaurent alexander_poly(const Presentation& p, int k, const MinorCaps& caps) {
  if (p.varcount != 1) fail(ErrorKind::Usage, "alexander_poly needs a one-variable presentation");
  long m = minor_size(p, k, caps);
  if (m == 0) return IntLaurent::constant(1, 1);
  IntLaurent g(1);
  if (m < 0) return g;
  const IntLaurent one = IntLaurent::constant(1, 1);
  for_each_minor(p.matrix, p.cols(), static_cast<std::size_t>(m), 1, false,
                 [&](const IntLaurent& v) {
                   g = gcd_univariate(g, v);
                   return !(g == one);
                 });
  return normalize_unit(g);
}

DeltaList alexander_polys(const Presentation& p, const MinorCaps& caps) {
  DeltaList out;
  const IntLaurent one = IntLaurent::constant(1, 1);
  for (std::size_t k = 0; k <= p.rows(); ++k) {
    try {
      IntLaurent d = alexander_poly(p, static_cast<int>(k), caps);
      if (d == one) break;
      out.values.push_back(std::move(d));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      out.status = "cap-exceeded at k=" + std::to_string(k);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation fingerprints

std::vector<std::vector<int>> evaluation_points(int mu, std::size_t cap) {
  static constexpr int values[] = {1, 3, 5, -3};
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(mu), 0);
  while (out.size() < cap) {
    std::vector<int> pt;
    for (int i : idx) pt.push_back(values[i]);
    out.push_back(std::move(pt));
    int pos = mu - 1;
    while (pos >= 0 && idx[pos] == 3) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

Integer strip_point_primes(Integer v) {
  v = abs(v);
  if (v == 0) return v;
  for (int p : {3, 5}) {
    while (v % p == 0) v /= p;
  }
  return v;
}

namespace {

std::vector<Rational> as_rationals(const std::vector<int>& pt) {
  std::vector<Rational> out;
  for (int x : pt) out.emplace_back(x);
  return out;
}

}  // namespace

IdealFingerprint ideal_evaluation_fingerprint(const std::vector<IntLaurent>& gens, int mu, int k,
                                              std::size_t cap) {
  IdealFingerprint f;
  f.k = k;
  f.points = evaluation_points(mu, cap);
  for (const auto& pt : f.points) {
    auto q = as_rationals(pt);
    Integer g = 0;
    for (const auto& p : gens) {
      if (p.varcount() != static_cast<std::size_t>(mu)) {
        fail(ErrorKind::Usage, "ideal generator has the wrong number of variables");
      }
      Rational v = evaluate(p, q);
      Integer n = strip_point_primes(v.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    f.values.push_back(strip_point_primes(g));
  }
  return f;
}

IdealFingerprint ideal_fingerprint_of(const Presentation& p, int k, std::size_t cap) {
  // k beyond the generator count is allowed here: E_k is then the unit ideal.
  if (k < 0) fail(ErrorKind::Usage, "ideal index k=" + std::to_string(k) + " is negative");
  IdealFingerprint f;
  f.k = k;
  const int vars = static_cast<int>(p.varcount);
  f.points = evaluation_points(vars, cap);
  const long m = static_cast<long>(p.rows()) - k;
  for (const auto& pt : f.points) {
    if (m <= 0) {
      f.values.push_back(1);
      continue;
    }
    if (static_cast<std::size_t>(m) > p.cols()) {
      f.values.push_back(0);
      continue;
    }
    auto q = as_rationals(pt);
    Matrix<Integer> A(p.rows(), std::vector<Integer>(p.cols(), 0));
    for (std::size_t j = 0; j < p.cols(); ++j) {
      std::vector<Rational> col;
      Integer den = 1;
      for (std::size_t r = 0; r < p.rows(); ++r) {
        col.push_back(evaluate(p.matrix[r][j], q));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), col.back().get_den_mpz_t());
      }
      for (std::size_t r = 0; r < p.rows(); ++r) {
        Rational scaled = col[r] * den;
        A[r][j] = scaled.get_num();
      }
    }
    SmithResult s = smith_integer(A, p.cols(), false);
    Integer prod = 1;
    for (long i = 0; i < m; ++i) prod *= s.diag[static_cast<std::size_t>(i)];
    f.values.push_back(strip_point_primes(prod));
  }
  return f;
}

// ---------------------------------------------------------------------------
// ν fingerprint

NuFingerprint nu_fingerprint(const Matrix<Integer>& A, const std::vector<NuCoord>& coords, int mu,
                             std::size_t cap) {
  if (A.size() != coords.size()) fail(ErrorKind::Usage, "nu_fingerprint: one coordinate per generator required");
  const std::size_t R = A.size();
  const std::size_t C = R ? A[0].size() : 0;
  const std::size_t width = mu > 1 ? static_cast<std::size_t>(mu - 1) : 0;
  SmithResult s = smith_integer(A, C, true);

  NuFingerprint f;
  f.mu = mu;
  std::size_t nonzero = 0;
  std::vector<Integer> orders;
  std::vector<std::vector<int>> images;
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    const Integer& d = s.diag[i];
    if (d != 0) ++nonzero;
    if (d <= 1) continue;
    f.torsion.push_back(d);
    Integer free = 0;
    std::vector<Integer> tors(width, 0);
    for (std::size_t r = 0; r < R; ++r) {
      const Integer& c = s.Uinv[r][i];
      if (c == 0) continue;
      free += c * coords[r].free;
      for (std::size_t b = 0; b < width; ++b) tors[b] += c * coords[r].tors[b];
    }
    if (free != 0) fail(ErrorKind::Internal, "torsion generator has nonzero free coordinate");
    std::vector<int> bits;
    for (const auto& x : tors) bits.push_back(mpz_odd_p(x.get_mpz_t()) ? 1 : 0);
    orders.push_back(d);
    images.push_back(std::move(bits));
  }
  f.rank = R - nonzero;

  Integer size = 1;
  for (const auto& d : orders) size *= d;
  f.torsion_image.insert(std::vector<int>(width, 0));
  if (size <= cap) {
    f.status = "enumerated";
    std::vector<unsigned long> digit(orders.size(), 0);
    for (;;) {
      std::vector<int> v(width, 0);
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (digit[i] % 2 == 0) continue;
        for (std::size_t b = 0; b < width; ++b) v[b] ^= images[i][b];
      }
      f.torsion_image.insert(std::move(v));
      std::size_t pos = 0;
      while (pos < orders.size() && ++digit[pos] == orders[pos].get_ui()) digit[pos++] = 0;
      if (pos == orders.size()) break;
    }
  } else {
    f.status = "span";
    for (const auto& g : images) {
      std::set<std::vector<int>> more = f.torsion_image;
      for (auto v : f.torsion_image) {
        for (std::size_t b = 0; b < width; ++b) v[b] ^= g[b];
        more.insert(std::move(v));
      }
      f.torsion_image = std::move(more);
    }
  }
  return f;
}

NuFingerprint nu_fingerprint(const NuPresentation& p, std::size_t cap) {
  return nu_fingerprint(p.matrix, p.coords, p.mu, cap);
}

// ---------------------------------------------------------------------------
// JSON

std::string render_bits(const std::vector<int>& v) {
  std::string s;
  for (int b : v) s += b ? '1' : '0';
  return s;
}

nlohmann::json to_json(const RatSmithResult& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.factors) factors.push_back(f.to_string());
  return {{"rank", r.rank}, {"factors", factors}};
}

nlohmann::json to_json(const DeltaList& d) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : d.values) values.push_back(v.to_string());
  return {{"values", values}, {"status", d.status}};
}

nlohmann::json to_json(const IdealFingerprint& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values) values.push_back(v.get_str());
  return {{"k", f.k}, {"points", f.points.size()}, {"values", values}};
}

nlohmann::json to_json(const NuFingerprint& f) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : f.torsion) torsion.push_back(t.get_str());
  nlohmann::json image = nlohmann::json::array();
  for (const auto& v : f.torsion_image) image.push_back(render_bits(v));
  return {{"rank", f.rank}, {"torsion", torsion}, {"torsion_image", image}, {"status", f.status}};
}

}  // namespace medialink
