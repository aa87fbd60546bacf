#include "oracles.hpp"

#include <numeric>
#include <utility>

namespace oracle {

Integer det(Matrix<Integer> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact (Bareiss)
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntLaurent det(const Matrix<IntLaurent>& a) {
  const std::size_t n = a.size();
  if (n == 0) return IntLaurent::constant(1);
  const std::size_t vc = a[0][0].varcount();
  if (n == 1) return a[0][0];
  IntLaurent total(vc);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Matrix<IntLaurent> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntLaurent> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[i][c]);
      }
      minor.push_back(row);
    }
    IntLaurent term = a[0][j] * det(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

Matrix<Integer> mul(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix<Integer> c(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t from,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, cur, 0, out);
  return out;
}

}  // namespace

IntLaurent delta_by_minors(const medialink::Presentation& p, int k) {
  const long m = static_cast<long>(p.rows()) - k;
  if (m <= 0) return IntLaurent::constant(1);
  if (m > static_cast<long>(p.cols())) return IntLaurent(1);
  IntLaurent g(1);
  for (const auto& rs : subsets(p.rows(), m)) {
    for (const auto& cs : subsets(p.cols(), m)) {
      Matrix<IntLaurent> sub;
      for (auto r : rs) {
        std::vector<IntLaurent> row;
        for (auto c : cs) row.push_back(p.matrix[r][c]);
        sub.push_back(row);
      }
      g = medialink::gcd_univariate(g, det(sub));
    }
  }
  return g;
}

std::uint64_t colorings(const medialink::LinkDiagram& d, std::uint64_t n, std::uint64_t u) {
  const std::size_t g = d.arcs.size();
  std::vector<std::uint64_t> color(g, 0);
  auto idx = [&](const std::string& id) { return *d.arc_index(id); };
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& c : d.crossings) {
      std::uint64_t a1 = color[idx(c.a1())], a2 = color[idx(c.a2())], a3 = color[idx(c.a3())];
      if ((u * a2 + (n + 1 - u % n) % n * a1) % n != a3) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < g && ++color[i] == n) color[i++] = 0;
    if (i == g) break;
  }
  return count;
}

std::uint64_t translation_subgroup_order(std::uint64_t n, std::uint64_t u) {
  // (1 - u) mod n as a nonnegative residue
  std::uint64_t s = (n + 1 - u % n) % n;
  return n / std::gcd(s, n);
}

Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix<Integer> a(rows, std::vector<Integer>(cols));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  return a;
}

Matrix<Integer> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  Matrix<Integer> m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : m[i]) x = -x;
      continue;
    }
    int f = mult(rng);
    for (std::size_t c = 0; c < n; ++c) m[i][c] += f * m[j][c];
  }
  return m;
}

IntLaurent random_laurent(std::mt19937_64& rng, std::size_t vars, int terms, int exp_bound,
                          int coeff_bound) {
  std::uniform_int_distribution<int> e(-exp_bound, exp_bound), c(-coeff_bound, coeff_bound);
  IntLaurent p(vars);
  for (int i = 0; i < terms; ++i) {
    medialink::ExponentVector ev(vars);
    for (auto& x : ev) x = e(rng);
    p += IntLaurent::monomial(ev, c(rng));
  }
  return p;
}

}  // namespace oracle
