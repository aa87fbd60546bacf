#include "medialink/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "medialink/error.hpp"

namespace medialink {

bool MonomialOrder::operator()(const ExponentVector& a,
                               const ExponentVector& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// IntLaurent

IntLaurent::IntLaurent(std::size_t varcount) : varcount_(varcount) {
  if (varcount == 0) fail(ErrorKind::Usage, "Laurent ring needs at least one variable");
}

IntLaurent IntLaurent::constant(const Integer& c, std::size_t varcount) {
  IntLaurent p(varcount);
  p.add_term(ExponentVector(varcount, 0), c);
  return p;
}

IntLaurent IntLaurent::variable(std::size_t index, std::size_t varcount, int power) {
  if (index >= varcount) fail(ErrorKind::Usage, "variable index out of range");
  ExponentVector e(varcount, 0);
  e[index] = power;
  return monomial(std::move(e), 1);
}

IntLaurent IntLaurent::monomial(ExponentVector exponents, const Integer& c) {
  IntLaurent p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

Integer IntLaurent::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool IntLaurent::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

int IntLaurent::min_degree() const {
  if (varcount_ != 1) fail(ErrorKind::Usage, "min_degree needs a one-variable polynomial");
  return terms_.empty() ? 0 : terms_.begin()->first[0];
}

int IntLaurent::max_degree() const {
  if (varcount_ != 1) fail(ErrorKind::Usage, "max_degree needs a one-variable polynomial");
  return terms_.empty() ? 0 : terms_.rbegin()->first[0];
}

void IntLaurent::add_term(const ExponentVector& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntLaurent::require_same_ring(const IntLaurent& q, const char* op) const {
  if (varcount_ != q.varcount_) {
    fail(ErrorKind::Usage, std::string(op) + ": variable counts differ (" +
                               std::to_string(varcount_) + " vs " +
                               std::to_string(q.varcount_) + ")");
  }
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& q) {
  require_same_ring(q, "add");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& q) {
  require_same_ring(q, "sub");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

IntLaurent operator*(const IntLaurent& p, const IntLaurent& q) {
  p.require_same_ring(q, "mul");
  IntLaurent r(p.varcount_);
  ExponentVector e(p.varcount_);
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& q) {
  *this = *this * q;
  return *this;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't';
    if (e.size() > 1) out += std::to_string(i + 1);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

template <typename Coef>
void append_term(std::string& out, bool first, const Coef& c, const std::string& mono) {
  bool negative = c < 0;
  Coef magnitude = negative ? Coef(-c) : c;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += magnitude.get_str();
  } else if (magnitude == 1) {
    out += mono;
  } else {
    out += magnitude.get_str() + "*" + mono;
  }
}

}  // namespace

std::string IntLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, monomial_text(e));
    first = false;
  }
  return out;
}

// Recursive-descent parser for the rendering grammar.
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t varcount)
      : text_(text), varcount_(varcount) {}

  IntLaurent run() {
    IntLaurent value = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "polynomial parse error at position " +
                               std::to_string(pos_) + ": " + what + " in \"" +
                               std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntLaurent expr() {
    IntLaurent value(varcount_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    IntLaurent t = term();
    value += negate ? -t : t;
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else break;
    }
    return value;
  }

  IntLaurent term() {
    IntLaurent value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  IntLaurent factor() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntLaurent inner = expr();
      if (!accept(')')) error("expected ')'");
      if (accept('^')) {
        long k = integer();
        if (k < 0) {
          if (!inner.is_unit()) error("negative power of a non-unit");
          ExponentVector e = inner.terms().begin()->first;
          for (int& x : e) x = static_cast<int>(k * x);
          Integer s = inner.terms().begin()->second;
          return IntLaurent::monomial(e, (k % 2 == 0) ? Integer(1) : s);
        }
        IntLaurent r = IntLaurent::constant(1, varcount_);
        for (long i = 0; i < k; ++i) r *= inner;
        return r;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return IntLaurent::constant(Integer(std::string(text_.substr(start, pos_ - start))), varcount_);
    }
    if (c == 't') {
      ++pos_;
      std::size_t index = 0;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start != pos_) {
        long i = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (i < 1 || static_cast<std::size_t>(i) > varcount_) error("variable index out of range");
        index = static_cast<std::size_t>(i - 1);
      } else if (varcount_ != 1) {
        error("bare 't' in a multivariate ring");
      }
      int power = 1;
      if (accept('^')) power = static_cast<int>(integer());
      return IntLaurent::variable(index, varcount_, power);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t varcount_;
  std::size_t pos_ = 0;
};

}  // namespace

IntLaurent IntLaurent::parse(std::string_view text, std::size_t varcount) {
  return PolyParser(text, varcount).run();
}

// ---------------------------------------------------------------------------
// Homomorphisms

IntLaurent substitute_tau(const IntLaurent& p) {
  IntLaurent r(1);
  for (const auto& [e, c] : p.terms()) {
    int total = std::accumulate(e.begin(), e.end(), 0);
    r += IntLaurent::monomial({total}, c);
  }
  return r;
}

namespace {

Rational rational_power(const Rational& x, int k) {
  Rational base = k < 0 ? Rational(1) / x : x;
  unsigned long n = static_cast<unsigned long>(k < 0 ? -static_cast<long>(k) : k);
  Rational r(1);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
  r.canonicalize();
  return r;
}

}  // namespace

Rational evaluate(const IntLaurent& p, std::span<const Rational> point) {
  if (point.size() != p.varcount()) fail(ErrorKind::Usage, "evaluation point has wrong length");
  for (const auto& x : point) {
    if (x == 0) fail(ErrorKind::Domain, "evaluation point has a zero coordinate");
  }
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= rational_power(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

Integer evaluate_mod(const IntLaurent& p, std::span<const Integer> point,
                     const Integer& modulus) {
  if (modulus <= 0) fail(ErrorKind::Usage, "modulus must be positive");
  if (point.size() != p.varcount()) fail(ErrorKind::Usage, "evaluation point has wrong length");
  std::vector<Integer> inverse(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (mpz_invert(inverse[i].get_mpz_t(), point[i].get_mpz_t(), modulus.get_mpz_t()) == 0 &&
        modulus != 1) {
      fail(ErrorKind::Domain, "coordinate " + point[i].get_str() + " is not a unit mod " +
                                  modulus.get_str());
    }
  }
  Integer sum(0);
  Integer factor;
  for (const auto& [e, c] : p.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const Integer& base = e[i] > 0 ? point[i] : inverse[i];
      unsigned long n = static_cast<unsigned long>(e[i] > 0 ? e[i] : -e[i]);
      mpz_powm_ui(factor.get_mpz_t(), base.get_mpz_t(), n, modulus.get_mpz_t());
      term *= factor;
    }
    sum += term;
  }
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer augmentation(const IntLaurent& p) {
  Integer sum(0);
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

Integer evaluate_nu(const IntLaurent& p) {
  Integer sum(0);
  for (const auto& [e, c] : p.terms()) {
    long total = std::accumulate(e.begin(), e.end(), 0L);
    if (total % 2 == 0) sum += c;
    else sum -= c;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// One-variable integer helpers, via dense coefficient vectors.

namespace {

using Dense = std::vector<Integer>;  // index = degree, no trailing zeros

void require_univariate(const IntLaurent& p, const char* op) {
  if (p.varcount() != 1) fail(ErrorKind::Usage, std::string(op) + " needs a one-variable polynomial");
}

Dense to_dense_stripped(const IntLaurent& p) {
  Dense d;
  if (p.is_zero()) return d;
  int lo = p.min_degree();
  d.assign(static_cast<std::size_t>(p.max_degree() - lo + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e[0] - lo)] = c;
  return d;
}

IntLaurent from_dense(const Dense& d, int shift = 0) {
  IntLaurent p(1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) p += IntLaurent::monomial({static_cast<int>(i) + shift}, d[i]);
  }
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Integer dense_content(const Dense& d) {
  Integer g(0);
  for (const auto& c : d) g = gcd(g, c);
  return g;
}

Dense primitive_part(Dense d) {
  Integer g = dense_content(d);
  if (g == 0) return d;
  if (d.back() < 0) g = -g;
  for (auto& c : d) c /= g;
  return d;
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const Integer& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

IntLaurent normalize_unit(const IntLaurent& p) {
  require_univariate(p, "normalize_unit");
  if (p.is_zero()) return p;
  Dense d = to_dense_stripped(p);
  if (d.front() < 0) {
    for (auto& c : d) c = -c;
  }
  return from_dense(d);
}

Integer content(const IntLaurent& p) {
  Integer g(0);
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

IntLaurent gcd_univariate(const IntLaurent& p, const IntLaurent& q) {
  require_univariate(p, "gcd_univariate");
  require_univariate(q, "gcd_univariate");
  if (q.is_zero()) return normalize_unit(p);
  if (p.is_zero()) return normalize_unit(q);
  Dense a = to_dense_stripped(p);
  Dense b = to_dense_stripped(q);
  Integer g = gcd(dense_content(a), dense_content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  a = primitive_part(a);
  for (auto& c : a) c *= g;
  return normalize_unit(from_dense(a));
}

std::optional<IntLaurent> divide_exact(const IntLaurent& p, const IntLaurent& q) {
  require_univariate(p, "divide_exact");
  require_univariate(q, "divide_exact");
  if (q.is_zero()) fail(ErrorKind::Domain, "division by the zero polynomial");
  if (p.is_zero()) return IntLaurent(1);
  Dense a = to_dense_stripped(p);
  Dense b = to_dense_stripped(q);
  int shift = p.min_degree() - q.min_degree();
  if (a.size() < b.size()) return std::nullopt;
  Dense quotient(a.size() - b.size() + 1, Integer(0));
  while (!a.empty() && a.size() >= b.size()) {
    Integer r;
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer k = a.back() / b.back();
    std::size_t s = a.size() - b.size();
    quotient[s] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + s] -= k * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return from_dense(quotient, shift);
}

// ---------------------------------------------------------------------------
// RatLaurent

RatLaurent RatLaurent::constant(const Rational& c) { return monomial(0, c); }

RatLaurent RatLaurent::monomial(int exponent, const Rational& c) {
  RatLaurent r;
  r.add_term(exponent, c);
  return r;
}

RatLaurent RatLaurent::from(const IntLaurent& p) {
  require_univariate(p, "RatLaurent::from");
  RatLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(e[0], Rational(c));
  return r;
}

void RatLaurent::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int RatLaurent::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int RatLaurent::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
int RatLaurent::span_degree() const { return max_degree() - min_degree(); }
bool RatLaurent::is_unit() const { return terms_.size() == 1; }

RatLaurent RatLaurent::canonical() const {
  if (terms_.empty()) return *this;
  RatLaurent r;
  int lo = min_degree();
  Rational lead = leading();
  for (const auto& [e, c] : terms_) r.terms_.emplace(e - lo, c / lead);
  return r;
}

IntLaurent RatLaurent::to_primitive_integer() const {
  IntLaurent p(1);
  if (terms_.empty()) return p;
  Integer den(1);
  for (const auto& [e, c] : terms_) den = lcm(den, Integer(c.get_den()));
  for (const auto& [e, c] : terms_) {
    Rational scaled = c * den;
    p += IntLaurent::monomial({e}, Integer(scaled.get_num()));
  }
  Integer g = content(p);
  IntLaurent q(1);
  for (const auto& [e, c] : p.terms()) q += IntLaurent::monomial(e, Integer(c / g));
  return normalize_unit(q);
}

RatLaurent RatLaurent::operator-() const {
  RatLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

RatLaurent& RatLaurent::operator+=(const RatLaurent& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

RatLaurent& RatLaurent::operator-=(const RatLaurent& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

RatLaurent operator*(const RatLaurent& p, const RatLaurent& q) {
  RatLaurent r;
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, cp * cq);
  }
  return r;
}

std::string RatLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, monomial_text({e}));
    first = false;
  }
  return out;
}

namespace {

// Ordinary polynomial division of p by q where both have only non-negative
// exponents. Returns quotient and remainder with deg(rem) < deg(q).
std::pair<RatLaurent, RatLaurent> poly_divide(RatLaurent p, const RatLaurent& q) {
  RatLaurent quotient;
  const int dq = q.max_degree();
  const Rational& lead = q.leading();
  while (!p.is_zero() && p.max_degree() >= dq) {
    int s = p.max_degree() - dq;
    RatLaurent step = RatLaurent::monomial(s, p.leading() / lead);
    quotient += step;
    p -= step * q;
  }
  return {quotient, p};
}

}  // namespace

std::pair<RatLaurent, RatLaurent> rat_divmod(const RatLaurent& p, const RatLaurent& q) {
  if (q.is_zero()) fail(ErrorKind::Domain, "rat_divmod: division by zero");
  int sp = std::max(0, -p.min_degree());
  int sq = std::max(0, -q.min_degree());
  RatLaurent P = p * RatLaurent::monomial(sp, 1);
  RatLaurent Q = q * RatLaurent::monomial(sq, 1);
  auto [s, r] = poly_divide(P, Q);
  return {s * RatLaurent::monomial(sq - sp, 1), r * RatLaurent::monomial(-sp, 1)};
}

std::pair<RatLaurent, RatLaurent> rat_euclid_step(const RatLaurent& p, const RatLaurent& q) {
  if (q.is_zero()) fail(ErrorKind::Domain, "rat_euclid_step: division by zero");
  int ap = p.min_degree();
  int aq = q.min_degree();
  RatLaurent P = p * RatLaurent::monomial(-ap, 1);
  RatLaurent Q = q * RatLaurent::monomial(-aq, 1);
  auto [s, r] = poly_divide(P, Q);
  // p = t^ap P = t^ap (Q s + r) = q t^(ap-aq) s + t^ap r
  return {s * RatLaurent::monomial(ap - aq, 1), r * RatLaurent::monomial(ap, 1)};
}

}  // namespace medialink
