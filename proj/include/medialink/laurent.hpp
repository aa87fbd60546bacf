#pragma once

// Exact Laurent polynomial arithmetic.
//
// IntLaurent is an element of Z[t1^{±1}, ..., tμ^{±1}] stored sparsely; with
// varcount 1 it is the one-variable ring Z[t^{±1}]. RatLaurent is the
// one-variable ring over Q, used where a principal ideal domain is needed.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medialink {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponents of t1..tμ, one entry per variable.
using ExponentVector = std::vector<int>;

/// Graded order: total degree ascending, ties broken so that t1 precedes t2.
/// Printing in this order gives "1 - t1 - t2 + t1*t2".
struct MonomialOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class IntLaurent {
 public:
  using Terms = std::map<ExponentVector, Integer, MonomialOrder>;

  explicit IntLaurent(std::size_t varcount = 1);

  static IntLaurent constant(const Integer& c, std::size_t varcount = 1);
  /// t_{index+1}^power in a ring with `varcount` variables.
  static IntLaurent variable(std::size_t index, std::size_t varcount = 1,
                             int power = 1);
  static IntLaurent monomial(ExponentVector exponents, const Integer& c);
  /// Parses the rendering grammar ("1 - t1 - t2 + t1*t2"); also accepts
  /// parentheses and non-negative powers of parenthesized factors.
  static IntLaurent parse(std::string_view text, std::size_t varcount);

  std::size_t varcount() const { return varcount_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ExponentVector& e) const;
  /// True for ±t^e, the units of the integer Laurent ring.
  bool is_unit() const;

  /// One-variable only: lowest and highest exponent (0 for the zero poly).
  int min_degree() const;
  int max_degree() const;

  IntLaurent operator-() const;
  IntLaurent& operator+=(const IntLaurent& q);
  IntLaurent& operator-=(const IntLaurent& q);
  IntLaurent& operator*=(const IntLaurent& q);
  friend IntLaurent operator+(IntLaurent p, const IntLaurent& q) { return p += q; }
  friend IntLaurent operator-(IntLaurent p, const IntLaurent& q) { return p -= q; }
  friend IntLaurent operator*(const IntLaurent& p, const IntLaurent& q);
  friend bool operator==(const IntLaurent& p, const IntLaurent& q) {
    return p.varcount_ == q.varcount_ && p.terms_ == q.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const ExponentVector& e, const Integer& c);
  void require_same_ring(const IntLaurent& q, const char* op) const;

  std::size_t varcount_;
  Terms terms_;
};

// Ring homomorphisms.

/// t_i -> t for every i.
IntLaurent substitute_tau(const IntLaurent& p);
/// Value at a point of nonzero rationals. Zero coordinates are a domain error.
Rational evaluate(const IntLaurent& p, std::span<const Rational> point);
/// Value mod `modulus` at a point of units mod `modulus`, in [0, modulus).
Integer evaluate_mod(const IntLaurent& p, std::span<const Integer> point,
                     const Integer& modulus);
/// ε: every t_i -> 1.
Integer augmentation(const IntLaurent& p);
/// ν: every t_i -> -1.
Integer evaluate_nu(const IntLaurent& p);

// One-variable integer Laurent helpers.

/// The associate ±t^m·p with lowest exponent 0 and positive lowest
/// coefficient. normalize_unit(0) = 0.
IntLaurent normalize_unit(const IntLaurent& p);
/// gcd of all coefficients (0 for the zero polynomial).
Integer content(const IntLaurent& p);
/// gcd in Z[t^{±1}] in normalize_unit form; gcd(p, 0) = normalize_unit(p).
IntLaurent gcd_univariate(const IntLaurent& p, const IntLaurent& q);
/// p / q when q divides p in Z[t^{±1}], otherwise nullopt. q must be nonzero.
std::optional<IntLaurent> divide_exact(const IntLaurent& p, const IntLaurent& q);

class RatLaurent {
 public:
  using Terms = std::map<int, Rational>;

  RatLaurent() = default;
  static RatLaurent constant(const Rational& c);
  static RatLaurent monomial(int exponent, const Rational& c);
  /// Requires a one-variable IntLaurent.
  static RatLaurent from(const IntLaurent& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  /// Degree after removing the t-power unit (max - min exponent).
  int span_degree() const;
  /// Nonzero constant times a power of t.
  bool is_unit() const;
  const Rational& leading() const { return terms_.rbegin()->second; }

  /// The monic associate with lowest exponent 0.
  RatLaurent canonical() const;
  /// Multiplies by the common denominator and divides by the content,
  /// returning the integer associate in normalize_unit form.
  IntLaurent to_primitive_integer() const;

  RatLaurent operator-() const;
  RatLaurent& operator+=(const RatLaurent& q);
  RatLaurent& operator-=(const RatLaurent& q);
  friend RatLaurent operator+(RatLaurent p, const RatLaurent& q) { return p += q; }
  friend RatLaurent operator-(RatLaurent p, const RatLaurent& q) { return p -= q; }
  friend RatLaurent operator*(const RatLaurent& p, const RatLaurent& q);
  friend bool operator==(const RatLaurent& p, const RatLaurent& q) {
    return p.terms_ == q.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(int e, const Rational& c);
  Terms terms_;
};

/// Division with remainder. Each operand is multiplied by the t-power that
/// clears its negative exponents, ordinary polynomial division is applied,
/// and the shifts are restored so that p = q·quotient + remainder holds.
/// q = 0 is a domain error.
std::pair<RatLaurent, RatLaurent> rat_divmod(const RatLaurent& p,
                                             const RatLaurent& q);

/// Division with remainder where the remainder has strictly smaller
/// span_degree than q (both operands are first stripped of t-powers). This is
/// the Euclidean step used by the rational Smith form.
std::pair<RatLaurent, RatLaurent> rat_euclid_step(const RatLaurent& p,
                                                  const RatLaurent& q);

}  // namespace medialink
