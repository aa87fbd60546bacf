#include <random>
#include <vector>

#include "doctest.h"
#include "medialink/error.hpp"
#include "medialink/laurent.hpp"
#include "oracles.hpp"

using namespace medialink;

namespace {

IntLaurent P(const char* s, std::size_t vars = 1) { return IntLaurent::parse(s, vars); }

RatLaurent R(const char* s) { return RatLaurent::from(P(s)); }

}  // namespace

TEST_CASE("addition examples") {
  CHECK((P("t1 - 1", 2) + P("1 - t1", 2)).is_zero());
  CHECK(P("t - 1") + P("t - 1") == P("2*t - 2"));
  CHECK(P("t1*t2 + 1", 2) + P("t1*t2", 2) == P("2*t1*t2 + 1", 2));
}

TEST_CASE("multiplication examples") {
  CHECK(P("t^-1") * P("t") == IntLaurent::constant(1));
  CHECK(P("t - 1") * P("t + 1") == P("t^2 - 1"));
  CHECK(P("1 - t2", 2) * P("1 - t1", 2) == P("1 - t1 - t2 + t1*t2", 2));
  CHECK((P("1 - t2", 2) * P("1 - t1", 2)).to_string() == "1 - t1 - t2 + t1*t2");
}

TEST_CASE("parser handles units and powers") {
  CHECK(P("(t)^-1") == P("t^-1"));
  CHECK(P("(-t)^-3") == P("-t^-3"));
  CHECK(P("(1 - t)^2") == P("1 - 2*t + t^2"));
  CHECK_THROWS_AS(P("(1 - t)^-1"), Error);
}

TEST_CASE("bare t is rejected in several variables") {
  CHECK_THROWS_AS(P("t", 2), Error);
  CHECK(P("t", 1) == IntLaurent::variable(0));
}

TEST_CASE("substitute_tau examples") {
  CHECK(substitute_tau(P("t1*t2^-1", 2)) == IntLaurent::constant(1));
  CHECK(substitute_tau(P("1 - t2", 2)) == P("1 - t"));
  CHECK(substitute_tau(P("1 - t1 + t1^2", 2)) == P("1 - t + t^2"));
}

TEST_CASE("evaluation examples") {
  CHECK(augmentation(P("t3 - 1", 3)) == 0);
  CHECK(evaluate_nu(P("1 - t")) == 2);
  std::vector<Rational> pt{3, 5};
  CHECK(evaluate(P("(1 - t1)*(1 - t2)", 2), pt) == 8);
  std::vector<Integer> m{3, 5};
  CHECK(evaluate_mod(P("(1 - t1)*(1 - t2)", 2), m, 7) == 1);
  std::vector<Rational> zero{0};
  CHECK_THROWS_AS(evaluate(P("t^-1"), zero), Error);
}

TEST_CASE("normalize_unit examples") {
  CHECK(normalize_unit(P("-t^3 + 3*t^2 - t")) == P("t^2 - 3*t + 1"));
  CHECK(normalize_unit(IntLaurent(1)).is_zero());
  CHECK(normalize_unit(P("t^2 - t + 1")) == P("t^2 - t + 1"));
}

TEST_CASE("gcd examples") {
  CHECK(gcd_univariate(P("t^2 - 1"), P("t - 1")) == normalize_unit(P("t - 1")));
  CHECK(gcd_univariate(P("2*t - 2"), P("4*t - 4")) == normalize_unit(P("2*t - 2")));
  CHECK(gcd_univariate(P("t^2 - t + 1"), P("t - 1")) == IntLaurent::constant(1));
  CHECK(gcd_univariate(P("3 - 3*t"), IntLaurent(1)) == P("3 - 3*t"));
}

TEST_CASE("rat_divmod examples") {
  auto [q1, r1] = rat_divmod(R("t^2 - 1"), R("t - 1"));
  CHECK(q1 == R("t + 1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = rat_divmod(R("t"), R("t - 1"));
  CHECK(q2 == R("1"));
  CHECK(r2 == R("1"));
  auto [q3, r3] = rat_divmod(R("t - 1"), R("t - 1"));
  CHECK(q3 == R("1"));
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(rat_divmod(R("t"), RatLaurent()), Error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t vars = 1 + i % 3;
    auto p = oracle::random_laurent(rng, vars, 4, 3, 5);
    auto q = oracle::random_laurent(rng, vars, 4, 3, 5);
    auto r = oracle::random_laurent(rng, vars, 4, 3, 5);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
    const auto pq = p * q;
    for (const auto& [e, c] : pq.terms()) {
      CHECK(c != 0);
      CHECK(e.size() == vars);
    }
  }
}

TEST_CASE("tau and evaluations are ring homomorphisms") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_laurent(rng, 3, 4, 2, 4);
    auto q = oracle::random_laurent(rng, 3, 4, 2, 4);
    CHECK(substitute_tau(p + q) == substitute_tau(p) + substitute_tau(q));
    CHECK(substitute_tau(p * q) == substitute_tau(p) * substitute_tau(q));
    CHECK(evaluate_nu(p * q) == evaluate_nu(p) * evaluate_nu(q));
    CHECK(augmentation(p + q) == augmentation(p) + augmentation(q));
    std::vector<Rational> pt{3, -2, Rational(1, 5)};
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
    std::vector<Integer> m{2, 3, 5};
    CHECK(evaluate_mod(p * q, m, 7) == (evaluate_mod(p, m, 7) * evaluate_mod(q, m, 7)) % 7);
    // tau then nu agrees with nu directly
    CHECK(evaluate_nu(substitute_tau(p)) == evaluate_nu(p));
  }
}

TEST_CASE("normalize_unit ignores unit multiples") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_laurent(rng, 1, 4, 4, 6);
    if (p.is_zero()) continue;
    auto n = normalize_unit(p);
    CHECK(n.min_degree() == 0);
    CHECK(n.terms().begin()->second > 0);
    for (int m = -5; m <= 5; ++m) {
      CHECK(normalize_unit(p * IntLaurent::variable(0, 1, m)) == n);
      CHECK(normalize_unit(-(p * IntLaurent::variable(0, 1, m))) == n);
    }
  }
}

TEST_CASE("gcd divides both and absorbs common factors") {
  std::mt19937_64 rng(14);
  std::vector<IntLaurent> pool{P("1 - t"), P("1 - t + t^2"), P("2"), P("1 + t"), P("1 - 3*t + t^2"),
                               P("3"), P("t^2 + 1")};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 150; ++i) {
    IntLaurent common = pool[pick(rng)] * pool[pick(rng)];
    IntLaurent p = common * pool[pick(rng)] * oracle::random_laurent(rng, 1, 2, 2, 3);
    IntLaurent q = common * pool[pick(rng)];
    if (p.is_zero()) continue;
    IntLaurent g = gcd_univariate(p, q);
    REQUIRE(!g.is_zero());
    CHECK(divide_exact(p, g).has_value());
    CHECK(divide_exact(q, g).has_value());
    CHECK(divide_exact(g, common).has_value());
    CHECK(g == normalize_unit(g));
  }
}

TEST_CASE("division reconstruction") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    auto p = RatLaurent::from(oracle::random_laurent(rng, 1, 5, 4, 7));
    auto q = RatLaurent::from(oracle::random_laurent(rng, 1, 3, 3, 7));
    if (q.is_zero()) continue;
    auto [s, r] = rat_divmod(p, q);
    CHECK(q * s + r == p);
    auto [s2, r2] = rat_euclid_step(p, q);
    CHECK(q * s2 + r2 == p);
    if (!r2.is_zero()) {
      CHECK(r2.span_degree() < q.span_degree());
    }
  }
}

TEST_CASE("rational canonical form and primitive integer associate") {
  RatLaurent p = RatLaurent::from(P("2*t^-1 - 2"));
  CHECK(p.canonical() == R("t - 1").canonical());
  CHECK(p.canonical().to_string() == "-1 + t");
  CHECK(RatLaurent::monomial(3, Rational(2, 3)).is_unit());
  CHECK(p.to_primitive_integer() == P("1 - t"));
}
