#include <doctest.h>

#include <random>

#include "metabelian/laurent.hpp"
#include "test_support.hpp"

using metabelian::LaurentPoly;
using metabelian::Monomial;
using metabelian::one_minus_s;
using metabelian::unit_monomial_order;
using test_support::random_monomial;
using test_support::random_nonzero_poly;
using test_support::random_poly;

namespace {

LaurentPoly c(int rank, long v) { return LaurentPoly::constant(rank, v); }
LaurentPoly s(int rank, int i) { return LaurentPoly::variable(rank, i); }

/// Independent route for the vanishing order: substitute s_i -> 1 + u_i by
/// honest polynomial expansion (after clearing negative exponents by a
/// unit) and read off the minimal total degree. Quadratic and slow, which
/// is fine for a test oracle.
std::optional<int> order_by_full_expansion(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const int n = p.rank();
  std::vector<int> shift(static_cast<std::size_t>(n), 0);
  for (const auto& [mono, coeff] : p.terms()) {
    for (int v = 0; v < n; ++v) {
      shift[static_cast<std::size_t>(v)] =
          std::min(shift[static_cast<std::size_t>(v)], mono.exp[static_cast<std::size_t>(v)]);
    }
  }
  LaurentPoly expanded(n);
  for (const auto& [mono, coeff] : p.terms()) {
    LaurentPoly prod = LaurentPoly::constant(n, coeff);
    for (int v = 1; v <= n; ++v) {
      int e = mono.exp[static_cast<std::size_t>(v - 1)] - shift[static_cast<std::size_t>(v - 1)];
      LaurentPoly base = c(n, 1) + s(n, v);
      for (int k = 0; k < e; ++k) prod *= base;
    }
    expanded += prod;
  }
  int best = -1;
  for (const auto& [mono, coeff] : expanded.terms()) {
    int total = 0;
    for (int e : mono.exp) total += e;
    if (best < 0 || total < best) best = total;
  }
  return best;
}

}  // namespace

TEST_CASE("ring operations on simple inputs") {
  const int n = 3;
  CHECK((c(n, 1) - s(n, 1)) * (c(n, 1) + s(n, 1)) == c(n, 1) - s(n, 1) * s(n, 1));
  CHECK(LaurentPoly::monomial(-Monomial::unit(n, 1)) * s(n, 1) == c(n, 1));
  LaurentPoly zero = (c(n, 1) - s(n, 1)) + (s(n, 1) - c(n, 1));
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
}

TEST_CASE("ring operations reject rank mismatches") {
  CHECK_THROWS_AS(c(2, 1) + c(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(c(2, 1) * c(3, 1), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng, 3, 4, 3, 5);
    LaurentPoly b = random_poly(rng, 3, 4, 3, 5);
    LaurentPoly d = random_poly(rng, 3, 4, 3, 5);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a * b == b * a);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("substitute_one") {
  const int n = 3;
  CHECK((c(n, 1) - s(n, 1) * s(n, 2)).substitute_one(1) == c(n, 1) - s(n, 2));
  LaurentPoly sq = one_minus_s(n, 3) * one_minus_s(n, 3);
  CHECK(sq.substitute_one(3).is_zero());
  CHECK(c(n, 5).substitute_one(2) == c(n, 5));
  CHECK_THROWS_AS(c(n, 1).substitute_one(4), std::invalid_argument);
}

TEST_CASE("exact division by 1 - s_i") {
  const int n = 3;
  auto q = (one_minus_s(n, 1) * (c(n, 2) - s(n, 2))).divides_one_minus(1);
  REQUIRE(q.has_value());
  CHECK(*q == c(n, 2) - s(n, 2));

  CHECK(!(c(n, 1) - s(n, 1) * s(n, 2)).divides_one_minus(1).has_value());

  auto q2 = (one_minus_s(n, 3) * one_minus_s(n, 3)).divides_one_minus(3);
  REQUIRE(q2.has_value());
  CHECK(*q2 == one_minus_s(n, 3));

  // Zero divides with zero quotient; negative exponents are handled by the
  // clearing unit.
  auto q3 = LaurentPoly(n).divides_one_minus(2);
  REQUIRE(q3.has_value());
  CHECK(q3->is_zero());
  LaurentPoly shifted = one_minus_s(n, 1).shifted(-(Monomial::unit(n, 1) + Monomial::unit(n, 1)));
  auto q4 = shifted.divides_one_minus(1);
  REQUIRE(q4.has_value());
  CHECK(one_minus_s(n, 1) * *q4 == shifted);
}

TEST_CASE("division agrees with substitution and reconstructs exactly") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int var = 1 + trial % 3;
    LaurentPoly p = random_poly(rng, 3, 4, 3, 5);
    if (trial % 2 == 0) p *= one_minus_s(3, var);  // force divisibility half the time
    auto q = p.divides_one_minus(var);
    CHECK(q.has_value() == p.substitute_one(var).is_zero());
    if (q.has_value()) CHECK(one_minus_s(3, var) * *q == p);
  }
}

TEST_CASE("vanishing order at (1,...,1)") {
  const int n = 3;
  CHECK(one_minus_s(n, 1).vanishing_order_at_ones() == 1);
  CHECK((one_minus_s(n, 3) * one_minus_s(n, 3)).vanishing_order_at_ones() == 2);
  CHECK(!LaurentPoly(n).vanishing_order_at_ones().has_value());
  // 1 - s1^2 s2^-1 expands to -2u1 + u2 - u1^2 + ... after clearing: order 1.
  LaurentPoly p = c(n, 1) - LaurentPoly::monomial(
                                Monomial({std::vector<int>{2, -1, 0}}));
  CHECK(p.vanishing_order_at_ones() == 1);
  CHECK(order_by_full_expansion(p) == 1);
  CHECK(c(n, 7).vanishing_order_at_ones() == 0);
}

TEST_CASE("vanishing order matches the full-expansion oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly p = random_poly(rng, 3, 4, 3, 4);
    CHECK(p.vanishing_order_at_ones() == order_by_full_expansion(p));
  }
}

TEST_CASE("vanishing order is additive and unit-invariant") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly p = random_nonzero_poly(rng, 3, 3, 2, 3);
    LaurentPoly q = random_nonzero_poly(rng, 3, 3, 2, 3);
    auto op = p.vanishing_order_at_ones();
    auto oq = q.vanishing_order_at_ones();
    auto opq = (p * q).vanishing_order_at_ones();
    REQUIRE(op.has_value());
    REQUIRE(oq.has_value());
    REQUIRE(opq.has_value());
    CHECK(*opq == *op + *oq);

    Monomial m = random_monomial(rng, 3, 4);
    CHECK(p.shifted(m).vanishing_order_at_ones() == op);
  }
}

TEST_CASE("unit monomial order") {
  CHECK(!unit_monomial_order(Monomial(3)).has_value());
  CHECK(unit_monomial_order(Monomial::unit(3, 1)) == 1);
  CHECK(unit_monomial_order(Monomial({std::vector<int>{2, -1, 3}})) == 1);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Monomial j = random_monomial(rng, 3, 5);
    LaurentPoly one_minus_sj = LaurentPoly::constant(3, 1) - LaurentPoly::monomial(j);
    CHECK(unit_monomial_order(j) == one_minus_sj.vanishing_order_at_ones());
  }
}

TEST_CASE("canonical text form") {
  const int n = 3;
  CHECK(LaurentPoly(n).to_string() == "0");
  CHECK(c(n, 5).to_string() == "5");
  CHECK((c(n, 1) - s(n, 2)).to_string() == "1 - s2");
  CHECK((s(n, 1) - c(n, 1)).to_string() == "-1 + s1");
  LaurentPoly p = c(n, 1) - LaurentPoly::monomial(
                                Monomial({std::vector<int>{1, -1, 0}}));
  CHECK(p.to_string() == "1 - s1*s2^-1");
  CHECK((-LaurentPoly::monomial(-Monomial::unit(n, 1))).to_string() == "-s1^-1");
  LaurentPoly q = LaurentPoly::monomial(Monomial({std::vector<int>{2, 0, -3}}), 2) - c(n, 7);
  CHECK(q.to_string() == "-7 + 2*s1^2*s3^-3");
}
