#include <doctest.h>

#include <random>

#include "pscalc/series.hpp"

using namespace pscalc;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const unsigned n = 12;
  const TruncatedSeries one_plus_x(n, {1, 1});
  const auto geometric = one_plus_x.reciprocal();
  for (unsigned k = 0; k <= n; ++k) CHECK(geometric[k] == Rational(k % 2 == 0 ? 1 : -1));
  CHECK(one_plus_x * geometric == TruncatedSeries::constant(n, 1));

  const auto e = elementary(Elementary::exp, n);
  for (unsigned k = 0; k <= n; ++k) CHECK(e[k] == Rational(Integer(1), factorial(k)));
  CHECK(e.substitute_scaled(2)[2] == Rational(2));
  CHECK(e * e == e.substitute_scaled(2));
  CHECK(e.log() == TruncatedSeries::variable(n));
  CHECK(e.derivative() == e.truncate(n - 1));

  CHECK_THROWS_AS(TruncatedSeries::variable(n).reciprocal(), DomainError);
  CHECK_THROWS_AS(e + TruncatedSeries(n + 1), DomainError);
  CHECK_THROWS_AS(e.divide_by_x(), DomainError);
  CHECK_THROWS_AS(e.scale(2).log(), DomainError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{frac(dist(rng) == 0 ? 1 : 3, 7)};
    for (unsigned k = 1; k <= n; ++k) c.push_back(frac(dist(rng), 1 + (k % 5)));
    const TruncatedSeries s(n, c);
    CHECK(s * s.reciprocal() == TruncatedSeries::constant(n, 1));
    CHECK((s + e) - e == s);
  }
}

TEST_CASE("elementary series") {
  const auto xs = elementary(Elementary::x_over_sinh, 10);
  CHECK(xs[0] == Rational(1));
  CHECK(xs[2] == frac(-1, 6));
  CHECK(xs[4] == frac(7, 360));
  CHECK(xs[1].is_zero());
  CHECK(elementary(Elementary::sinh, 5)[3] == frac(1, 6));
  CHECK(elementary(Elementary::cosh, 4)[4] == frac(1, 24));
  CHECK(elementary(Elementary::x_over_tanh, 4)[2] == frac(1, 3));
  CHECK(elementary(Elementary::half_x_over_sinh_half, 4)[2] == frac(-1, 24));
}

TEST_CASE("x/sinh(x) agrees with the Bernoulli closed form") {
  CHECK(elementary(Elementary::x_over_sinh, 40) == x_over_sinh_from_bernoulli(40));
}

TEST_CASE("2x/(1-e^{2x}) e^x + x/sinh(x) = 0") {
  const unsigned n = 40;
  const auto e2x_minus_1 =
      elementary(Elementary::exp, n + 1).substitute_scaled(2) - TruncatedSeries::constant(n + 1, 1);
  const auto lhs = e2x_minus_1.divide_by_x().reciprocal().scale(-2) *
                   elementary(Elementary::exp, n);
  CHECK((lhs + elementary(Elementary::x_over_sinh, n)).is_zero());
}

TEST_CASE("1/sinh(2v) = 1/tanh(v) - 1/tanh(2v)") {
  // Multiplied through by v to clear the poles.
  const unsigned n = 40;
  const auto half = frac(1, 2);
  const auto lhs = elementary(Elementary::x_over_sinh, n).substitute_scaled(2).scale(half);
  const auto rhs = elementary(Elementary::x_over_tanh, n) -
                   elementary(Elementary::x_over_tanh, n).substitute_scaled(2).scale(half);
  CHECK(lhs == rhs);
}

TEST_CASE("low-weight genus polynomials") {
  const auto ahat = genus_polynomials(Genus::ahat, 3);
  const auto l = genus_polynomials(Genus::l, 3);
  CHECK(ahat[0].to_string() == "(-1/24)*p1");
  CHECK(ahat[1].to_string() == "(7/5760)*p1^2 + (-1/1440)*p2");
  CHECK(l[0].to_string() == "(1/3)*p1");
  CHECK(l[1].to_string() == "(-1/45)*p1^2 + (7/45)*p2");

  const Monomial p1({1}), p2({2}), p3({3}), p1p1({1, 1}), p1p2({1, 2}), p1p1p1({1, 1, 1});
  CHECK(ahat[2].coefficient(p3) == frac(-16, 967680));
  CHECK(ahat[2].coefficient(p1p2) == frac(44, 967680));
  CHECK(ahat[2].coefficient(p1p1p1) == frac(-31, 967680));
  CHECK(l[2].coefficient(p3) == frac(62, 945));
  CHECK(l[2].coefficient(p1p2) == frac(-13, 945));
  CHECK(l[2].coefficient(p1p1p1) == frac(2, 945));
  CHECK(l[1].coefficient(p1p1) == frac(-1, 45));
  CHECK(ahat[0].coefficient(p2).is_zero());
}

TEST_CASE("genus polynomials do not depend on the number of roots") {
  for (Genus kind : {Genus::ahat, Genus::l}) {
    const auto base = genus_polynomials(kind, 5);
    CHECK(genus_polynomials(kind, 5, 5) == base);
    CHECK(genus_polynomials(kind, 5, 8) == base);
  }
}

TEST_CASE("genus polynomials are multiplicative under Whitney sums") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (Genus kind : {Genus::ahat, Genus::l}) {
    const auto k = genus_polynomials(kind, 4);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> p{1}, q{1};
      for (int i = 0; i < 4; ++i) {
        p.push_back(dist(rng));
        q.push_back(dist(rng));
      }
      std::vector<Rational> total(5);
      for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; a + b <= 4; ++b) total[a + b] += p[a] * q[b];
      }
      auto value = [&](unsigned j, const std::vector<Rational>& classes) {
        if (j == 0) return Rational(1);
        return k[j - 1].evaluate(std::span(classes).subspan(1));
      };
      for (unsigned j = 1; j <= 4; ++j) {
        Rational expected;
        for (unsigned i = 0; i <= j; ++i) expected += value(i, p) * value(j - i, q);
        CHECK(value(j, total) == expected);
      }
    }
  }
}
