#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pscalc/bernoulli.hpp"

using namespace pscalc;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

Integer von_staudt_denominator(unsigned m) {
  Integer d = 1;
  for (std::uint64_t p = 2; p <= 2 * m + 1; ++p) {
    if (oracle::is_prime(p) && (2 * m) % (p - 1) == 0) d *= p;
  }
  return d;
}

}  // namespace

TEST_CASE("bernoulli_exact matches the x/(e^x-1) recurrence") {
  CHECK(bernoulli_exact(1) == Rational(Integer(1), Integer(6)));
  CHECK(bernoulli_exact(2) == Rational(Integer(1), Integer(30)));
  CHECK(bernoulli_exact(6) == Rational(Integer(691), Integer(2730)));
  CHECK_THROWS_WITH_AS(bernoulli_exact(0), "index starts at 1", DomainError);

  const auto& reference = oracle::ms_bernoulli(80);
  const auto table = bernoulli_table(80);
  REQUIRE(table.size() == 80);
  for (unsigned m = 1; m <= 80; ++m) {
    CHECK(bernoulli_exact(m) == from_mpq(reference[m]));
    CHECK(table[m - 1] == from_mpq(reference[m]));
    CHECK(bernoulli_exact(m).sign() > 0);
  }
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (unsigned m = 1; m <= 100; ++m) {
    CHECK(bernoulli_exact(m).denominator() == von_staudt_denominator(m));
  }
}

TEST_CASE("num_b_over_2m") {
  CHECK(num_b_over_2m(6) == 691);
  CHECK(num_b_over_2m(1) == 1);
  CHECK(num_b_over_2m(0) == 1);
  for (unsigned m = 0; m <= 60; ++m) CHECK(num_b_over_2m(m) == oracle::num_b_over_2m(m));
}

TEST_CASE("bernoulli_mod_p") {
  CHECK(bernoulli_mod_p(6, Prime(691)) == 0);
  CHECK(bernoulli_mod_p(2, Prime(7)) == 1);
  CHECK(bernoulli_mod_p(1, Prime(5)) == 3);
  CHECK_THROWS_WITH_AS(bernoulli_mod_p(3, Prime(7)), "not a p-integer", DomainError);
  CHECK_THROWS_WITH_AS(bernoulli_mod_p(1, Prime(2)), "odd primes only", DomainError);

  // Residue of the exact fraction, for every admissible pair.
  for (Prime p : primes_up_to(200)) {
    if (p.value() == 2) continue;
    for (unsigned m = 1; m <= 40; ++m) {
      if ((2 * m) % (p.value() - 1) == 0) continue;
      const Rational q = bernoulli_exact(m) / Rational(static_cast<long>(2 * m));
      const auto expected = mul_mod(reduce_mod(q.numerator(), p),
                                    inverse_mod(reduce_mod(q.denominator(), p), p), p);
      CHECK(bernoulli_mod_p(m, p) == expected);
    }
  }
}

TEST_CASE("divides_num against exact numerators") {
  CHECK(divides_num(Prime(691), 6));
  CHECK(divides_num(Prime(37), 16));
  for (unsigned m = 1; m <= 60; ++m) CHECK_FALSE(divides_num(Prime(3), m));
  CHECK_FALSE(divides_num(Prime(7), 3));  // 7 in the denominator
}

TEST_CASE("Kummer periodicity") {
  for (std::uint64_t p : {5, 7, 11, 13, 37, 59, 67, 101, 103}) {
    const Prime prime(p);
    const unsigned period = static_cast<unsigned>((p - 1) / 2);
    for (unsigned m = 1; m <= 60; ++m) {
      if ((2 * m) % (p - 1) == 0) continue;
      CHECK(divides_num(prime, m) == divides_num(prime, m + period));
      CHECK(divides_num(prime, m) == divides_num(prime, m + 3 * period));
    }
  }
}

TEST_CASE("regular and very regular primes") {
  CHECK_FALSE(is_regular(Prime(691)));
  CHECK(is_regular(Prime(3)));
  CHECK_FALSE(is_regular(Prime(37)));
  CHECK_THROWS_AS(is_regular(Prime(2)), DomainError);
  CHECK_THROWS_AS(is_very_regular(Prime(2)), DomainError);
  CHECK_FALSE(is_very_regular(Prime(7)));
  CHECK(is_very_regular(Prime(13)));
  CHECK_FALSE(is_very_regular(Prime(89)));

  // Irregular primes below 200, from exact numerators.
  std::vector<std::uint64_t> irregular;
  for (Prime p : primes_up_to(200)) {
    if (p.value() == 2) continue;
    bool divides = false;
    for (unsigned m = 1; 2 * m <= p.value() - 3; ++m) {
      divides = divides || oracle::num_b_over_2m(m) % p.value() == 0;
    }
    if (divides) irregular.push_back(p.value());
    CHECK(is_regular(p) == !divides);
  }
  CHECK(irregular == std::vector<std::uint64_t>{37, 59, 67, 101, 103, 131, 149, 157});
}

TEST_CASE("order parity criterion for odd Mersenne divisibility") {
  for (Prime p : primes_up_to(1000)) {
    if (p.value() == 2) continue;
    bool divides = false;
    for (unsigned m = 1; m <= p.value(); ++m) {
      divides = divides || pow_mod(2, 2 * m - 1, p.value()) == 1;
    }
    CHECK(divides == (oracle::order_by_powering(2, p.value()) % 2 == 1));
    CHECK(divides_some_odd_mersenne(p) == divides);
  }
}

TEST_CASE("cache file round trip") {
  BernoulliCache cache;
  cache.ensure(25);
  std::stringstream file;
  cache.save(file);
  CHECK(file.str().rfind("bernoulli-ms-v1 max_m=25\n", 0) == 0);
  CHECK(file.str().find("6\t691\t2730\n") != std::string::npos);

  BernoulliCache other;
  other.load(file);
  CHECK(other.max_m() == 25);
  for (unsigned m = 1; m <= 25; ++m) CHECK(other.get(m) == cache.get(m));

  std::stringstream bad("bernoulli-ms-v1 max_m=2\n1\t1\t6\n2\t1\t31\n");
  BernoulliCache broken;
  CHECK_THROWS_AS(broken.load(bad), DomainError);
  std::stringstream gap("bernoulli-ms-v1 max_m=3\n1\t1\t6\n3\t1\t42\n");
  CHECK_THROWS_AS(broken.load(gap), DomainError);
  std::stringstream header("bernoulli-v0\n");
  CHECK_THROWS_AS(broken.load(header), DomainError);
}
