#include <doctest.h>

#include "pscalc/bernoulli.hpp"
#include "pscalc/serialize.hpp"

using namespace pscalc;

namespace {

template <typename T>
T round_trip(const T& value) {
  return from_json<T>(Json::parse(to_json(value).dump()));
}

}  // namespace

TEST_CASE("tconst document") {
  CHECK(to_json(t_constant(6)).dump() ==
        R"({"m":6,"value":"1414477","factors":["2047","691"]})");
  CHECK(to_json(t_constant(0)).dump() == R"({"m":0,"value":"1","factors":[]})");
  for (unsigned m = 0; m <= 30; ++m) CHECK(round_trip(t_constant(m)) == t_constant(m));
}

TEST_CASE("record round trips") {
  for (unsigned m = 1; m <= 30; ++m) {
    const BernoulliRecord r{m, bernoulli_exact(m), num_b_over_2m(m)};
    CHECK(round_trip(r) == r);
  }
  const AConstantRecord a{6, 2, a_constant(6, 2)};
  CHECK(round_trip(a) == a);
  const PrimeRecord p{89, true, false};
  CHECK(round_trip(p) == p);

  for (int n = 0; n <= 24; ++n) CHECK(round_trip(ko_group(n)) == ko_group(n));
  for (int n = 0; n <= 24; ++n) {
    const KOElement e(n, -7);
    CHECK(round_trip(e) == e);
  }
  for (int d = 6; d <= 12; ++d) {
    for (int k = 0; k <= 12; ++k) {
      const auto r = surjectivity_report(d, k);
      CHECK(round_trip(r) == r);
    }
  }

  const GenusRecord g{"k3", 4, Rational(2), Rational(-16), KOElement::kappa()};
  CHECK(round_trip(g) == g);
  const GenusRecord h{"cp2", 4, Rational(Integer(-1), Integer(8)), Rational(1), std::nullopt};
  CHECK(round_trip(h) == h);

  const RepresentRecord found{-12, Parity::any, 8, IntVector{1, -6}};
  const RepresentRecord missing{1, Parity::even_vector, 3, std::nullopt};
  CHECK(round_trip(found) == found);
  CHECK(round_trip(missing) == missing);
  const LatticeRecord l{"k3", 22, -16, Integer(-1), true, found};
  const LatticeRecord degenerate{"x", 2, std::nullopt, Integer(0), false, std::nullopt};
  CHECK(round_trip(l) == l);
  CHECK(round_trip(degenerate) == degenerate);
}

TEST_CASE("sweep report round trip") {
  auto report = sweep_a2(20, SweepStrategy::cross_check);
  const auto back = from_json<SweepReport>(to_json(report, false));
  CHECK(back.m_max == report.m_max);
  CHECK(back.strategy == report.strategy);
  CHECK(back.failures == report.failures);
  CHECK_FALSE(to_json(report, false).contains("seconds"));
  CHECK(to_json(report, true).contains("seconds"));
}

TEST_CASE("large integers are strings") {
  const auto j = to_json(t_constant(40));
  CHECK(j["value"].is_string());
  CHECK(Integer(j["value"].get<std::string>()) == t_constant(40).value);
}

TEST_CASE("manifold files") {
  for (const auto& m : builtin_manifolds()) {
    const auto back = manifold_from_json(Json::parse(manifold_to_json(m).dump()));
    CHECK(back.name == m.name);
    CHECK(back.numbers == m.numbers);
  }
  const auto parsed = manifold_from_json(Json::parse(
      R"({"name":"m","dimension":8,"pontrjagin":{"p1^2":"0","p2":-1440}})"));
  CHECK(ahat_number(parsed.numbers) == Rational(1));
  CHECK_THROWS_AS(manifold_from_json(Json::parse(R"({"dimension":6,"pontrjagin":{}})")),
                  DomainError);
  CHECK_THROWS_AS(
      manifold_from_json(Json::parse(R"({"dimension":4,"pontrjagin":{"p2":1}})")),
      DomainError);
  CHECK_THROWS_AS(manifold_from_json(Json::parse(R"({"dimension":4})")), DomainError);
  CHECK_THROWS_AS(
      manifold_from_json(Json::parse(R"({"dimension":4,"pontrjagin":{"p1":1.5}})")),
      DomainError);
}

TEST_CASE("gram files") {
  const auto k3 = IntegralLattice::k3_form();
  CHECK(lattice_from_json(Json::parse(gram_to_json(k3).dump())) == k3);
  CHECK_THROWS_AS(lattice_from_json(Json::parse("[[0,1],[2,0]]")), DomainError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse("{}")), DomainError);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"([[0,"a"],[1,0]])")), DomainError);
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(from_json<AConstantRecord>(Json::parse(R"({"m":1})")), DomainError);
  CHECK_THROWS_AS(from_json<AConstantRecord>(Json::parse(R"({"m":1,"n":1,"value":"x"})")),
                  DomainError);
  CHECK_THROWS_AS(
      from_json<RepresentRecord>(Json::parse(
          R"({"target":1,"parity":"odd","bound":1,"found":false,"vector":null})")),
      DomainError);
}
