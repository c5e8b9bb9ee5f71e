#include <doctest.h>

#include <algorithm>

#include "pscalc/ko.hpp"

using namespace pscalc;

namespace {

// Every nonzero additive basis element through degree `max_degree`.
std::vector<KOElement> basis(int max_degree) {
  std::vector<KOElement> out;
  for (int n = 0; n <= max_degree; ++n) {
    if (ko_group(n).kind != KOKind::zero) out.emplace_back(n, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("ko groups") {
  CHECK(ko_group(8) == KOGroup{8, KOKind::z, "β"});
  CHECK(ko_group(9) == KOGroup{9, KOKind::z2, "η·β"});
  CHECK(ko_group(3) == KOGroup{3, KOKind::zero, "0"});
  CHECK(ko_group(0).generator == "1");
  CHECK(ko_group(2).generator == "η^2");
  CHECK(ko_group(4).generator == "κ");
  CHECK(ko_group(20).generator == "β^2·κ");
  CHECK(ko_group(17).generator == "η·β^2");
  CHECK_THROWS_AS(ko_group(-1), DomainError);
  CHECK(ko_kind_from_string(to_string(KOKind::z2)) == KOKind::z2);
  CHECK_THROWS_AS(ko_kind_from_string("Q"), DomainError);

  for (int n = 0; n <= 64; ++n) CHECK(ko_group(n).kind == ko_group(n + 8).kind);
}

TEST_CASE("elements are normalized") {
  CHECK(KOElement(9, 3).coefficient() == 1);
  CHECK(KOElement(9, -4).is_zero());
  CHECK(KOElement(3, 5).is_zero());
  CHECK(KOElement(8, -5).coefficient() == -5);
  CHECK(KOElement(8, 4).to_string() == "4·β");
  CHECK(KOElement(4, 1).to_string() == "κ");
  CHECK(KOElement(5, 1).to_string() == "0");
}

TEST_CASE("ring relations") {
  const auto eta = KOElement::eta(), kappa = KOElement::kappa(), beta = KOElement::beta();
  CHECK(ring_multiply(kappa, kappa) == KOElement(8, 4));
  CHECK(ring_multiply(eta, kappa).is_zero());
  CHECK(ring_multiply(ring_multiply(eta, eta), eta).is_zero());
  CHECK(ring_multiply(KOElement(0, 2), eta).is_zero());
  CHECK(ring_multiply(eta, beta) == KOElement(9, 1));
  CHECK(ring_multiply(kappa, beta) == KOElement(12, 1));
  CHECK(ring_multiply(KOElement(12, 1), KOElement(4, 1)) == KOElement(16, 4));
  CHECK(ring_multiply(KOElement(0, -3), KOElement(8, 5)) == KOElement(8, -15));
}

TEST_CASE("ring is commutative, associative and graded") {
  const auto elements = basis(32);
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      const auto ab = ring_multiply(a, b);
      CHECK(ab == ring_multiply(b, a));
      CHECK(ab.degree() == a.degree() + b.degree());
    }
  }
  const auto small = basis(16);
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        CHECK(ring_multiply(ring_multiply(a, b), c) == ring_multiply(a, ring_multiply(b, c)));
      }
    }
  }
}

TEST_CASE("surjectivity reports") {
  const auto r61 = surjectivity_report(6, 1);
  CHECK(r61.target.degree == 8);
  CHECK(r61.target.kind == KOKind::z);
  CHECK(r61.rational_surjective);
  CHECK(r61.integrally_surjective);
  REQUIRE(r61.away_from_two.has_value());
  CHECK(r61.away_from_two->m == 2);
  CHECK(r61.away_from_two->n == 3);

  const auto r72 = surjectivity_report(7, 2);
  CHECK(r72.target.kind == KOKind::z2);
  CHECK(r72.mod2_surjective);
  CHECK_FALSE(r72.integrally_surjective);
  CHECK_FALSE(r72.away_from_two.has_value());

  const auto r63 = surjectivity_report(6, 3);
  CHECK(r63.target.degree == 10);
  CHECK(r63.mod2_surjective);
  CHECK(r63.integrally_surjective);

  CHECK_THROWS_WITH_AS(surjectivity_report(5, 0), "outside theorem hypotheses", DomainError);
  CHECK_THROWS_WITH_AS(surjectivity_report(6, -1), "outside theorem hypotheses", DomainError);

  for (int d = 6; d <= 20; ++d) {
    for (int k = 0; k <= 40; ++k) {
      const auto r = surjectivity_report(d, k);
      CHECK(r.target == ko_group(k + d + 1));
      if (r.target.kind != KOKind::zero) {
        CHECK((r.rational_surjective || r.mod2_surjective));
      }
      CHECK(r.integrally_surjective == (d % 2 == 0 && k <= d - 1));
    }
  }
}

TEST_CASE("markdown row") {
  const auto row = markdown_row(surjectivity_report(6, 1));
  const auto header = markdown_header();
  CHECK(row.find("Theorem A(i)") != std::string::npos);
  CHECK(row.find("Corollary 5.11") != std::string::npos);
  CHECK(row.front() == '|');
  CHECK(std::count(row.begin(), row.end(), '|') ==
        std::count(header.begin(), header.end(), '|') / 2);
}
