#include "pscalc/ko.hpp"

#include <fmt/format.h>

#include "pscalc/obstruction.hpp"

namespace pscalc {

std::string to_string(KOKind kind) {
  switch (kind) {
    case KOKind::z:
      return "Z";
    case KOKind::z2:
      return "Z2";
    case KOKind::zero:
      return "zero";
  }
  return "zero";
}

KOKind ko_kind_from_string(const std::string& text) {
  if (text == "Z") return KOKind::z;
  if (text == "Z2") return KOKind::z2;
  if (text == "zero") return KOKind::zero;
  throw DomainError("unknown KO group kind '" + text + "'");
}

namespace {

std::string power(const char* symbol, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return symbol;
  return fmt::format("{}^{}", symbol, exponent);
}

std::string generator_name(int eta, int beta, int kappa) {
  std::string out;
  for (const std::string& part :
       {power("η", eta), power("β", beta), power("κ", kappa)}) {
    if (part.empty()) continue;
    if (!out.empty()) out += "·";
    out += part;
  }
  return out.empty() ? "1" : out;
}

struct Exponents {
  int eta = 0;
  int kappa = 0;
  int beta = 0;
};

// The basis monomial of a nontrivial degree.
std::optional<Exponents> basis_monomial(int degree) {
  const int r = degree / 8;
  switch (degree % 8) {
    case 0:
      return Exponents{0, 0, r};
    case 1:
      return Exponents{1, 0, r};
    case 2:
      return Exponents{2, 0, r};
    case 4:
      return Exponents{0, 1, r};
    default:
      return std::nullopt;
  }
}

}  // namespace

KOGroup ko_group(int degree) {
  if (degree < 0) throw DomainError("connective KO is zero in negative degrees");
  const auto monomial = basis_monomial(degree);
  if (!monomial) return {degree, KOKind::zero, "0"};
  const KOKind kind = monomial->eta > 0 ? KOKind::z2 : KOKind::z;
  return {degree, kind, generator_name(monomial->eta, monomial->beta, monomial->kappa)};
}

KOElement::KOElement(int degree, Integer coefficient)
    : degree_(degree), coefficient_(std::move(coefficient)) {
  switch (ko_group(degree).kind) {
    case KOKind::z:
      break;
    case KOKind::z2:
      coefficient_ = coefficient_ % 2;
      if (coefficient_ < 0) coefficient_ += 2;
      break;
    case KOKind::zero:
      coefficient_ = 0;
      break;
  }
}

std::string KOElement::to_string() const {
  if (is_zero()) return "0";
  if (coefficient_ == 1) return generator();
  return coefficient_.get_str() + "·" + generator();
}

KOElement ring_multiply(const KOElement& a, const KOElement& b) {
  const int degree = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return {degree, 0};
  const Exponents x = *basis_monomial(a.degree());
  const Exponents y = *basis_monomial(b.degree());
  Exponents product{x.eta + y.eta, x.kappa + y.kappa, x.beta + y.beta};
  Integer coefficient = a.coefficient() * b.coefficient();
  while (product.kappa >= 2) {  // kappa^2 = 4 beta
    product.kappa -= 2;
    product.beta += 1;
    coefficient *= 4;
  }
  if (product.eta >= 3 || (product.eta > 0 && product.kappa > 0)) {
    return {degree, 0};
  }
  return {degree, coefficient};
}

SurjectivityReport surjectivity_report(int dimension, int k) {
  if (dimension < 6 || k < 0) throw DomainError("outside theorem hypotheses");
  SurjectivityReport report;
  report.dimension = dimension;
  report.k = k;
  const int degree = k + dimension + 1;
  report.target = ko_group(degree);

  if (report.target.kind == KOKind::z) {
    report.rational_surjective = true;
    report.citations.emplace_back(kCiteRational);
  }
  if (report.target.kind == KOKind::z2) {
    report.mod2_surjective = true;
    report.citations.emplace_back(kCiteMod2);
  }
  if (dimension % 2 == 0 && k <= dimension - 1) {
    report.integrally_surjective = true;
    report.citations.emplace_back(kCiteIntegral);
  }
  if (report.target.kind == KOKind::z && dimension % 2 == 0) {
    AwayFromTwoBound bound;
    bound.m = static_cast<unsigned>(degree / 4);
    bound.n = static_cast<unsigned>(dimension / 2);
    bound.index_divisor = a_constant(bound.m, bound.n);
    report.away_from_two = std::move(bound);
    report.citations.emplace_back(kCiteIndexBound);
  }
  return report;
}

std::string markdown_header() {
  return "| d | k | degree | group | generator | rational | mod 2 | integral | "
         "index divisor away from 2 | cited |\n"
         "|---|---|---|---|---|---|---|---|---|---|";
}

std::string markdown_row(const SurjectivityReport& report) {
  auto flag = [](bool value) { return value ? "yes" : "no"; };
  std::string cited;
  for (const auto& c : report.citations) {
    if (!cited.empty()) cited += ", ";
    cited += c;
  }
  const std::string bound =
      report.away_from_two
          ? fmt::format("A({},{}) = {}", report.away_from_two->m, report.away_from_two->n,
                        report.away_from_two->index_divisor.get_str())
          : "-";
  return fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                     report.dimension, report.k, report.target.degree,
                     to_string(report.target.kind), report.target.generator,
                     flag(report.rational_surjective), flag(report.mod2_surjective),
                     flag(report.integrally_surjective), bound,
                     cited.empty() ? "-" : cited);
}

}  // namespace pscalc
