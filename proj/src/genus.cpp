#include "pscalc/genus.hpp"

#include <mutex>

namespace pscalc {

PontNumbers::PontNumbers(unsigned dimension) : dimension_(dimension) {
  if (dimension == 0 || dimension % 4 != 0) {
    throw DomainError("dimension " + std::to_string(dimension) +
                      " is not a positive multiple of 4");
  }
}

void PontNumbers::set(const Monomial& monomial, const Integer& value) {
  if (4 * monomial.weight() != dimension_) {
    throw DomainError("monomial " + monomial.to_string() + " has degree " +
                      std::to_string(4 * monomial.weight()) + " in dimension " +
                      std::to_string(dimension_));
  }
  if (value == 0) {
    values_.erase(monomial);
  } else {
    values_[monomial] = value;
  }
}

Integer PontNumbers::get(const Monomial& monomial) const {
  const auto it = values_.find(monomial);
  return it == values_.end() ? Integer(0) : it->second;
}

const std::vector<Manifold>& builtin_manifolds() {
  static const std::vector<Manifold> registry = [] {
    PontNumbers k3(4);
    k3.set(Monomial({1}), -48);
    PontNumbers plumbing(8);
    plumbing.set(Monomial({1, 1}), 0);
    plumbing.set(Monomial({2}), -1440);  // -2^5 * 3^2 * 5
    return std::vector<Manifold>{{"k3", k3}, {"plumbing8", plumbing}};
  }();
  return registry;
}

const Manifold& builtin_manifold(const std::string& name) {
  for (const auto& m : builtin_manifolds()) {
    if (m.name == name) return m;
  }
  throw DomainError("unknown built-in manifold '" + name + "'");
}

const PontPolynomial& genus_polynomial(Genus kind, unsigned j) {
  static std::mutex mutex;
  // Map nodes are stable, so returned references survive later insertions.
  static std::map<std::pair<Genus, unsigned>, PontPolynomial> memo;
  if (j == 0) throw DomainError("genus polynomials start at weight 1");
  std::lock_guard lock(mutex);
  if (const auto it = memo.find({kind, j}); it != memo.end()) return it->second;
  auto list = genus_polynomials(kind, j);
  for (unsigned w = 1; w <= j; ++w) memo.try_emplace({kind, w}, std::move(list[w - 1]));
  return memo.at({kind, j});
}

Rational pair(const PontPolynomial& polynomial, const PontNumbers& numbers) {
  if (polynomial.degree() != numbers.dimension()) {
    throw DomainError("polynomial degree does not match manifold dimension");
  }
  Rational total;
  for (const auto& [monomial, coefficient] : polynomial.terms()) {
    total += coefficient * Rational(numbers.get(monomial));
  }
  return total;
}

Rational ahat_number(const PontNumbers& numbers) {
  return pair(genus_polynomial(Genus::ahat, numbers.dimension() / 4), numbers);
}

Rational signature_number(const PontNumbers& numbers) {
  return pair(genus_polynomial(Genus::l, numbers.dimension() / 4), numbers);
}

KOElement ko_ahat(const PontNumbers& numbers) {
  const Rational ahat = ahat_number(numbers);
  if (!ahat.is_integer()) throw DomainError("not a spin certificate");
  const int degree = static_cast<int>(numbers.dimension());
  if (degree % 8 == 0) return {degree, ahat.numerator()};
  if (ahat.numerator() % 2 != 0) throw DomainError("not a spin certificate");
  return {degree, ahat.numerator() / 2};
}

}  // namespace pscalc
