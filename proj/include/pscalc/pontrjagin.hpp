#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pscalc/exact.hpp"

namespace pscalc {

/// A product p_{i1} p_{i2} ... of Pontrjagin classes, stored as the sorted
/// multiset of indices. The empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> indices);

  /// Parses "p1", "p2^3", "p1^2*p2". Throws DomainError on bad syntax.
  static Monomial parse(const std::string& text);

  const std::vector<unsigned>& indices() const { return indices_; }
  /// Sum of indices; the cohomological degree is 4 * weight().
  unsigned weight() const;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> indices_;
};

/// Homogeneous polynomial of weight j (degree 4j) in p_1, p_2, ... with
/// exact rational coefficients. Zero coefficients are never stored.
class PontPolynomial {
 public:
  explicit PontPolynomial(unsigned weight) : weight_(weight) {}

  unsigned weight() const { return weight_; }
  unsigned degree() const { return 4 * weight_; }

  void add_term(const Monomial& monomial, const Rational& coefficient);
  Rational coefficient(const Monomial& monomial) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Substitutes p_i = values[i-1]; indices past the end read as 0.
  Rational evaluate(std::span<const Rational> values) const;

  /// Exact-fraction text, monomials in lexicographic order, e.g.
  /// "(7/5760)*p1^2 + (-1/1440)*p2".
  std::string to_string() const;

  friend bool operator==(const PontPolynomial&, const PontPolynomial&) = default;

 private:
  unsigned weight_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace pscalc
