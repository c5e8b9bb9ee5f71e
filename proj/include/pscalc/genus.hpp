#pragma once

#include <map>
#include <string>
#include <vector>

#include "pscalc/exact.hpp"
#include "pscalc/ko.hpp"
#include "pscalc/pontrjagin.hpp"
#include "pscalc/series.hpp"

namespace pscalc {

/// Pontrjagin numbers <p_I, [M]> of a closed manifold of dimension 4j, paired
/// against the generator u_M with <u_M, [M]> = 1. Absent monomials read as 0.
class PontNumbers {
 public:
  /// Throws DomainError unless dimension is a positive multiple of 4.
  explicit PontNumbers(unsigned dimension);

  unsigned dimension() const { return dimension_; }
  /// Throws DomainError if the monomial's degree differs from dimension().
  void set(const Monomial& monomial, const Integer& value);
  Integer get(const Monomial& monomial) const;
  const std::map<Monomial, Integer>& values() const { return values_; }

  friend bool operator==(const PontNumbers&, const PontNumbers&) = default;

 private:
  unsigned dimension_;
  std::map<Monomial, Integer> values_;
};

struct Manifold {
  std::string name;
  PontNumbers numbers;
};

/// The K3 surface (p1 = -48) and the E8-plumbing 8-manifold
/// (p1 = 0, p2 = -1440).
const std::vector<Manifold>& builtin_manifolds();
/// "k3" or "plumbing8"; throws DomainError otherwise.
const Manifold& builtin_manifold(const std::string& name);

/// The weight-j polynomial of a genus (memoized across calls).
const PontPolynomial& genus_polynomial(Genus kind, unsigned j);

/// Pairs a genus polynomial of matching degree with the numbers.
Rational pair(const PontPolynomial& polynomial, const PontNumbers& numbers);

Rational ahat_number(const PontNumbers& numbers);
/// L-genus, i.e. the signature by Hirzebruch's theorem.
Rational signature_number(const PontNumbers& numbers);

/// The KO-valued A-hat invariant: A-hat * beta^r in dimension 8r and
/// (A-hat / 2) * beta^r kappa in dimension 8r + 4. Non-integral values (or an
/// odd A-hat in dimension 8r + 4) throw DomainError: "not a spin certificate".
KOElement ko_ahat(const PontNumbers& numbers);

}  // namespace pscalc
