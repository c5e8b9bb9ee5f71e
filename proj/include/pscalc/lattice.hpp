#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pscalc/exact.hpp"

namespace pscalc {

using IntVector = std::vector<std::int64_t>;

/// A symmetric integer bilinear form given by its Gram matrix.
class IntegralLattice {
 public:
  /// Throws DomainError unless `gram` is a nonempty symmetric square matrix.
  explicit IntegralLattice(std::vector<IntVector> gram);

  /// Negative definite E8 (rank 8, even, unimodular).
  static IntegralLattice e8_negative();
  /// Hyperbolic plane [[0,1],[1,0]].
  static IntegralLattice hyperbolic();
  /// Intersection form of the K3 surface: (-E8) + (-E8) + H + H + H.
  static IntegralLattice k3_form();
  static IntegralLattice direct_sum(std::span<const IntegralLattice> summands);

  std::size_t rank() const { return gram_.size(); }
  const std::vector<IntVector>& gram() const { return gram_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  /// All diagonal entries even, i.e. q(v) is even for every v.
  bool is_even() const;

  friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

 private:
  std::vector<IntVector> gram_;
};

/// v^T G v. Throws DomainError on a length mismatch.
Integer evaluate(const IntegralLattice& lattice, std::span<const std::int64_t> v);

/// Exact determinant via the same congruence reduction as signature().
Integer determinant(const IntegralLattice& lattice);

/// Number of positive minus number of negative squares after exact rational
/// congruence diagonalization. Throws DomainError for a degenerate form.
int signature(const IntegralLattice& lattice);

enum class Parity { any, even_vector };

/// Index pairs (i, j) spanning an orthogonal hyperbolic summand: G_ii = G_jj = 0,
/// G_ij = 1 and no other entries in rows i, j.
std::vector<std::pair<std::size_t, std::size_t>> hyperbolic_summands(
    const IntegralLattice& lattice);

/// A vector v with v^T G v = target, |v_i| <= bound, and all v_i even when
/// parity is even_vector; std::nullopt when none exists.
///
/// With a hyperbolic summand e, f the answer is e + (target/2) f, or
/// 2e + (target/4) f for even vectors. Otherwise the box is searched shell by
/// shell in max-norm and the lexicographically least vector of the first
/// nonempty shell is returned. Boxes with more than `max_search` points throw
/// DomainError.
std::optional<IntVector> represent(const IntegralLattice& lattice, std::int64_t target,
                                   Parity parity, std::int64_t bound,
                                   std::uint64_t max_search = 50'000'000);

}  // namespace pscalc
