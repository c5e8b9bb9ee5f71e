#pragma once

#include <cstdint>
#include <iosfwd>
#include <shared_mutex>
#include <vector>

#include "pscalc/exact.hpp"

namespace pscalc {

// Bernoulli numbers are indexed in the Milnor-Stasheff convention throughout:
// B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ... so B_m = |B_{2m}| in the signed
// modern numbering, and every B_m is positive.

/// Table of B_1..B_max built from tangent numbers with integer arithmetic.
///
/// Growth is single-writer; once a sweep has called ensure() for its bound the
/// table is only read, and readers may run concurrently.
class BernoulliCache {
 public:
  BernoulliCache() = default;
  BernoulliCache(const BernoulliCache&) = delete;
  BernoulliCache& operator=(const BernoulliCache&) = delete;

  /// The process-wide table used by the free functions below.
  static BernoulliCache& global();

  /// Extends the table so that B_1..B_max_m are available.
  void ensure(unsigned max_m);
  unsigned max_m() const;

  /// B_m; grows the table when m is beyond the current bound.
  Rational get(unsigned m);

  /// Cache file: header "bernoulli-ms-v1 max_m=<M>" followed by one
  /// "m<TAB>numerator<TAB>denominator" record per index, ascending, no gaps.
  void save(std::ostream& out) const;
  /// Replaces the table with the file contents if they extend it. Records are
  /// validated against von Staudt-Clausen; malformed input throws DomainError.
  void load(std::istream& in);

  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;  // values_[m - 1] = B_m
};

/// B_m for m >= 1 in the Milnor-Stasheff convention.
Rational bernoulli_exact(unsigned m);

/// The same values computed independently of the cache, by the tangent-number
/// recurrence on exactly 1..max_m. Exposed for bulk use and for tests.
std::vector<Rational> bernoulli_table(unsigned max_m);

/// |Num(B_m / 2m)|, with the value 1 at m = 0.
Integer num_b_over_2m(unsigned m);

/// Residue of B_m / 2m modulo an odd prime p with (p-1) not dividing 2m,
/// obtained from the Kummer-reduced index without forming the numerator.
std::uint64_t bernoulli_mod_p(unsigned m, Prime p);

/// Residues of B_k / 2k mod p for k = 1..(p-3)/2, index k-1 in the result.
std::vector<std::uint64_t> bernoulli_residues(Prime p);

/// p | Num(B_m / 2m). False whenever (p-1) | 2m, since p is then in the
/// denominator.
bool divides_num(Prime p, unsigned m);

bool is_regular(Prime p);

/// p | 2^{2m-1} - 1 for some m >= 1, decided by scanning m <= (p-1)/2.
bool divides_some_odd_mersenne(Prime p);

/// Regular and dividing no 2^{2m-1} - 1. The second half is decided by the
/// parity of the order of 2 and cross-checked against the finite scan.
bool is_very_regular(Prime p);

}  // namespace pscalc
