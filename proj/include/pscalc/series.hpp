#pragma once

#include <vector>

#include "pscalc/exact.hpp"
#include "pscalc/pontrjagin.hpp"

namespace pscalc {

/// Power series a_0 + a_1 x + ... + a_N x^N over the rationals, truncated at
/// a fixed order N. Operands of binary operations must share N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncatedSeries(unsigned order, std::vector<Rational> coefficients);

  static TruncatedSeries constant(unsigned order, const Rational& value);
  static TruncatedSeries variable(unsigned order);

  unsigned order() const { return order_; }
  const Rational& operator[](unsigned k) const { return coefficients_.at(k); }
  Rational& operator[](unsigned k) { return coefficients_.at(k); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  TruncatedSeries scale(const Rational& factor) const;
  /// 1/f; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;
  /// f(c x).
  TruncatedSeries substitute_scaled(const Rational& c) const;
  /// f / x at order N-1; requires a zero constant term.
  TruncatedSeries divide_by_x() const;
  /// f' at order N-1 (order 0 stays 0).
  TruncatedSeries derivative() const;
  /// Antiderivative with zero constant term, at order N+1.
  TruncatedSeries integral() const;
  /// log f; requires constant term 1.
  TruncatedSeries log() const;
  TruncatedSeries truncate(unsigned order) const;

  bool is_zero() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const;

  unsigned order_;
  std::vector<Rational> coefficients_;
};

enum class Elementary {
  exp,
  sinh,
  cosh,
  x_over_sinh,
  x_over_tanh,
  /// (x/2) / sinh(x/2), the characteristic series of the A-hat genus.
  half_x_over_sinh_half,
};

TruncatedSeries elementary(Elementary kind, unsigned order);

/// x/sinh(x) assembled coefficientwise from Bernoulli numbers:
/// 1 + sum_m (-1)^m (2^{2m} - 2) B_m / (2m)! x^{2m}.
TruncatedSeries x_over_sinh_from_bernoulli(unsigned order);

enum class Genus { ahat, l };

/// Multiplicative-sequence polynomials K_1..K_max_j of a genus in the
/// Pontrjagin classes.
///
/// The product of the characteristic series over `roots` formal roots is
/// expanded through its logarithm in power sums, which Newton's identities
/// rewrite in elementary symmetric functions (the p_i). Classes p_i with
/// i > roots vanish; `roots == 0` means max_j roots.
std::vector<PontPolynomial> genus_polynomials(Genus kind, unsigned max_j,
                                              unsigned roots = 0);

}  // namespace pscalc
