#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pscalc/exact.hpp"

namespace pscalc {

// Coefficient ring of connective real K-theory,
//   pi_*(ko) = Z[eta, kappa, beta] / (2 eta, eta^3, kappa^2 - 4 beta, kappa eta),
// with |eta| = 1, |kappa| = 4, |beta| = 8. Each degree has at most one additive
// generator: beta^r, eta beta^r, eta^2 beta^r, beta^r kappa in degrees 8r,
// 8r+1, 8r+2, 8r+4.

enum class KOKind { z, z2, zero };

std::string to_string(KOKind kind);
KOKind ko_kind_from_string(const std::string& text);

struct KOGroup {
  int degree = 0;
  KOKind kind = KOKind::zero;
  /// Additive generator ("1", "η·β", "β^2·κ", ...); "0" for the trivial group.
  std::string generator;

  friend bool operator==(const KOGroup&, const KOGroup&) = default;
};

/// pi_n(ko) for n >= 0. Throws DomainError for negative n.
KOGroup ko_group(int degree);

/// coefficient * generator in pi_degree(ko), normalized: reduced mod 2 in the
/// Z/2 degrees and forced to 0 in trivial degrees.
class KOElement {
 public:
  KOElement(int degree, Integer coefficient);

  static KOElement one() { return {0, 1}; }
  static KOElement eta() { return {1, 1}; }
  static KOElement kappa() { return {4, 1}; }
  static KOElement beta() { return {8, 1}; }

  int degree() const { return degree_; }
  const Integer& coefficient() const { return coefficient_; }
  bool is_zero() const { return coefficient_ == 0; }
  /// Name of the generator of the ambient group.
  std::string generator() const { return ko_group(degree_).generator; }
  /// "0", "κ", "4·β", "η·β", ...
  std::string to_string() const;

  friend bool operator==(const KOElement&, const KOElement&) = default;

 private:
  int degree_;
  Integer coefficient_;
};

KOElement ring_multiply(const KOElement& a, const KOElement& b);

/// Index bound away from 2 for a target of degree 4m, from the gcd constant
/// A(m, n) with n = d/2.
struct AwayFromTwoBound {
  unsigned m = 0;
  unsigned n = 0;
  Integer index_divisor;

  friend bool operator==(const AwayFromTwoBound&, const AwayFromTwoBound&) = default;
};

/// Which results cover A_k(W, g0): pi_k R+(W) -> KO_{k+d+1} for a spin
/// manifold W of dimension d.
struct SurjectivityReport {
  int dimension = 0;
  int k = 0;
  KOGroup target;
  bool rational_surjective = false;
  bool mod2_surjective = false;
  bool integrally_surjective = false;
  std::optional<AwayFromTwoBound> away_from_two;
  /// Stable identifiers of the results used, e.g. "Theorem A(i)".
  std::vector<std::string> citations;

  friend bool operator==(const SurjectivityReport&, const SurjectivityReport&) = default;
};

inline constexpr const char* kCiteRational = "Theorem A(i)";
inline constexpr const char* kCiteMod2 = "Theorem A(ii)";
inline constexpr const char* kCiteIntegral = "Theorem C";
inline constexpr const char* kCiteIndexBound = "Corollary 5.11";

/// Requires d >= 6 and k >= 0; throws DomainError otherwise.
SurjectivityReport surjectivity_report(int dimension, int k);

std::string markdown_header();
std::string markdown_row(const SurjectivityReport& report);

}  // namespace pscalc
