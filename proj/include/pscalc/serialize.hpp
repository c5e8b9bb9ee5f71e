#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pscalc/exact.hpp"
#include "pscalc/genus.hpp"
#include "pscalc/ko.hpp"
#include "pscalc/lattice.hpp"
#include "pscalc/obstruction.hpp"

namespace pscalc {

// JSON documents emitted by the command line tool. Key order is fixed and
// every unbounded integer is a decimal string.
using Json = nlohmann::ordered_json;

struct BernoulliRecord {
  unsigned m = 0;
  Rational value;
  Integer num_b_over_2m;
  friend bool operator==(const BernoulliRecord&, const BernoulliRecord&) = default;
};

struct AConstantRecord {
  unsigned m = 0;
  unsigned n = 0;
  Integer value;
  friend bool operator==(const AConstantRecord&, const AConstantRecord&) = default;
};

struct PrimeRecord {
  std::uint64_t p = 0;
  bool regular = false;
  bool very_regular = false;
  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct GenusRecord {
  std::string name;
  unsigned dimension = 0;
  Rational ahat;
  Rational signature;
  std::optional<KOElement> ko_ahat;  // empty for non-spin input
  friend bool operator==(const GenusRecord&, const GenusRecord&) = default;
};

struct RepresentRecord {
  std::int64_t target = 0;
  Parity parity = Parity::any;
  std::int64_t bound = 0;
  std::optional<IntVector> vector;
  friend bool operator==(const RepresentRecord&, const RepresentRecord&) = default;
};

struct LatticeRecord {
  std::string form;
  std::size_t rank = 0;
  std::optional<int> signature;  // empty for a degenerate form
  Integer determinant;
  bool even = false;
  std::optional<RepresentRecord> represent;
  friend bool operator==(const LatticeRecord&, const LatticeRecord&) = default;
};

Json to_json(const BernoulliRecord& record);
Json to_json(const ObstructionConstant& constant);
Json to_json(const AConstantRecord& record);
/// {m_max, strategy, failures} plus "seconds" when include_seconds is set.
Json to_json(const SweepReport& report, bool include_seconds);
Json to_json(const PrimeRecord& record);
Json to_json(const KOGroup& group);
Json to_json(const KOElement& element);
Json to_json(const SurjectivityReport& report);
Json to_json(const GenusRecord& record);
Json to_json(const PontPolynomial& polynomial);
Json to_json(const RepresentRecord& record);
Json to_json(const LatticeRecord& record);

/// Manifold file: {name, dimension, pontrjagin: {"p1": n, "p1^2": n, ...}}.
/// Values may be JSON integers or decimal strings.
Json manifold_to_json(const Manifold& manifold);
Manifold manifold_from_json(const Json& json);

/// Gram matrix as an array of integer rows.
Json gram_to_json(const IntegralLattice& lattice);
IntegralLattice lattice_from_json(const Json& json);

template <typename T>
T from_json(const Json& json);

template <> BernoulliRecord from_json(const Json& json);
template <> ObstructionConstant from_json(const Json& json);
template <> AConstantRecord from_json(const Json& json);
template <> SweepReport from_json(const Json& json);
template <> PrimeRecord from_json(const Json& json);
template <> KOGroup from_json(const Json& json);
template <> KOElement from_json(const Json& json);
template <> SurjectivityReport from_json(const Json& json);
template <> GenusRecord from_json(const Json& json);
template <> RepresentRecord from_json(const Json& json);
template <> LatticeRecord from_json(const Json& json);

}  // namespace pscalc
