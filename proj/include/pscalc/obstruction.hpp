#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pscalc/exact.hpp"

namespace pscalc {

/// t(m) = (2^{2m-1} - 1) * Num(B_m / 2m), with t(0) = 1.
struct ObstructionConstant {
  unsigned m = 0;
  Integer value;
  Integer factor_power;  // 2^{2m-1} - 1 (1 when m = 0)
  Integer factor_num;    // Num(B_m / 2m) (1 when m = 0)

  friend bool operator==(const ObstructionConstant&, const ObstructionConstant&) = default;
};

ObstructionConstant t_constant(unsigned m);

/// t(0..max_m), computed with `workers` threads against the shared Bernoulli
/// cache.
std::vector<Integer> t_values(unsigned max_m, unsigned workers = 1);

/// Calls visit(parts) for every partition of `total` into at most `max_parts`
/// positive parts, parts in nonincreasing order. Stops early when visit
/// returns false.
void for_each_partition(unsigned total, unsigned max_parts,
                        const std::function<bool(std::span<const unsigned>)>& visit);

/// A(m, n): gcd of prod t(m_i) over all multisets {m_1..m_n} of nonnegative
/// integers summing to m. A(0, n) = 1 and A(m, 1) = t(m).
Integer a_constant(unsigned m, unsigned n);

enum class SweepStrategy { four_condition, full_gcd, cross_check };

std::string to_string(SweepStrategy strategy);
SweepStrategy sweep_strategy_from_string(const std::string& text);

struct SweepRow {
  unsigned m = 0;
  /// gcd of t(i) t(m-i) for i in {0,1,2,3}, i <= m.
  std::optional<Integer> four_condition;
  /// gcd over every split, i.e. A(m, 2).
  std::optional<Integer> full;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  unsigned m_max = 0;
  SweepStrategy strategy = SweepStrategy::cross_check;
  /// Every m whose computed gcd is not 1 (under cross_check: either gcd).
  std::vector<unsigned> failures;
  std::vector<SweepRow> rows;  // m = 2..m_max, ascending
  std::chrono::duration<double> wall_time{};
};

/// Checks A(m, 2) = 1 for 2 <= m <= m_max. Work is split across `workers`
/// threads; the report is ordered by m regardless of scheduling.
SweepReport sweep_a2(unsigned m_max, SweepStrategy strategy, unsigned workers = 1);

struct IndexBound {
  Integer value;
  std::string citation;
};

/// Divisor of the index of J_{2n+q, 4m-2n-q}[1/2] in pi_{4m}(ko)[1/2]: A(m, n).
IndexBound j_index_bound(unsigned n, unsigned q, unsigned m);

/// v_p(t(k)) decided from the order of 2 mod p and the Kummer test, without
/// forming t(k). The Bernoulli part contributes at most 1.
unsigned vp_t_sieve(unsigned k, Prime p);

/// v_p of the index j_{2n, 4m-2n}: the minimum over multisets {m_i} summing to
/// m of sum v_p(t(m_i)). Requires 4m + 1 < 2p - 3 ("outside sharpness range").
unsigned vp_j(unsigned n, unsigned m, Prime p);

}  // namespace pscalc
