#include "pscalc/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pscalc/bernoulli.hpp"
#include "pscalc/ko.hpp"

namespace pscalc {

namespace {

Integer power_factor(unsigned m) { return pow2(2ul * m - 1) - 1; }

// Runs body(i) for i in [0, count) on up to `workers` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

ObstructionConstant t_constant(unsigned m) {
  if (m == 0) return {0, 1, 1, 1};
  ObstructionConstant out;
  out.m = m;
  out.factor_power = power_factor(m);
  out.factor_num = num_b_over_2m(m);
  out.value = out.factor_power * out.factor_num;
  return out;
}

std::vector<Integer> t_values(unsigned max_m, unsigned workers) {
  BernoulliCache::global().ensure(max_m);
  std::vector<Integer> values(max_m + 1);
  parallel_for(values.size(), workers,
               [&](std::size_t m) { values[m] = t_constant(static_cast<unsigned>(m)).value; });
  return values;
}

void for_each_partition(unsigned total, unsigned max_parts,
                        const std::function<bool(std::span<const unsigned>)>& visit) {
  std::vector<unsigned> parts;
  // Extends `parts` with parts no larger than `cap` summing to `remaining`.
  std::function<bool(unsigned, unsigned)> extend = [&](unsigned remaining,
                                                       unsigned cap) -> bool {
    if (remaining == 0) return visit(parts);
    if (parts.size() == max_parts) return true;
    for (unsigned part = std::min(cap, remaining); part >= 1; --part) {
      // The remaining slots must be able to hold what is left.
      const auto slots = max_parts - parts.size();
      if (static_cast<unsigned long>(part) * slots < remaining) break;
      parts.push_back(part);
      const bool keep_going = extend(remaining - part, part);
      parts.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  extend(total, total);
}

Integer a_constant(unsigned m, unsigned n) {
  if (m == 0) return 1;
  if (n == 0) throw DomainError("A(m, n) needs n >= 1");
  const auto t = t_values(m);
  Integer result = 0;
  for_each_partition(m, n, [&](std::span<const unsigned> parts) {
    Integer product = 1;
    for (unsigned part : parts) product *= t[part];
    result = gcd(result, product);
    return result != 1;
  });
  return result;
}

std::string to_string(SweepStrategy strategy) {
  switch (strategy) {
    case SweepStrategy::four_condition:
      return "four_condition";
    case SweepStrategy::full_gcd:
      return "full_gcd";
    case SweepStrategy::cross_check:
      return "cross_check";
  }
  return "cross_check";
}

SweepStrategy sweep_strategy_from_string(const std::string& text) {
  if (text == "four_condition") return SweepStrategy::four_condition;
  if (text == "full_gcd") return SweepStrategy::full_gcd;
  if (text == "cross_check") return SweepStrategy::cross_check;
  throw DomainError("unknown sweep strategy '" + text + "'");
}

SweepReport sweep_a2(unsigned m_max, SweepStrategy strategy, unsigned workers) {
  if (m_max < 2) throw DomainError("sweep needs m_max >= 2");
  const auto start = std::chrono::steady_clock::now();
  const auto t = t_values(m_max, workers);

  const bool want_four = strategy != SweepStrategy::full_gcd;
  const bool want_full = strategy != SweepStrategy::four_condition;

  SweepReport report;
  report.m_max = m_max;
  report.strategy = strategy;
  report.rows.resize(m_max - 1);
  parallel_for(report.rows.size(), workers, [&](std::size_t index) {
    const auto m = static_cast<unsigned>(index + 2);
    SweepRow row;
    row.m = m;
    if (want_four) {
      Integer g = 0;
      for (unsigned i = 0; i <= std::min(3u, m); ++i) g = gcd(g, t[i] * t[m - i]);
      row.four_condition = g;
    }
    if (want_full) {
      Integer g = 0;
      for (unsigned i = 0; i <= m / 2 && g != 1; ++i) g = gcd(g, t[i] * t[m - i]);
      row.full = g;
    }
    if (row.four_condition && row.full && *row.four_condition % *row.full != 0) {
      throw std::logic_error("full gcd does not divide the four-condition gcd at m=" +
                             std::to_string(m));
    }
    report.rows[index] = std::move(row);
  });

  for (const auto& row : report.rows) {
    const bool bad = (row.four_condition && *row.four_condition != 1) ||
                     (row.full && *row.full != 1);
    if (bad) report.failures.push_back(row.m);
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

IndexBound j_index_bound(unsigned n, unsigned /*q*/, unsigned m) {
  return {a_constant(m, n), kCiteIndexBound};
}

namespace {

// v_p(2^e - 1) for e a multiple of ord_p(2), by lifting the exponent.
unsigned vp_power_of_two_minus_one(std::uint64_t exponent, Prime p) {
  const std::uint64_t order = multiplicative_order(2, p);
  if (exponent % order != 0) return 0;
  // v_p(2^order - 1): test divisibility by increasing powers of p.
  unsigned base_valuation = 1;
  std::uint64_t modulus = p.value();
  while (modulus <= std::numeric_limits<std::uint64_t>::max() / p.value() / p.value()) {
    modulus *= p.value();
    if (pow_mod(2, order, modulus) != 1) break;
    ++base_valuation;
  }
  std::uint64_t j = exponent / order;
  unsigned extra = 0;
  while (j % p.value() == 0) {
    j /= p.value();
    ++extra;
  }
  return base_valuation + extra;
}

}  // namespace

unsigned vp_t_sieve(unsigned k, Prime p) {
  if (p.value() == 2) throw DomainError("odd primes only");
  if (k == 0) return 0;
  return vp_power_of_two_minus_one(2ull * k - 1, p) + (divides_num(p, k) ? 1u : 0u);
}

unsigned vp_j(unsigned n, unsigned m, Prime p) {
  if (p.value() == 2) throw DomainError("odd primes only");
  if (n == 0) throw DomainError("vp_j needs n >= 1");
  if (!(4ull * m + 1 < 2 * p.value() - 3)) throw DomainError("outside sharpness range");

  std::vector<unsigned> weight(m + 1, 0);
  for (unsigned k = 1; k <= m; ++k) weight[k] = vp_t_sieve(k, p);

  // best[s]: least total weight of at most `parts` parts summing to s.
  constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> best(m + 1, kInfinity);
  best[0] = 0;
  for (unsigned parts = 1; parts <= n; ++parts) {
    std::vector<unsigned> next = best;
    for (unsigned s = 1; s <= m; ++s) {
      for (unsigned k = 1; k <= s; ++k) {
        if (best[s - k] == kInfinity) continue;
        next[s] = std::min(next[s], weight[k] + best[s - k]);
      }
    }
    best = std::move(next);
  }
  return best[m];
}

}  // namespace pscalc
