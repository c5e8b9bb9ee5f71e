#include "pscalc/bernoulli.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace pscalc {

namespace {

constexpr const char* kCacheMagic = "bernoulli-ms-v1";

void require_odd(Prime p) {
  if (p.value() == 2) throw DomainError("odd primes only");
}

// Product of the primes q with (q-1) | 2m.
Integer von_staudt_denominator(unsigned m) {
  Integer product = 1;
  const unsigned long two_m = 2ul * m;
  for (unsigned long d = 1; d * d <= two_m; ++d) {
    if (two_m % d != 0) continue;
    for (unsigned long divisor : {d, two_m / d}) {
      if (is_prime(divisor + 1)) product *= static_cast<unsigned long>(divisor + 1);
      if (d * d == two_m) break;
    }
  }
  return product;
}

// Coefficients B_n / n! (signed, modern numbering) for n = 0..max_n, mod p.
// Requires max_n + 1 < p so that every factorial involved is a unit.
std::vector<std::uint64_t> modern_bernoulli_mod(Prime p, unsigned max_n) {
  const std::uint64_t mod = p.value();
  // g(x) = (e^x - 1) / x = sum x^k / (k+1)!
  std::vector<std::uint64_t> inverse_factorial(max_n + 2);
  std::uint64_t factorial = 1;
  for (unsigned k = 1; k <= max_n + 1; ++k) factorial = mul_mod(factorial, k, mod);
  inverse_factorial[max_n + 1] = inverse_mod(factorial, p);
  for (unsigned k = max_n + 1; k > 0; --k) {
    inverse_factorial[k - 1] = mul_mod(inverse_factorial[k], k, mod);
  }
  std::vector<std::uint64_t> h(max_n + 1);
  h[0] = 1;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::uint64_t acc = 0;
    for (unsigned i = 1; i <= n; ++i) {
      acc = (acc + mul_mod(inverse_factorial[i + 1], h[n - i], mod)) % mod;
    }
    h[n] = (mod - acc) % mod;
  }
  // Multiply back by n! to get B_n.
  factorial = 1;
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) factorial = mul_mod(factorial, n, mod);
    h[n] = mul_mod(h[n], factorial, mod);
  }
  return h;
}

// B_k / 2k mod p (Milnor-Stasheff sign) for k = 1..max_k, with 2 max_k <= p - 3.
std::vector<std::uint64_t> ms_residues(Prime p, unsigned max_k) {
  std::vector<std::uint64_t> out;
  if (max_k == 0) return out;
  const std::uint64_t mod = p.value();
  const auto modern = modern_bernoulli_mod(p, 2 * max_k);
  out.reserve(max_k);
  for (unsigned k = 1; k <= max_k; ++k) {
    std::uint64_t value = mul_mod(modern[2 * k], inverse_mod(2 * k, p), mod);
    // B_k(MS) = (-1)^{k+1} B_{2k}.
    if (k % 2 == 0) value = (mod - value) % mod;
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::vector<Rational> bernoulli_table(unsigned max_m) {
  std::vector<Rational> values;
  if (max_m == 0) return values;
  // Tangent numbers T_1, T_2, ... = 1, 2, 16, 272, ... (Brent-Harvey).
  std::vector<Integer> tangent(max_m + 1);
  tangent[1] = 1;
  for (unsigned k = 2; k <= max_m; ++k) tangent[k] = (k - 1) * tangent[k - 1];
  for (unsigned k = 2; k <= max_m; ++k) {
    for (unsigned j = k; j <= max_m; ++j) {
      tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];
    }
  }
  values.reserve(max_m);
  for (unsigned m = 1; m <= max_m; ++m) {
    // B_m = 2m T_m / (2^{2m} (2^{2m} - 1))
    const Integer four_m = pow2(2ul * m);
    values.emplace_back(Integer(2ul * m) * tangent[m], four_m * (four_m - 1));
  }
  return values;
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

void BernoulliCache::ensure(unsigned max_m) {
  std::unique_lock lock(mutex_);
  if (values_.size() >= max_m) return;
  values_ = bernoulli_table(max_m);
}

unsigned BernoulliCache::max_m() const {
  std::shared_lock lock(mutex_);
  return static_cast<unsigned>(values_.size());
}

Rational BernoulliCache::get(unsigned m) {
  if (m == 0) throw DomainError("index starts at 1");
  {
    std::shared_lock lock(mutex_);
    if (m <= values_.size()) return values_[m - 1];
  }
  ensure(std::max({m, 2 * max_m(), 16u}));
  std::shared_lock lock(mutex_);
  return values_[m - 1];
}

void BernoulliCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

void BernoulliCache::save(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  out << kCacheMagic << " max_m=" << values_.size() << '\n';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out << (i + 1) << '\t' << values_[i].numerator().get_str() << '\t'
        << values_[i].denominator().get_str() << '\n';
  }
}

void BernoulliCache::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty Bernoulli cache file");
  const std::string prefix = std::string(kCacheMagic) + " max_m=";
  if (line.rfind(prefix, 0) != 0) throw DomainError("bad Bernoulli cache header");
  unsigned long declared = 0;
  try {
    std::size_t used = 0;
    declared = std::stoul(line.substr(prefix.size()), &used);
    if (used != line.size() - prefix.size()) throw std::invalid_argument("tail");
  } catch (const std::exception&) {
    throw DomainError("bad Bernoulli cache header");
  }

  std::vector<Rational> loaded;
  loaded.reserve(declared);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string index, num, den;
    if (!std::getline(fields, index, '\t') || !std::getline(fields, num, '\t') ||
        !std::getline(fields, den)) {
      throw DomainError("malformed Bernoulli cache record");
    }
    const unsigned m = static_cast<unsigned>(loaded.size() + 1);
    if (index != std::to_string(m)) {
      throw DomainError("Bernoulli cache records out of order at m=" +
                        std::to_string(m));
    }
    Rational value;
    try {
      value = Rational(Integer(num), Integer(den));
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed Bernoulli cache record");
    }
    if (value.sign() <= 0 || value.denominator() != Integer(den) ||
        value.denominator() != von_staudt_denominator(m)) {
      throw DomainError("Bernoulli cache record fails validation at m=" +
                        std::to_string(m));
    }
    loaded.push_back(std::move(value));
  }
  if (loaded.size() != declared) {
    throw DomainError("Bernoulli cache truncated");
  }

  std::unique_lock lock(mutex_);
  if (loaded.size() > values_.size()) values_ = std::move(loaded);
}

Rational bernoulli_exact(unsigned m) { return BernoulliCache::global().get(m); }

Integer num_b_over_2m(unsigned m) {
  if (m == 0) return 1;
  const Rational ratio = bernoulli_exact(m) / Rational(static_cast<long>(2 * m));
  return abs(ratio.numerator());
}

std::vector<std::uint64_t> bernoulli_residues(Prime p) {
  require_odd(p);
  return ms_residues(p, static_cast<unsigned>((p.value() - 3) / 2));
}

std::uint64_t bernoulli_mod_p(unsigned m, Prime p) {
  require_odd(p);
  if (m == 0) throw DomainError("index starts at 1");
  const std::uint64_t period = p.value() - 1;
  const std::uint64_t reduced_index = (2ull * m) % period;
  if (reduced_index == 0) throw DomainError("not a p-integer");
  const auto reduced_m = static_cast<unsigned>(reduced_index / 2);
  const std::uint64_t value = ms_residues(p, reduced_m).back();
  // Kummer's congruence holds for the signed numbers; the MS sign contributes
  // (-1)^{m + m'}.
  if ((m + reduced_m) % 2 == 1) return (p.value() - value) % p.value();
  return value;
}

bool divides_num(Prime p, unsigned m) {
  require_odd(p);
  if (m == 0) return false;
  if ((2ull * m) % (p.value() - 1) == 0) return false;
  return bernoulli_mod_p(m, p) == 0;
}

bool is_regular(Prime p) {
  const auto residues = bernoulli_residues(p);
  return std::find(residues.begin(), residues.end(), 0u) == residues.end();
}

bool divides_some_odd_mersenne(Prime p) {
  if (p.value() == 2) return false;
  for (std::uint64_t m = 1; m <= (p.value() - 1) / 2; ++m) {
    if (pow_mod(2, 2 * m - 1, p.value()) == 1) return true;
  }
  return false;
}

bool is_very_regular(Prime p) {
  require_odd(p);
  const bool odd_order = multiplicative_order(2, p) % 2 == 1;
  if (odd_order != divides_some_odd_mersenne(p)) {
    throw std::logic_error("order-parity criterion disagrees with scan at p=" +
                           std::to_string(p.value()));
  }
  return !odd_order && is_regular(p);
}

}  // namespace pscalc
