#include "pscalc/exact.hpp"

#include <array>
#include <cstdlib>

namespace pscalc {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)),
                    Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % modulus);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw DomainError(std::to_string(value) + " is not prime");
  }
}

std::vector<Prime> primes_up_to(std::uint64_t bound) {
  std::vector<Prime> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(Prime(i, Prime::Unchecked{}));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t reduce_mod(std::int64_t a, Prime p) {
  const auto m = static_cast<std::int64_t>(p.value());
  const std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t reduce_mod(const Integer& a, Prime p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p.value());
}

std::uint64_t inverse_mod(std::uint64_t a, Prime p) {
  a %= p.value();
  if (a == 0) throw DomainError("not a unit");
  return pow_mod(a, p.value() - 2, p.value());
}

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    factors.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

}  // namespace

std::uint64_t multiplicative_order(std::int64_t a, Prime p) {
  const std::uint64_t unit = reduce_mod(a, p);
  if (unit == 0) throw DomainError("not a unit");
  std::uint64_t order = p.value() - 1;
  for (std::uint64_t q : distinct_prime_factors(order)) {
    while (order % q == 0 && pow_mod(unit, order / q, p.value()) == 1) {
      order /= q;
    }
  }
  return order;
}

unsigned p_adic_valuation(const Integer& x, Prime p) {
  if (x == 0) throw DomainError("valuation of zero");
  mpz_class rest;
  const mpz_class base(static_cast<unsigned long>(p.value()));
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

Integer gcd_many(std::span<const Integer> values) {
  Integer result = 0;
  for (const Integer& v : values) {
    mpz_gcd(result.get_mpz_t(), result.get_mpz_t(), v.get_mpz_t());
    if (result == 1) break;
  }
  return result;
}

Integer pow2(unsigned long k) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, k);
  return result;
}

}  // namespace pscalc
