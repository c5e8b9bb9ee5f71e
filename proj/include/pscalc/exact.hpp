#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pscalc {

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// The canonical form is established by every constructor, so two Rationals
/// compare equal exactly when their numerators and denominators do.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "a" or "a/b".
  static Rational parse(const std::string& text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }

  /// "n" when the denominator is 1, otherwise "n/d".
  std::string to_string() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// An odd or even prime that fits in a machine word.
///
/// Construction verifies primality with a Miller-Rabin test whose witness set
/// is deterministic for every 64-bit input.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  operator std::uint64_t() const { return value_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  struct Unchecked {};
  Prime(std::uint64_t value, Unchecked) : value_(value) {}
  friend std::vector<Prime> primes_up_to(std::uint64_t bound);

  std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

/// Primes <= bound, ascending. Empty when bound < 2.
std::vector<Prime> primes_up_to(std::uint64_t bound);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);
/// Inverse of a modulo a prime; a must be a unit.
std::uint64_t inverse_mod(std::uint64_t a, Prime p);
/// a reduced into [0, p).
std::uint64_t reduce_mod(std::int64_t a, Prime p);
std::uint64_t reduce_mod(const Integer& a, Prime p);

/// Least k >= 1 with a^k = 1 (mod p). Throws DomainError if p divides a.
std::uint64_t multiplicative_order(std::int64_t a, Prime p);

/// Largest k with p^k | x. Throws DomainError for x = 0.
unsigned p_adic_valuation(const Integer& x, Prime p);

/// gcd of the absolute values; 0 for an empty list.
Integer gcd_many(std::span<const Integer> values);

/// 2^k as an Integer.
Integer pow2(unsigned long k);

}  // namespace pscalc
