#include "pscalc/series.hpp"

#include <map>

#include "pscalc/bernoulli.hpp"

namespace pscalc {

TruncatedSeries::TruncatedSeries(unsigned order)
    : order_(order), coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const Rational& value) {
  TruncatedSeries s(order);
  s[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (order_ != other.order_) {
    throw DomainError("series truncation orders differ: " + std::to_string(order_) +
                      " vs " + std::to_string(other.order_));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (unsigned k = 0; k <= order_; ++k) coefficients_[k] += other.coefficients_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (unsigned k = 0; k <= order_; ++k) coefficients_[k] -= other.coefficients_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_order(b);
  TruncatedSeries out(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const { return scale(Rational(-1)); }

TruncatedSeries TruncatedSeries::scale(const Rational& factor) const {
  TruncatedSeries out(*this);
  for (auto& c : out.coefficients_) c *= factor;
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coefficients_[0].is_zero()) {
    throw DomainError("reciprocal of a series with zero constant term");
  }
  const Rational inverse_lead = coefficients_[0].reciprocal();
  TruncatedSeries out(order_);
  out[0] = inverse_lead;
  for (unsigned n = 1; n <= order_; ++n) {
    Rational acc;
    for (unsigned i = 1; i <= n; ++i) {
      if (!coefficients_[i].is_zero()) acc += coefficients_[i] * out[n - i];
    }
    out[n] = -acc * inverse_lead;
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute_scaled(const Rational& c) const {
  TruncatedSeries out(*this);
  Rational power = 1;
  for (unsigned k = 0; k <= order_; ++k) {
    out[k] *= power;
    power *= c;
  }
  return out;
}

TruncatedSeries TruncatedSeries::divide_by_x() const {
  if (!coefficients_[0].is_zero()) {
    throw DomainError("division by x of a series with nonzero constant term");
  }
  if (order_ == 0) throw DomainError("division by x needs order >= 1");
  return TruncatedSeries(order_ - 1, std::vector<Rational>(coefficients_.begin() + 1,
                                                           coefficients_.end()));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order_ == 0) return TruncatedSeries(0);
  TruncatedSeries out(order_ - 1);
  for (unsigned k = 1; k <= order_; ++k) {
    out[k - 1] = coefficients_[k] * Rational(static_cast<long>(k));
  }
  return out;
}

TruncatedSeries TruncatedSeries::integral() const {
  TruncatedSeries out(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) {
    out[k + 1] = coefficients_[k] / Rational(static_cast<long>(k + 1));
  }
  return out;
}

TruncatedSeries TruncatedSeries::log() const {
  if (coefficients_[0] != Rational(1)) {
    throw DomainError("log of a series needs constant term 1");
  }
  if (order_ == 0) return TruncatedSeries(0);
  // log f = integral of f'/f; f'/f is only needed through order N-1.
  return (derivative() * truncate(order_ - 1).reciprocal()).integral();
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const {
  return TruncatedSeries(order, coefficients_);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<Rational> inverse_factorials(unsigned n) {
  std::vector<Rational> out(n + 1);
  Integer factorial = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    out[k] = Rational(Integer(1), factorial);
  }
  return out;
}

}  // namespace

TruncatedSeries elementary(Elementary kind, unsigned order) {
  switch (kind) {
    case Elementary::exp:
      return TruncatedSeries(order, inverse_factorials(order));
    case Elementary::sinh:
    case Elementary::cosh: {
      auto coefficients = inverse_factorials(order);
      const unsigned parity = kind == Elementary::sinh ? 1 : 0;
      for (unsigned k = 0; k <= order; ++k) {
        if (k % 2 != parity) coefficients[k] = Rational();
      }
      return TruncatedSeries(order, std::move(coefficients));
    }
    case Elementary::x_over_sinh: {
      // sinh(x)/x = sum x^{2k} / (2k+1)!
      const auto inverse = inverse_factorials(order + 1);
      TruncatedSeries sinh_over_x(order);
      for (unsigned k = 0; k <= order; k += 2) sinh_over_x[k] = inverse[k + 1];
      return sinh_over_x.reciprocal();
    }
    case Elementary::x_over_tanh:
      return elementary(Elementary::cosh, order) *
             elementary(Elementary::x_over_sinh, order);
    case Elementary::half_x_over_sinh_half:
      return elementary(Elementary::x_over_sinh, order)
          .substitute_scaled(Rational(Integer(1), Integer(2)));
  }
  throw DomainError("unknown elementary series");
}

TruncatedSeries x_over_sinh_from_bernoulli(unsigned order) {
  TruncatedSeries out(order);
  out[0] = 1;
  Integer factorial = 1;  // (2m)!
  for (unsigned m = 1; 2 * m <= order; ++m) {
    factorial *= (2 * m - 1);
    factorial *= (2 * m);
    Rational term = Rational(Integer(pow2(2ul * m) - 2)) * bernoulli_exact(m) /
                    Rational(factorial);
    out[2 * m] = m % 2 == 0 ? term : -term;
  }
  return out;
}

namespace {

// Inhomogeneous polynomial in the p_i, used while building the sequences.
using Polynomial = std::map<Monomial, Rational>;

void accumulate(Polynomial& into, const Monomial& monomial, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned max_weight) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma.weight() + mb.weight() > max_weight) continue;
      accumulate(out, ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial scaled(const Polynomial& a, const Rational& factor) {
  Polynomial out;
  for (const auto& [m, c] : a) accumulate(out, m, c * factor);
  return out;
}

void add_into(Polynomial& into, const Polynomial& a) {
  for (const auto& [m, c] : a) accumulate(into, m, c);
}

}  // namespace

std::vector<PontPolynomial> genus_polynomials(Genus kind, unsigned max_j,
                                              unsigned roots) {
  if (max_j == 0) throw DomainError("max_j must be positive");
  if (roots == 0) roots = max_j;

  // Characteristic series Q in x; it is even, and log Q(x) = sum c_k x^{2k}.
  const unsigned order = 2 * max_j;
  const TruncatedSeries characteristic =
      kind == Genus::ahat ? elementary(Elementary::half_x_over_sinh_half, order)
                          : elementary(Elementary::x_over_tanh, order);
  const TruncatedSeries log_q = characteristic.log();

  // Power sums s_k of the squared roots, in terms of e_i = p_i (Newton).
  auto elementary_symmetric = [&](unsigned i) {
    Polynomial e;
    if (i <= roots) e.emplace(Monomial({i}), Rational(1));
    return e;
  };
  std::vector<Polynomial> power_sums(max_j + 1);
  for (unsigned k = 1; k <= max_j; ++k) {
    const long signed_k = k % 2 == 1 ? long(k) : -long(k);
    Polynomial s = scaled(elementary_symmetric(k), Rational(signed_k));
    for (unsigned i = 1; i < k; ++i) {
      const Rational sign(i % 2 == 1 ? 1 : -1);
      add_into(s, scaled(multiply(elementary_symmetric(i), power_sums[k - i], max_j), sign));
    }
    power_sums[k] = std::move(s);
  }

  Polynomial exponent;
  for (unsigned k = 1; k <= max_j; ++k) {
    add_into(exponent, scaled(power_sums[k], log_q[2 * k]));
  }

  // exp(exponent): the exponent has no weight-0 part, so max_j terms suffice.
  Polynomial total;
  accumulate(total, Monomial(), Rational(1));
  Polynomial power;
  accumulate(power, Monomial(), Rational(1));
  Integer factorial = 1;
  for (unsigned n = 1; n <= max_j; ++n) {
    power = multiply(power, exponent, max_j);
    factorial *= n;
    add_into(total, scaled(power, Rational(Integer(1), factorial)));
  }

  std::vector<PontPolynomial> out;
  out.reserve(max_j);
  for (unsigned j = 1; j <= max_j; ++j) out.emplace_back(j);
  for (const auto& [monomial, c] : total) {
    const unsigned w = monomial.weight();
    if (w >= 1 && w <= max_j) out[w - 1].add_term(monomial, c);
  }
  return out;
}

}  // namespace pscalc
