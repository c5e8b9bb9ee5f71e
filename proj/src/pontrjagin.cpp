#include "pscalc/pontrjagin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pscalc {

Monomial::Monomial(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  if (std::find(indices_.begin(), indices_.end(), 0u) != indices_.end()) {
    throw DomainError("Pontrjagin indices start at 1");
  }
  std::sort(indices_.begin(), indices_.end());
}

namespace {

unsigned parse_unsigned(const std::string& text, const std::string& context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                      [](unsigned char c) { return std::isdigit(c) != 0; }) ||
      text.size() > 6) {
    throw DomainError("bad Pontrjagin monomial '" + context + "'");
  }
  return static_cast<unsigned>(std::stoul(text));
}

}  // namespace

Monomial Monomial::parse(const std::string& text) {
  std::vector<unsigned> indices;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t star = text.find('*', start);
    const std::string factor =
        text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (factor.size() < 2 || factor[0] != 'p') {
      throw DomainError("bad Pontrjagin monomial '" + text + "'");
    }
    const std::size_t caret = factor.find('^');
    const unsigned index = parse_unsigned(factor.substr(1, caret - 1), text);
    const unsigned power =
        caret == std::string::npos ? 1 : parse_unsigned(factor.substr(caret + 1), text);
    if (index == 0 || power == 0) {
      throw DomainError("bad Pontrjagin monomial '" + text + "'");
    }
    indices.insert(indices.end(), power, index);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(indices));
}

unsigned Monomial::weight() const {
  return std::accumulate(indices_.begin(), indices_.end(), 0u);
}

std::string Monomial::to_string() const {
  if (indices_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < indices_.size();) {
    std::size_t j = i;
    while (j < indices_.size() && indices_[j] == indices_[i]) ++j;
    if (!out.empty()) out += '*';
    out += "p" + std::to_string(indices_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<unsigned> merged;
  merged.reserve(a.indices_.size() + b.indices_.size());
  std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(),
             b.indices_.end(), std::back_inserter(merged));
  Monomial out;
  out.indices_ = std::move(merged);
  return out;
}

void PontPolynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (monomial.weight() != weight_) {
    throw DomainError("monomial " + monomial.to_string() + " has degree " +
                      std::to_string(4 * monomial.weight()) + ", expected " +
                      std::to_string(degree()));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational PontPolynomial::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational() : it->second;
}

Rational PontPolynomial::evaluate(std::span<const Rational> values) const {
  Rational total;
  for (const auto& [monomial, coefficient] : terms_) {
    Rational term = coefficient;
    for (unsigned index : monomial.indices()) {
      if (index > values.size()) {
        term = Rational();
        break;
      }
      term *= values[index - 1];
    }
    total += term;
  }
  return total;
}

std::string PontPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [monomial, coefficient] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coefficient.to_string() + ")*" + monomial.to_string();
  }
  return out;
}

}  // namespace pscalc
