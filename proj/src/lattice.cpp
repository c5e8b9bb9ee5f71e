#include "pscalc/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace pscalc {

IntegralLattice::IntegralLattice(std::vector<IntVector> gram) : gram_(std::move(gram)) {
  if (gram_.empty()) throw DomainError("lattice rank must be positive");
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size()) throw DomainError("Gram matrix is not square");
  }
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw DomainError("Gram matrix is not symmetric");
    }
  }
}

IntegralLattice IntegralLattice::e8_negative() {
  // Dynkin diagram T(2,3,5): chain 0-1-2-3-4-5-6 with node 7 attached to 4.
  constexpr std::size_t kRank = 8;
  std::vector<IntVector> gram(kRank, IntVector(kRank, 0));
  auto link = [&](std::size_t a, std::size_t b) { gram[a][b] = gram[b][a] = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  for (std::size_t i = 0; i < kRank; ++i) gram[i][i] = -2;
  return IntegralLattice(std::move(gram));
}

IntegralLattice IntegralLattice::hyperbolic() {
  return IntegralLattice({{0, 1}, {1, 0}});
}

IntegralLattice IntegralLattice::k3_form() {
  const std::vector<IntegralLattice> summands{e8_negative(), e8_negative(), hyperbolic(),
                                              hyperbolic(), hyperbolic()};
  return direct_sum(summands);
}

IntegralLattice IntegralLattice::direct_sum(std::span<const IntegralLattice> summands) {
  std::size_t total = 0;
  for (const auto& s : summands) total += s.rank();
  std::vector<IntVector> gram(total, IntVector(total, 0));
  std::size_t offset = 0;
  for (const auto& s : summands) {
    for (std::size_t i = 0; i < s.rank(); ++i) {
      for (std::size_t j = 0; j < s.rank(); ++j) gram[offset + i][offset + j] = s.entry(i, j);
    }
    offset += s.rank();
  }
  return IntegralLattice(std::move(gram));
}

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (gram_[i][i] % 2 != 0) return false;
  }
  return true;
}

Integer evaluate(const IntegralLattice& lattice, std::span<const std::int64_t> v) {
  if (v.size() != lattice.rank()) {
    throw DomainError("vector length " + std::to_string(v.size()) +
                      " does not match rank " + std::to_string(lattice.rank()));
  }
  Integer total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      row += Integer(static_cast<long>(lattice.entry(i, j))) * static_cast<long>(v[j]);
    }
    total += row * static_cast<long>(v[i]);
  }
  return total;
}

namespace {

struct Diagonalization {
  std::vector<Rational> pivots;
  bool degenerate = false;
};

Diagonalization diagonalize(const IntegralLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(lattice.entry(i, j));
  }
  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  Diagonalization out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i) {
      if (!a[i][i].is_zero()) pivot = i;
    }
    if (pivot == n) {
      // Zero diagonal: adding basis vector j to i makes a[i][i] = 2 a[i][j].
      for (std::size_t i = k; i < n && pivot == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          pivot = i;
          break;
        }
      }
    }
    if (pivot == n) {
      out.degenerate = true;
      return out;
    }
    swap_index(k, pivot);
    const Rational d = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational factor = a[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = Rational();
    out.pivots.push_back(d);
  }
  return out;
}

}  // namespace

Integer determinant(const IntegralLattice& lattice) {
  const auto diag = diagonalize(lattice);
  if (diag.degenerate) return 0;
  Rational product = 1;
  for (const auto& d : diag.pivots) product *= d;
  if (!product.is_integer()) throw std::logic_error("non-integral determinant");
  return product.numerator();
}

int signature(const IntegralLattice& lattice) {
  const auto diag = diagonalize(lattice);
  if (diag.degenerate) throw DomainError("degenerate form has no signature");
  int total = 0;
  for (const auto& d : diag.pivots) total += d.sign();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> hyperbolic_summands(
    const IntegralLattice& lattice) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = lattice.rank();
  auto isolated = [&](std::size_t i, std::size_t partner) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c != partner && lattice.entry(i, c) != 0) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lattice.entry(i, j) == 1 && lattice.entry(i, i) == 0 &&
          lattice.entry(j, j) == 0 && isolated(i, j) && isolated(j, i)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

namespace {

bool satisfies(const IntegralLattice& lattice, const IntVector& v, std::int64_t target,
               Parity parity, std::int64_t bound) {
  for (auto x : v) {
    if (std::llabs(x) > bound) return false;
    if (parity == Parity::even_vector && x % 2 != 0) return false;
  }
  return evaluate(lattice, v) == static_cast<long>(target);
}

std::optional<IntVector> checked(const IntegralLattice& lattice, std::optional<IntVector> v,
                                 std::int64_t target, Parity parity, std::int64_t bound) {
  if (v && !satisfies(lattice, *v, target, parity, bound)) {
    throw std::logic_error("representation failed re-verification");
  }
  return v;
}

std::optional<IntVector> hyperbolic_fast_path(const IntegralLattice& lattice,
                                              std::int64_t target, Parity parity,
                                              std::int64_t bound) {
  const auto summands = hyperbolic_summands(lattice);
  if (summands.empty()) return std::nullopt;
  const auto [e, f] = summands.front();
  IntVector v(lattice.rank(), 0);
  if (parity == Parity::any) {
    if (target % 2 != 0 || bound < 1 || std::llabs(target / 2) > bound) return std::nullopt;
    v[e] = 1;
    v[f] = target / 2;
  } else {
    // (2a, 2b) evaluates to 8ab, so the second coordinate target/4 must be even.
    if (target % 8 != 0 || bound < 2 || std::llabs(target / 4) > bound) return std::nullopt;
    v[e] = 2;
    v[f] = target / 4;
  }
  return v;
}

__extension__ using Wide = __int128;

std::optional<IntVector> box_search(const IntegralLattice& lattice, std::int64_t target,
                                    Parity parity, std::int64_t bound,
                                    std::uint64_t max_search) {
  const std::int64_t step = parity == Parity::even_vector ? 2 : 1;
  const std::int64_t reach = bound - bound % step;
  const auto values_per_coordinate = static_cast<double>(2 * (reach / step) + 1);
  if (std::pow(values_per_coordinate, static_cast<double>(lattice.rank())) >
      static_cast<double>(max_search)) {
    throw DomainError("search box too large for rank " + std::to_string(lattice.rank()) +
                      " and bound " + std::to_string(bound));
  }
  const std::size_t n = lattice.rank();
  double largest_entry = 0;
  for (const auto& row : lattice.gram()) {
    for (auto x : row) largest_entry = std::max(largest_entry, std::fabs(static_cast<double>(x)));
  }
  const double r = static_cast<double>(reach), dim = static_cast<double>(n);
  const bool narrow = largest_entry * r * r * dim * dim < 1e36;
  auto hits = [&](const IntVector& v) {
    if (!narrow) return evaluate(lattice, v) == static_cast<long>(target);
    Wide total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Wide row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<Wide>(lattice.entry(i, j)) * v[j];
      total += row * v[i];
    }
    return total == target;
  };
  for (std::int64_t radius = 0; radius <= reach; radius += step) {
    IntVector v(n, -radius);
    while (true) {
      std::int64_t norm = 0;
      for (auto x : v) norm = std::max(norm, x < 0 ? -x : x);
      if (norm == radius && hits(v)) return v;
      // Next vector of [-radius, radius]^n (step-spaced) in lexicographic order.
      std::size_t i = n;
      while (i > 0 && v[i - 1] == radius) {
        v[i - 1] = -radius;
        --i;
      }
      if (i == 0) break;
      v[i - 1] += step;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntVector> represent(const IntegralLattice& lattice, std::int64_t target,
                                   Parity parity, std::int64_t bound,
                                   std::uint64_t max_search) {
  if (bound < 0) throw DomainError("bound must be nonnegative");
  if (lattice.is_even() && target % 2 != 0) return std::nullopt;
  if (parity == Parity::even_vector) {
    // q(2w) = 4 q(w), and q(w) is even on an even lattice.
    const std::int64_t modulus = lattice.is_even() ? 8 : 4;
    if (target % modulus != 0) return std::nullopt;
  }
  if (target == 0) return IntVector(lattice.rank(), 0);
  if (auto v = hyperbolic_fast_path(lattice, target, parity, bound)) {
    return checked(lattice, std::move(v), target, parity, bound);
  }
  return checked(lattice, box_search(lattice, target, parity, bound, max_search), target,
                 parity, bound);
}

}  // namespace pscalc
