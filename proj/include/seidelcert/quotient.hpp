#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactspec.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "reduction.hpp"

namespace seidelcert {

/// Ordered partition of {0..n-1} into non-empty cells.
struct Partition {
  std::vector<std::vector<std::size_t>> cells;

  std::size_t size() const { return cells.size(); }

  void validate(std::size_t n) const {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& cell : cells) {
      if (cell.empty()) throw DomainError("partition has an empty cell");
      for (std::size_t i : cell) {
        if (i >= n) throw DomainError("partition index " + std::to_string(i) + " out of range");
        if (seen[i]) throw DomainError("partition cells overlap at index " + std::to_string(i));
        seen[i] = 1;
        ++covered;
      }
    }
    if (covered != n) throw DomainError("partition does not cover all indices");
  }
};

inline Partition singleton_partition(std::size_t n) {
  Partition p;
  for (std::size_t i = 0; i < n; ++i) p.cells.push_back({i});
  return p;
}

/// The partition of expand(s) into core singletons and one cell per block position.
inline Partition structured_partition(const StructuredGraph& s) {
  Partition p = singleton_partition(s.core.order());
  std::size_t next = s.core.order();
  for (const auto& g : s.groups) {
    if (g.copies == 0) continue;
    const std::size_t first = p.cells.size(), k = g.block.order();
    p.cells.resize(first + k);
    for (std::size_t c = 0; c < g.copies; ++c)
      for (std::size_t pos = 0; pos < k; ++pos) p.cells[first + pos].push_back(next++);
  }
  return p;
}

namespace detail {

// Row sums of block (i, j), or nullopt when they are not constant.
inline std::optional<Rational> block_row_sum(const ExactSymMatrix& m, const std::vector<std::size_t>& rows,
                                             const std::vector<std::size_t>& cols) {
  std::optional<Rational> value;
  for (std::size_t r : rows) {
    Rational sum = 0;
    for (std::size_t c : cols) sum += m(r, c);
    if (value && *value != sum) return std::nullopt;
    value = sum;
  }
  return value;
}

}  // namespace detail

inline bool is_equitable(const ExactSymMatrix& m, const Partition& pi) {
  pi.validate(m.order());
  for (const auto& a : pi.cells)
    for (const auto& b : pi.cells)
      if (!detail::block_row_sum(m, a, b)) return false;
  return true;
}

/// Q(i, j) = the constant row sum of block (i, j). Not symmetric in general.
inline RationalMatrix quotient_matrix(const ExactSymMatrix& m, const Partition& pi) {
  pi.validate(m.order());
  const std::size_t r = pi.size();
  RationalMatrix q(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto v = detail::block_row_sum(m, pi.cells[i], pi.cells[j]);
      if (!v) throw DomainError("partition is not equitable");
      q(i, j) = *v;
    }
  return q;
}

/// True iff the square-free part of char_poly(Q) divides char_poly(M).
inline bool quotient_spectrum_contained(const ExactSymMatrix& m, const Partition& pi) {
  Polynomial pq = square_free_part(characteristic_polynomial(quotient_matrix(m, pi)));
  return (char_poly(m) % pq).is_zero();
}

// ---------------------------------------------------------------------------
// Strongly regular graphs

struct SrgParams {
  long n = 0, k = 0, lambda = 0, mu = 0;
};

/// a + b·√d with d square-free; d = 1 only when b = 0.
struct QuadraticSurd {
  Rational a = 0, b = 0;
  Integer d = 1;

  bool is_rational() const { return b == 0; }
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Normal form of a + b·√radicand for radicand ≥ 0.
inline QuadraticSurd make_surd(Rational a, Rational b, Integer radicand) {
  if (radicand < 0) throw DomainError("negative radicand");
  Integer f = 1;
  for (Integer p = 2; p * p <= radicand; ++p)
    while (radicand % (p * p) == 0) {
      radicand /= p * p;
      f *= p;
    }
  b *= Rational(f);
  if (radicand == 0) b = 0;
  if (radicand == 1 || b == 0) return {a + (radicand == 1 ? b : Rational(0)), 0, 1};
  return {a, b, radicand};
}

inline std::string to_string(const QuadraticSurd& s) {
  if (s.is_rational()) return s.a.get_str();
  std::string root = "sqrt(" + s.d.get_str() + ")";
  std::string tail;
  if (s.b == 1) tail = root;
  else if (s.b == -1) tail = "-" + root;
  else tail = s.b.get_str() + "*" + root;
  if (s.a == 0) return tail;
  return s.a.get_str() + (s.b > 0 ? "+" : "") + tail;
}

struct SrgEigenData {
  QuadraticSurd theta, tau, m_theta, m_tau;
  bool feasible = false;
};

/// θ > τ are the roots of x² - (λ-μ)x - (k-μ); m_θ = -((n-1)τ + k)/(θ - τ).
inline SrgEigenData srg_eigen_data(const SrgParams& p) {
  if (p.n <= 0 || p.k < 0 || p.lambda < 0 || p.mu < 0) throw DomainError("SRG parameters must be non-negative");
  if (p.k >= p.n) throw DomainError("SRG needs n > k");
  if (p.k <= p.mu) throw DomainError("SRG needs k > mu");
  const Integer n1(p.n - 1), k(p.k), lm(p.lambda - p.mu);
  const Integer disc = lm * lm + 4 * (k - p.mu);
  const Rational half(1, 2);
  SrgEigenData out;
  out.theta = make_surd(Rational(lm) * half, half, disc);
  out.tau = make_surd(Rational(lm) * half, -half, disc);
  // With θ - τ = √D and τ = (λ-μ)/2 - √D/2:
  // m_θ = (n-1)/2 - ((n-1)(λ-μ) + 2k) / (2√D), and 1/√D = √D/D.
  const Rational skew = Rational(n1 * lm + 2 * k) / Rational(2 * disc);
  out.m_theta = make_surd(Rational(n1) * half, -skew, disc);
  out.m_tau = make_surd(Rational(n1) * half, skew, disc);
  auto nonneg_integer = [](const QuadraticSurd& s) { return s.is_rational() && s.a >= 0 && s.a.get_den() == 1; };
  out.feasible = nonneg_integer(out.m_theta) && nonneg_integer(out.m_tau);
  return out;
}

}  // namespace seidelcert
