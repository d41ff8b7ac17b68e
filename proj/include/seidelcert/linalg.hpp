#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace seidelcert {

/// Largest order accepted by characteristic_polynomial.
inline constexpr std::size_t kCharPolyOrderLimit = 64;

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
inline std::size_t rank(IntegerMatrix a) {
  const std::size_t n = a.rows(), m = a.cols();
  Integer prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != r)
      for (std::size_t j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        tmp = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline std::size_t rank(const RationalMatrix& a) { return rank(clear_denominators(a).first); }

/// Determinant by Bareiss elimination.
inline Integer determinant(IntegerMatrix a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1, tmp;
  int flips = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      ++flips;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  Integer d = a(n - 1, n - 1);
  return flips % 2 ? Integer(-d) : d;
}

inline Rational determinant(const RationalMatrix& a) {
  auto [z, d] = clear_denominators(a);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), a.rows());
  Rational r(determinant(std::move(z)), scale);
  r.canonicalize();
  return r;
}

/// Outcome of the exact positive-semidefiniteness test.
struct PsdCertificate {
  bool psd = false;
  /// Number of positive pivots taken; equals the rank when psd.
  std::size_t positive_pivots = 0;
  /// Pivot order used by the elimination.
  std::vector<std::size_t> pivots;
};

/// Symmetric fraction-free elimination with positive diagonal pivots.
/// After k pivots each remaining entry is det(P_k) times the Schur complement,
/// with det(P_k) > 0, so signs are preserved.
inline PsdCertificate psd_certificate(IntegerMatrix a) {
  if (!a.is_symmetric()) throw DomainError("PSD test needs a symmetric matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  PsdCertificate cert;
  Integer prev = 1, tmp;
  while (!active.empty()) {
    std::size_t pick = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      int s = sign(a(active[k], active[k]));
      if (s < 0) return cert;
      if (s > 0 && pick == active.size()) pick = k;
    }
    if (pick == active.size()) {
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (a(i, j) != 0) return cert;
      break;
    }
    const std::size_t p = active[pick];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
    for (std::size_t i : active)
      for (std::size_t j : active) {
        if (j < i) continue;
        tmp = a(p, p) * a(i, j) - a(i, p) * a(p, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        a(j, i) = a(i, j);
      }
    prev = a(p, p);
    cert.pivots.push_back(p);
    ++cert.positive_pivots;
  }
  cert.psd = true;
  return cert;
}

inline PsdCertificate psd_certificate(const RationalMatrix& a) {
  return psd_certificate(clear_denominators(a).first);
}

/// det(xI - A) by the Faddeev-LeVerrier recurrence over the integers.
inline Polynomial characteristic_polynomial(const IntegerMatrix& a) {
  if (!a.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > kCharPolyOrderLimit)
    throw CapacityError("characteristic polynomial limited to order " + std::to_string(kCharPolyOrderLimit));
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntegerMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) trace += a(i, j) * m(j, i);
    Integer q = -trace;
    mpz_divexact_ui(c[n - k].get_mpz_t(), q.get_mpz_t(), k);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (auto& x : c) coeffs.emplace_back(x);
  return Polynomial(std::move(coeffs));
}

/// For A = B / d: det(xI - A) = d^{-n} det(dx I - B).
inline Polynomial characteristic_polynomial(const RationalMatrix& a) {
  auto [b, d] = clear_denominators(a);
  Polynomial pb = characteristic_polynomial(b);
  if (d == 1) return pb;
  const std::size_t n = a.rows();
  std::vector<Rational> coeffs(n + 1);
  Integer power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    coeffs[k] = pb.coefficient(k) / Rational(power);
    power *= d;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace seidelcert
