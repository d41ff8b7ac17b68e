#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace seidelcert {

/// det(xI - M); monic of degree order(M).
using CharPoly = Polynomial;

inline CharPoly char_poly(const ExactSymMatrix& m) { return characteristic_polynomial(m.matrix()); }

enum class Relation { Below, Equal, Above };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::Below: return "below";
    case Relation::Equal: return "equal";
    case Relation::Above: return "above";
  }
  return "?";
}

inline Relation flip(Relation r) {
  return r == Relation::Below ? Relation::Above : r == Relation::Above ? Relation::Below : Relation::Equal;
}

inline Relation compare(const Rational& a, const Rational& b) {
  return a < b ? Relation::Below : a == b ? Relation::Equal : Relation::Above;
}

struct SpectralVerdict {
  Relation relation = Relation::Above;
  std::string witness;

  bool operator==(Relation r) const { return relation == r; }
};

/// Least root of a real-rooted polynomial against q, by the coefficient sign
/// pattern of p(x + q). Degree-0 polynomials have no roots and compare Above.
inline Relation min_root_relation(const Polynomial& p, const Rational& q) {
  if (p.degree() <= 0) return Relation::Above;
  Polynomial shifted = p.taylor_shift(q);
  if (!real_rooted_all_nonnegative(shifted)) return Relation::Below;
  return shifted.coefficient(0) == 0 ? Relation::Equal : Relation::Above;
}

/// Same comparison by Sturm counting; does not assume real-rootedness.
inline Relation min_root_relation_sturm(const Polynomial& p, const Rational& q) {
  if (p.degree() <= 0) return Relation::Above;
  std::size_t at_most = count_roots(p, std::nullopt, q);
  std::size_t at = root_multiplicity(p, q);
  if (at_most > at) return Relation::Below;
  return at > 0 ? Relation::Equal : Relation::Above;
}

/// λ_min(M) against q from a fraction-free PSD certificate of M - qI.
inline SpectralVerdict lambda_min_cmp_psd(const ExactSymMatrix& m, const Rational& q) {
  auto cert = psd_certificate(m.matrix().shifted(-q));
  SpectralVerdict v;
  v.witness = "psd certificate: " + std::to_string(cert.positive_pivots) + " positive pivots of " +
              std::to_string(m.order());
  if (!cert.psd)
    v.relation = Relation::Below;
  else
    v.relation = cert.positive_pivots < m.order() ? Relation::Equal : Relation::Above;
  return v;
}

/// Exact comparison of the smallest eigenvalue of M with q. Uses the sign
/// pattern of the characteristic polynomial up to order 64, the PSD
/// certificate beyond.
inline SpectralVerdict lambda_min_cmp(const ExactSymMatrix& m, const Rational& q) {
  if (m.order() > kCharPolyOrderLimit) return lambda_min_cmp_psd(m, q);
  SpectralVerdict v;
  v.relation = min_root_relation(char_poly(m), q);
  v.witness = "coefficient signs of det(xI - (M - qI))";
  return v;
}

inline SpectralVerdict lambda_min_cmp_sturm(const ExactSymMatrix& m, const Rational& q) {
  CharPoly p = char_poly(m);
  SpectralVerdict v;
  v.relation = min_root_relation_sturm(p, q);
  v.witness = "sturm: " + std::to_string(count_roots(p, std::nullopt, q)) + " eigenvalues <= q";
  return v;
}

/// Multiplicity of q as an eigenvalue of M.
inline std::size_t eigen_multiplicity(const ExactSymMatrix& m, const Rational& q) {
  if (m.order() == 0) return 0;
  if (m.order() > kCharPolyOrderLimit) return m.order() - rank(m.matrix().shifted(-q));
  return root_multiplicity(char_poly(m), q);
}

inline IntegerMatrix adjacency_matrix(const Graph& g) {
  IntegerMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

/// Spectral radius of A(g) against q, decided per connected component through
/// λ_min(-A) against -q.
inline SpectralVerdict spectral_radius_cmp(const Graph& g, const Rational& q) {
  SpectralVerdict v;
  if (g.order() == 0) {
    v.relation = compare(0, q);
    v.witness = "empty graph";
    return v;
  }
  v.relation = Relation::Below;
  for (const auto& comp : connected_components(g)) {
    IntegerMatrix a = adjacency_matrix(induced_subgraph(g, comp));
    ExactSymMatrix neg(to_rational(a * Integer(-1)));
    Relation r = flip(lambda_min_cmp(neg, -q).relation);
    if (r == Relation::Above) {
      v.relation = r;
      v.witness = "component containing vertex " + std::to_string(comp.front());
      return v;
    }
    if (r == Relation::Equal) v.relation = r;
  }
  return v;
}

namespace detail {

// Counts #eigenvalues > y and < y (with multiplicity) at a point y that is not a root.
inline std::pair<std::size_t, std::size_t> counts_around(const Polynomial& p, const Rational& y) {
  return {count_roots(p, y, std::nullopt), count_roots(p, std::nullopt, y)};
}

}  // namespace detail

/// Cauchy interlacing of the spectrum of C (order m) inside that of B (order n):
/// η_{n-m+i}(B) <= η_i(C) <= η_i(B), eigenvalues in decreasing order.
/// Decided exactly: both counting functions #{> y} and #{< y} of C must stay
/// below those of B at a point in every gap between consecutive distinct roots.
inline bool interlace_check(const ExactSymMatrix& b, const ExactSymMatrix& c) {
  if (c.order() > b.order()) throw DomainError("interlacing: C is larger than B");
  if (c.order() == 0) return true;
  CharPoly pb = char_poly(b), pc = char_poly(c);
  std::vector<Rational> probes;
  auto iv = isolate_real_roots(square_free_part(pb * pc));
  if (iv.empty()) return true;
  probes.push_back(iv.front().first);
  for (const auto& [lo, hi] : iv) probes.push_back(hi);
  for (const Rational& y : probes) {
    auto [gb, lb] = detail::counts_around(pb, y);
    auto [gc, lc] = detail::counts_around(pc, y);
    if (gc > gb || lc > lb) return false;
  }
  return true;
}

/// As above, after checking that C is the principal submatrix of B on `idx`.
inline bool interlace_check(const ExactSymMatrix& b, const ExactSymMatrix& c, std::span<const std::size_t> idx) {
  if (idx.size() != c.order()) throw DomainError("interlacing: index set does not match the order of C");
  for (std::size_t i : idx)
    if (i >= b.order()) throw DomainError("interlacing: index out of range");
  if (!(b.principal(idx) == c)) throw DomainError("interlacing: C is not the principal submatrix of B on the index set");
  return interlace_check(b, c);
}

// ---------------------------------------------------------------------------
// Smith's classification of connected graphs by spectral radius against 2.

enum class SmithKind { RhoBelow2, RhoEqual2, RhoAbove2 };

struct SmithClass {
  SmithKind kind;
  std::optional<FamilySpec> family;  // set for RhoEqual2
};

inline std::string to_string(const SmithClass& s) {
  switch (s.kind) {
    case SmithKind::RhoBelow2: return "rho < 2";
    case SmithKind::RhoAbove2: return "rho > 2";
    case SmithKind::RhoEqual2: break;
  }
  std::string out = "rho = 2: ";
  out += family_token(s.family->family);
  out += "(" + std::to_string(s.family->params.front()) + ")";
  return out;
}

namespace detail {

inline std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

inline SmithClass smith_classify(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DomainError("Smith classification needs a connected graph");
  Relation r = spectral_radius_cmp(g, 2).relation;
  if (r == Relation::Below) return {SmithKind::RhoBelow2, std::nullopt};
  if (r == Relation::Above) return {SmithKind::RhoAbove2, std::nullopt};
  const long n = static_cast<long>(g.order());
  std::vector<FamilySpec> candidates;
  if (n >= 3) candidates.push_back({Family::ATilde, {n - 1}});
  if (n >= 5) candidates.push_back({Family::DTilde, {n - 1}});
  if (n >= 7 && n <= 9) candidates.push_back({Family::ETilde, {n - 1}});
  const auto fingerprint = detail::degree_multiset(g);
  for (const auto& spec : candidates) {
    Graph h = build_family(spec);
    if (detail::degree_multiset(h) == fingerprint && are_isomorphic(g, h)) return {SmithKind::RhoEqual2, spec};
  }
  throw std::logic_error("graph with spectral radius 2 outside Smith's list");
}

/// Positive integer eigenvector for eigenvalue 2 of A, in the vertex layout of build_family.
inline std::vector<long> smith_eigenvector(const FamilySpec& spec) {
  validate(spec);
  const long n = spec.params.empty() ? 0 : spec.params.front();
  switch (spec.family) {
    case Family::ATilde: return std::vector<long>(static_cast<std::size_t>(n + 1), 1);
    case Family::DTilde: {
      std::vector<long> v(static_cast<std::size_t>(n + 1), 2);
      v[0] = v[static_cast<std::size_t>(n - 2)] = 1;
      v[static_cast<std::size_t>(n - 1)] = v[static_cast<std::size_t>(n)] = 1;
      return v;
    }
    case Family::ETilde:
      if (n == 6) return {1, 2, 3, 2, 1, 2, 1};
      if (n == 7) return {1, 2, 3, 4, 3, 2, 1, 2};
      return {2, 4, 6, 5, 4, 3, 2, 1, 3};
    default: throw ParameterError("no eigenvector labelling for this family");
  }
}

/// ρ(g) > 2 while every vertex-deleted subgraph has ρ <= 2.
inline bool is_minimal_rho_above2(const Graph& g) {
  if (spectral_radius_cmp(g, 2).relation != Relation::Above) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (spectral_radius_cmp(delete_vertex(g, v), 2).relation == Relation::Above) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exact comparison of the least real roots of two polynomials.

namespace detail {

class LeastRoot {
 public:
  explicit LeastRoot(const Polynomial& p) : sf_(square_free_part(p)) {
    auto iv = isolate_real_roots(sf_);
    if (iv.empty()) throw DomainError("polynomial has no real root");
    lo_ = iv.front().first;
    hi_ = iv.front().second;
  }

  bool exact() const { return exact_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const Polynomial& square_free() const { return sf_; }

  void bisect() {
    Rational m = (lo_ + hi_) / 2;
    int s = sf_.sign_at(m);
    if (s == 0) {
      lo_ = hi_ = m;
      exact_ = true;
    } else if (sf_.sign_at(lo_) != s) {
      hi_ = m;
    } else {
      lo_ = m;
    }
  }

  // Position of the root relative to a rational point.
  Relation against(const Rational& x) {
    while (true) {
      if (exact_) return compare(lo_, x);
      if (x <= lo_) return Relation::Above;
      if (x >= hi_) return Relation::Below;
      if (sf_(x) == 0) return Relation::Equal;
      bisect();
    }
  }

 private:
  Polynomial sf_;
  Rational lo_, hi_;
  bool exact_ = false;
};

}  // namespace detail

/// Least real root of p against least real root of q.
inline Relation compare_smallest_roots(const Polynomial& p, const Polynomial& q) {
  detail::LeastRoot a(p), b(q);
  Polynomial common = gcd(a.square_free(), b.square_free());
  while (true) {
    if (a.exact()) return flip(b.against(a.lo()));
    if (b.exact()) return a.against(b.lo());
    if (a.hi() <= b.lo()) return Relation::Below;
    if (b.hi() <= a.lo()) return Relation::Above;
    // Overlapping isolating intervals: a shared root inside the overlap is both least roots.
    if (common.degree() > 0) {
      Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
      Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
      if (count_distinct_roots(common, lo, hi) > 0) return Relation::Equal;
    }
    a.bisect();
    b.bisect();
  }
}

}  // namespace seidelcert
