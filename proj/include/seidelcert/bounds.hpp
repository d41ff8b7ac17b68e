#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "exactspec.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "linalg.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "seidel.hpp"

namespace seidelcert {

// ---------------------------------------------------------------------------
// (4,1) pillars

/// Row-type multiplicities of the block B: rows (2,2)/3, (2,-4)/3, (-4,2)/3, (-4,-4)/3.
struct PillarCounts {
  long a00 = 0, a01 = 0, a10 = 0, a11 = 0;

  long total() const { return a00 + a01 + a10 + a11; }
  long beta1() const { return a00 + 4 * a11; }
  long beta2() const { return a01 + a10; }
  friend bool operator==(const PillarCounts&, const PillarCounts&) = default;
};

inline std::string to_string(const PillarCounts& c) {
  return "(" + std::to_string(c.a00) + "," + std::to_string(c.a01) + "," + std::to_string(c.a10) + "," +
         std::to_string(c.a11) + ")";
}

namespace detail {

// Columns of B for the four row types, scaled by 3.
inline constexpr long kPillarU[4] = {2, 2, -4, -4};
inline constexpr long kPillarV[4] = {2, -4, 2, -4};

inline void check_counts(const PillarCounts& c) {
  if (c.a00 < 0 || c.a01 < 0 || c.a10 < 0 || c.a11 < 0) throw ParameterError("pillar counts must be non-negative");
}

}  // namespace detail

/// Quotient of the Gram matrix over {four row types, u, v}.
inline RationalMatrix pillar41_quotient(const PillarCounts& c) {
  detail::check_counts(c);
  const long a[4] = {c.a00, c.a01, c.a10, c.a11};
  RationalMatrix q(6, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    q(i, i) = 12;
    q(i, 4) = detail::kPillarU[i];
    q(i, 5) = detail::kPillarV[i];
    q(4, i) = detail::kPillarU[i] * a[i];
    q(5, i) = detail::kPillarV[i] * a[i];
  }
  q(4, 4) = q(5, 5) = 12;
  q(4, 5) = q(5, 4) = -4;
  return q * Rational(1, 3);
}

struct PillarDeterminants {
  Rational q5, q6, q;  // det with row/column u removed, with v removed, and of Q itself
};

inline PillarDeterminants pillar41_determinants(const PillarCounts& c) {
  RationalMatrix q = pillar41_quotient(c);
  std::vector<std::size_t> drop_u{0, 1, 2, 3, 5}, drop_v{0, 1, 2, 3, 4};
  return {determinant(q.principal_submatrix(drop_u)), determinant(q.principal_submatrix(drop_v)), determinant(q)};
}

inline bool pillar41_ineq1(const PillarCounts& c) { return c.a00 + 4 * c.a01 + c.a10 + 4 * c.a11 <= 36; }
inline bool pillar41_ineq2(const PillarCounts& c) { return c.a00 + c.a01 + 4 * c.a10 + 4 * c.a11 <= 36; }

inline long pillar41_det_form(const PillarCounts& c) {
  const long b1 = c.beta1(), b2 = c.beta2();
  return 3 * c.a01 * c.a10 + (3 * b1 - 44) * b2 - 32 * (b1 - 12);
}

/// The closed-form inequalities for "every eigenvalue of the quotient is non-negative".
inline bool pillar41_feasible(const PillarCounts& c) {
  detail::check_counts(c);
  return pillar41_ineq1(c) && pillar41_ineq2(c) && pillar41_det_form(c) >= 0;
}

/// Same question answered on the quotient's characteristic polynomial.
inline bool pillar41_quotient_nonnegative(const PillarCounts& c) {
  return min_root_relation(characteristic_polynomial(pillar41_quotient(c)), 0) != Relation::Below;
}

/// 3M for the full Gram matrix on p + 2 vectors: 12 I_p, B, and [[12, -4], [-4, 12]].
inline IntegerMatrix pillar41_gram(const PillarCounts& c) {
  detail::check_counts(c);
  const long a[4] = {c.a00, c.a01, c.a10, c.a11};
  const std::size_t p = static_cast<std::size_t>(c.total());
  IntegerMatrix m(p + 2, p + 2);
  std::size_t row = 0;
  for (std::size_t type = 0; type < 4; ++type)
    for (long k = 0; k < a[type]; ++k, ++row) {
      m(row, row) = 12;
      m(row, p) = m(p, row) = detail::kPillarU[type];
      m(row, p + 1) = m(p + 1, row) = detail::kPillarV[type];
    }
  m(p, p) = m(p + 1, p + 1) = 12;
  m(p, p + 1) = m(p + 1, p) = -4;
  return m;
}

inline bool pillar41_gram_psd(const PillarCounts& c) { return psd_certificate(to_rational(pillar41_gram(c))).psd; }

/// Every tuple with a00 + a01 + a10 + a11 ≤ max_total, in lexicographic order.
template <class F>
void for_each_pillar_counts(long max_total, F&& f) {
  for (long a = 0; a <= max_total; ++a)
    for (long b = 0; a + b <= max_total; ++b)
      for (long c = 0; a + b + c <= max_total; ++c)
        for (long d = 0; a + b + c + d <= max_total; ++d) f(PillarCounts{a, b, c, d});
}

struct PillarMaximum {
  long max_p = -1;
  std::vector<PillarCounts> argmax;
  std::size_t examined = 0;
};

/// Largest feasible total. The inequalities force a total of at most 36, so 40 is a safe cap.
inline PillarMaximum pillar41_enumerate(long max_total = 40) {
  PillarMaximum out;
  for_each_pillar_counts(max_total, [&](const PillarCounts& c) {
    ++out.examined;
    if (!pillar41_feasible(c)) return;
    if (c.total() > out.max_p) {
      out.max_p = c.total();
      out.argmax.clear();
    }
    if (c.total() == out.max_p) out.argmax.push_back(c);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Valency-13 star with a non-neighbour

/// x with 13 independent neighbours, y ≁ x adjacent to the first t of them, then ⊔ 2K2.
inline Graph star_overlap_graph(long t) {
  if (t < 0 || t > 13) throw ParameterError("overlap t must lie in [0, 13]");
  Graph g = star_graph(13);
  Vertex y = g.add_vertex();
  for (long i = 0; i < t; ++i) g.add_edge(y, static_cast<Vertex>(1 + i));
  return pad(g, 0, 2, 0);
}

/// Sign of det(S + 5I) for star_overlap_graph(t), as a relation to zero.
inline SpectralVerdict star_overlap_condition(long t) {
  Rational d = determinant(seidel_integer_matrix(star_overlap_graph(t)).shifted(5));
  return {compare(d, 0), "det(S+5I) = " + d.get_str()};
}

// ---------------------------------------------------------------------------
// Rank

/// n - n_H (1 + d_max) + 2 ε_H + α(H).
inline long rank_lower_bound(long n, long n_h, long d_max, long eps_h, long alpha_h) {
  if (n < 0 || n_h < 0 || d_max < 0 || eps_h < 0 || alpha_h < 0) throw ParameterError("rank bound arguments must be non-negative");
  return n - n_h * (1 + d_max) + 2 * eps_h + alpha_h;
}

// ---------------------------------------------------------------------------
// Galleries

struct GallerySplit {
  Vertex u = 0, v = 0;
  VertexSet gallery;  // U(x1, x2): vertices adjacent to neither x1 nor x2
  VertexSet w_u, w_v, w_empty;
  bool partition_holds = false;  // {u, v}, W_u, W_v, W_∅ cover U(x1, x2)
  bool pillars_match = false;    // W sets equal the pillars of the base {u, v, x1, x2}
};

namespace detail {

// Pillar label of y relative to a 4-clique base (u, v, x1, x2), up to switching y:
// of A and its complement, keep the one with fewer than two vertices, or with
// two vertices including u.
inline unsigned pillar_label(const Graph& g, Vertex y, const Vertex (&base)[4]) {
  unsigned a = 0;
  for (unsigned i = 0; i < 4; ++i)
    if (g.has_edge(y, base[i])) a |= 1u << i;
  const int size = std::popcount(a);
  if (size > 2 || (size == 2 && !(a & 1u))) a ^= 0xFu;
  return a;
}

}  // namespace detail

inline GallerySplit gallery_decompose(const Graph& g, Vertex x1, Vertex x2, Vertex u, Vertex v) {
  for (Vertex w : {x1, x2, u, v})
    if (w >= g.order()) throw IndexError("gallery vertex out of range");
  if (x1 == x2 || u == v) throw DomainError("gallery needs two distinct vertices on each edge");
  if (!g.has_edge(x1, x2)) throw DomainError("x1 and x2 are not adjacent");
  for (Vertex w : g.neighbours(x1))
    if (g.has_edge(w, x2)) throw DomainError("x1 and x2 have a common neighbour " + std::to_string(w));
  auto outside = [&](Vertex w) { return w != x1 && w != x2 && !g.has_edge(w, x1) && !g.has_edge(w, x2); };
  if (!outside(u)) throw DomainError("u is not in the gallery");
  if (!outside(v)) throw DomainError("v is not in the gallery");
  if (!g.has_edge(u, v)) throw DomainError("u and v are not adjacent");

  GallerySplit s;
  s.u = u;
  s.v = v;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (!outside(y)) continue;
    s.gallery.push_back(y);
    if (y == u || y == v) continue;
    bool yu = g.has_edge(y, u), yv = g.has_edge(y, v);
    if (yu && !yv) s.w_u.push_back(y);
    if (yv && !yu) s.w_v.push_back(y);
    if (!yu && !yv) s.w_empty.push_back(y);
  }
  s.partition_holds = 2 + s.w_u.size() + s.w_v.size() + s.w_empty.size() == s.gallery.size();

  // Switching about {x1, x2} turns {u, v, x1, x2} into a clique.
  Graph h = switched(g, {x1, x2});
  const Vertex base[4] = {u, v, x1, x2};
  VertexSet p_v, p_u, p_uv;
  for (Vertex y = 0; y < h.order(); ++y) {
    if (y == u || y == v || y == x1 || y == x2) continue;
    unsigned label = detail::pillar_label(h, y, base);
    if (label == 0b0010u) p_v.push_back(y);
    if (label == 0b0001u) p_u.push_back(y);
    if (label == 0b0011u) p_uv.push_back(y);
  }
  s.pillars_match = s.w_u == p_v && s.w_v == p_u && s.w_empty == p_uv;
  return s;
}

// ---------------------------------------------------------------------------
// Arithmetic chains

namespace detail {

inline long count(std::size_t n) { return static_cast<long>(n); }

/// Largest t1 + 2 t2 + 3 t3 (the order of t1 K1 ⊔ t2 K2 ⊔ t3 P3) with the padded family still ≥ -5.
inline long max_remainder_order(PaddedFamily f, long extra_k2 = 0) {
  long best = -1;
  for (long t3 = 0; padded_threshold_exact(f, 0, extra_k2, t3); ++t3)
    for (long t2 = 0; padded_threshold_exact(f, 0, t2 + extra_k2, t3); ++t2)
      for (long t1 = 0; padded_threshold_exact(f, t1, t2 + extra_k2, t3); ++t1) best = std::max(best, t1 + 2 * t2 + 3 * t3);
  return best;
}

/// Largest 2 + s1 + s2 + 2t with M(s1, s2, t) ⊔ 2K2 still ≥ -5 (optionally t ≤ t_cap).
inline long max_edge_valency_sum(std::optional<long> t_cap = std::nullopt) {
  long best = -1;
  for (long t = 0; (!t_cap || t <= *t_cap) && edge_neighbour_exact(0, 0, t); ++t)
    for (long s1 = 0; edge_neighbour_exact(s1, 0, t); ++s1)
      for (long s2 = 0; edge_neighbour_exact(s1, s2, t); ++s2) best = std::max(best, 2 + s1 + s2 + 2 * t);
  return best;
}

/// Smallest r with K_{1,r} ⊔ 2K2 below -5.
inline long min_forbidden_star_with_two_edges() {
  for (long r = 1;; ++r)
    if (structured_verdict(padded(star_graph(r), 0, 2, 0), kThreshold).relation == Relation::Below) return r;
}

using Chain = std::pair<long, std::string>;  // value and how it was computed

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

}  // namespace detail

/// Replays the counting arguments. Every ingredient that is a computation
/// (paddings, thresholds, orders, sizes, independence numbers, pillar maxima)
/// is recomputed; the remaining premises (d_max ≤ 47, α ≤ 26 or 28, b_max ≤ 20,
/// pillar orders ≤ 68) are stated inputs of the arguments.
inline std::vector<ClaimReport> counting_replays() {
  using detail::count;
  using detail::Chain;
  std::vector<ClaimReport> out;
  auto claim = [&](const std::string& id, long expected, const std::function<Chain()>& body) {
    out.push_back(timed_claim(id, [&] {
      auto [actual, how] = body();
      return compare_claim(id, std::to_string(expected), std::to_string(actual), how);
    }));
  };
  const long d_max = 47;

  claim("count.240.neighbourhood-split", 240, [&]() -> Chain {
    long s15 = count(min_padding_to_forbidden(star_graph(5)));
    long s17 = count(min_padding_to_forbidden(star_graph(7)));
    long v = 1 + d_max + 2 * (s15 - 1) + 2 * (s15 - 1) + 2 * (s17 - 1);
    std::string half = "2*(" + std::to_string(s15) + "-1)";
    return Chain{v, "1+47+" + half + "+" + half + "+2*(" + std::to_string(s17) + "-1)"};
  });
  claim("count.36.k23-remainder", 36, [&]() -> Chain {
    long s = count(min_padding_to_forbidden(complete_multipartite({2, 3})));
    return Chain{2 * (s - 1), "2*(" + std::to_string(s) + "-1)"};
  });
  claim("count.264.k23-neighbourhood", 264, [&]() -> Chain {
    Graph k = complete_multipartite({2, 3});
    long rem = 2 * (count(min_padding_to_forbidden(k)) - 1);
    long v = count(k.order()) * (d_max + 1) - 2 * count(k.size()) + rem;
    return Chain{v, "5*(47+1)-2*" + std::to_string(k.size()) + "+" + std::to_string(rem)};
  });
  claim("count.66.valency-13-order", 66, [&]() -> Chain {
    // Every non-neighbour of a valency-13 vertex shares exactly the overlap t with det(S+5I) ≥ 0.
    long t_ok = -1;
    for (long t = 0; t <= 13; ++t)
      if (star_overlap_condition(t).relation != Relation::Below) t_ok = t;
    long a = detail::min_forbidden_star_with_two_edges() - 1;
    return Chain{1 + a + a * (a - 1) / t_ok, "1+" + std::to_string(a) + "+" + std::to_string(a) + "*" +
                                                     std::to_string(a - 1) + "/" + std::to_string(t_ok)};
  });
  claim("count.63.no-k23", 63, [&]() -> Chain {
    long a = detail::min_forbidden_star_with_two_edges() - 1;  // valency 13 allowed by the star alone
    auto srg = srg_eigen_data({66, 13, 0, 3});
    if (!srg.feasible) --a;                                      // and excluded by the parameter set
    long rem = detail::max_remainder_order(PaddedFamily::K23, 1);
    Graph k = complete_multipartite({2, 3});
    long v = count(k.order()) + count(k.order()) * a - 2 * count(k.size()) + rem;
    return Chain{v, "5+5*" + std::to_string(a) + "-12+" + std::to_string(rem)};
  });
  claim("count.63.valency-at-least-6", 63, [&]() -> Chain {
    long pair = detail::max_edge_valency_sum(1);
    long nbh = 6 * pair - 5 * 6 - 2 * 6;
    long rem = detail::max_remainder_order(PaddedFamily::K16);
    return Chain{7 + nbh + rem, "7+(6*" + std::to_string(pair) + "-30-12)+" + std::to_string(rem)};
  });
  claim("count.68.ladder", 68, [&]() -> Chain {
    Graph b3 = build_family({Family::B3, {}});
    long pair = detail::max_edge_valency_sum();
    long nbh = 3 * pair - 2 * count(b3.size());
    long rem = detail::max_remainder_order(PaddedFamily::B3);
    return Chain{count(b3.order()) + nbh + rem, "6+(3*" + std::to_string(pair) + "-2*" + std::to_string(b3.size()) +
                                                        ")+" + std::to_string(rem)};
  });
  claim("count.64.dtilde4-plus", 64, [&]() -> Chain {
    Graph h = build_family({Family::DTildePlus, {4}});
    long alpha = count(independence_number(h));
    long nbh = count(h.order()) * 4 - 2 * count(h.size());
    return Chain{count(h.order()) + nbh + (52 - 2 * alpha), std::to_string(h.order()) + "+" + std::to_string(nbh) +
                                                                    "+(52-2*" + std::to_string(alpha) + ")"};
  });
  claim("count.64.valency-3", 64, [&]() -> Chain {
    // n_H + 54 over minimal graphs with ρ > 2 whose valencies stay at most 3.
    long n_h = 0;
    std::vector<FamilySpec> specs;
    for (long n = 2; n <= 7; ++n) specs.push_back({Family::ATildePlus, {n}});
    for (long n = 4; n <= 8; ++n) specs.push_back({Family::DTildePlus, {n}});
    for (long n = 6; n <= 8; ++n) specs.push_back({Family::ETildePlus, {n}});
    for (const auto& s : specs) {
      Graph h = build_family(s);
      if (h.max_degree() <= 3) n_h = std::max(n_h, count(h.order()));
    }
    return Chain{n_h + 54, std::to_string(n_h) + "+54"};
  });
  claim("count.68.star", 68, [&]() -> Chain {
    Graph h = star_graph(5);
    long n = count(h.order()), e = count(h.size()), alpha = count(independence_number(h));
    return Chain{n + n * 5 - 2 * e + 52 - 2 * alpha, "6+6*5-2*5+52-2*5"};
  });
  claim("count.65.rho-at-most-2", 65, [&]() -> Chain { return Chain{5 * 26 / 2, "5*26/2"}; });
  claim("count.20.edge-valency-sum", 20, [&]() -> Chain { return Chain{detail::max_edge_valency_sum(), "max 2+s1+s2+2t"}; });
  claim("count.105.gallery", 105, [&]() -> Chain {
    long rem = detail::max_remainder_order(PaddedFamily::K23);
    return Chain{5 + 5 * 20 - 2 * 6 - 2 + rem, "5+5*20-12-2+" + std::to_string(rem)};
  });
  claim("count.65.gallery-pillar", 65, [&]() -> Chain { return Chain{105 - 2 * 20, "105-2*20"}; });
  claim("count.17.outside-pillar", 17, [&]() -> Chain { return Chain{(105 - 68) - 20, "(105-68)-20"}; });
  claim("count.5.common-neighbours", 5, [&]() -> Chain { return Chain{detail::ceil_div(17, 4), "ceil(17/4)"}; });
  claim("count.19.pillar", 19, [&]() -> Chain {
    long b2 = 32 / 3;
    long bound = (48 + 3 * b2) / 4;
    auto e = pillar41_enumerate();
    if (e.max_p != bound) return Chain{e.max_p, "enumeration disagrees with floor((48+3*10)/4)"};
    return Chain{bound, "floor((48+3*" + std::to_string(b2) + ")/4), enumeration max " + std::to_string(e.max_p)};
  });
  claim("count.264.large-pillar", 264, [&]() -> Chain { return Chain{4 + 2 * 28 + 3 * 68, "4+2*28+3*68"}; });
  claim("count.275.gallery-105", 275, [&]() -> Chain { return Chain{4 * 105 / 2 + 65, "4*105/2+65"}; });
  claim("count.276.final", 276, [&]() -> Chain { return Chain{4 * 104 / 2 + 68, "4*104/2+68"}; });
  claim("rank.valency-3", -21, [&]() -> Chain {
    return Chain{rank_lower_bound(0, 10, 3, 9, 1), "n-10*(1+3)+2*9+1 with n=0"};
  });
  claim("rank.valency-16", -91, [&]() -> Chain {
    return Chain{rank_lower_bound(0, 6, 16, 5, 1), "n-6*(1+16)+2*5+1 with n=0"};
  });
  claim("rank.order-277", 277, [&]() -> Chain {
    // Smallest n with n - 91 > 2n/3 + 1, i.e. 3(n - 91) > 2n + 3.
    long n = 0;
    while (!(3 * rank_lower_bound(n, 6, 16, 5, 1) > 2 * n + 3)) ++n;
    return Chain{n, "smallest n with n-91 > 2n/3+1"};
  });
  return out;
}

}  // namespace seidelcert
