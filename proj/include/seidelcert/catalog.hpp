#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog_data.hpp"
#include "errors.hpp"
#include "exactspec.hpp"
#include "graph.hpp"
#include "graph_expr.hpp"
#include "linalg.hpp"
#include "quotient.hpp"
#include "reduction.hpp"
#include "report.hpp"
#include "seidel.hpp"

namespace seidelcert {

inline const Rational kThreshold{-5};

// ---------------------------------------------------------------------------
// Catalog file

enum class ClaimKind { MinimalForbidden, MinPadding };

struct CatalogEntry {
  std::string id;
  std::string graph_expr;
  ClaimKind kind = ClaimKind::MinimalForbidden;
  long padding = 0;  // for MinPadding
};

inline std::string claim_text(const CatalogEntry& e) {
  return e.kind == ClaimKind::MinimalForbidden ? "minimal_forbidden" : "min_padding=" + std::to_string(e.padding);
}

/// Lines `id<TAB>graph_expr<TAB>claim`; blank lines and lines starting with '#' are skipped.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "catalog line " + std::to_string(lineno); };
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
      throw ParameterError(where() + ": expected three tab-separated fields");
    CatalogEntry e;
    e.id = line.substr(0, t1);
    e.graph_expr = line.substr(t1 + 1, t2 - t1 - 1);
    std::string claim = line.substr(t2 + 1);
    if (e.id.empty()) throw ParameterError(where() + ": empty id");
    if (!ids.insert(e.id).second) throw ParameterError(where() + ": duplicate id " + e.id);
    parse_expr(e.graph_expr);
    const std::string pad_prefix = "min_padding=";
    if (claim == "minimal_forbidden") {
      e.kind = ClaimKind::MinimalForbidden;
    } else if (claim.rfind(pad_prefix, 0) == 0) {
      e.kind = ClaimKind::MinPadding;
      std::size_t used = 0;
      std::string num = claim.substr(pad_prefix.size());
      try {
        e.padding = std::stol(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (num.empty() || used != num.size() || e.padding < 0) throw ParameterError(where() + ": bad padding " + num);
    } else {
      throw ParameterError(where() + ": unknown claim " + claim);
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CatalogEntry> builtin_catalog() { return parse_catalog(kBuiltinCatalog); }

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read catalog file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_catalog(buf.str());
}

// ---------------------------------------------------------------------------
// Forbidden subgraphs

/// λ_min of the expanded graph against q; falls back to the full matrix when
/// the quotient is too large for a characteristic polynomial.
inline SpectralVerdict structured_verdict(const StructuredGraph& s, const Rational& q) {
  if (s.reduced_order() <= kCharPolyOrderLimit) return structured_lambda_min_cmp(s, q);
  return lambda_min_cmp(seidel_of(expand(s)), q);
}

/// λ_min < -5 and every single-vertex deletion has λ_min ≥ -5. Deleting one
/// vertex suffices: λ_min can only grow on induced subgraphs.
inline bool is_forbidden_minimal(const StructuredGraph& s, std::string* witness = nullptr) {
  auto whole = structured_verdict(s, kThreshold);
  if (whole.relation != Relation::Below) {
    if (witness) *witness = "lambda_min " + std::string(whole.relation == Relation::Equal ? "= -5" : "> -5");
    return false;
  }
  auto dels = vertex_deletions(s);
  for (std::size_t i = 0; i < dels.size(); ++i)
    if (structured_verdict(dels[i], kThreshold).relation == Relation::Below) {
      if (witness) {
        Graph g = expand(s);
        Vertex v = deletion_representatives(s)[i];
        std::size_t comp = 0;
        for (const auto& c : connected_components(g))
          if (std::find(c.begin(), c.end(), v) != c.end()) comp = c.size();
        *witness = "deleting a degree-" + std::to_string(g.degree(v)) + " vertex of a " + std::to_string(comp) +
                   "-vertex component leaves lambda_min < -5";
      }
      return false;
    }
  if (witness) *witness = std::to_string(dels.size()) + " deletion classes all >= -5";
  return true;
}

inline bool is_forbidden_minimal(const Graph& g, std::string* witness = nullptr) {
  return is_forbidden_minimal(decompose(g), witness);
}

/// Smallest s with λ_min(S(core ⊔ s K1)) < -5, by doubling then bisection.
inline std::size_t min_padding_to_forbidden(const Graph& core) {
  if (spectral_radius_cmp(core, 2).relation != Relation::Above)
    throw DivergenceError("spectral radius at most 2: no padding makes lambda_min drop below -5");
  auto below = [&](std::size_t s) { return lambda_min_cmp_padded(core, s, 0, 0, kThreshold).relation == Relation::Below; };
  if (below(0)) return 0;
  std::size_t lo = 0, hi = 1;  // below(lo) is false
  while (!below(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    (below(mid) ? hi : lo) = mid;
  }
  return hi;
}

// ---------------------------------------------------------------------------
// Padded stars K_{1,r} ⊔ s K1 ⊔ t K2

inline void check_star_params(long r, long s, long t) {
  if (r < 2 || s < 0 || t < 0 || s + t < 1) throw ParameterError("padded star needs r >= 2, s, t >= 0, s + t >= 1");
}

/// Closed form for λ_min(S(K_{1,r} ⊔ s K1 ⊔ t K2)) ≥ -5.
inline bool star_padding_predicate(long r, long s, long t) {
  check_star_params(r, s, t);
  return (r - 4) * (s + 4 * t - 4) <= 36;
}

inline bool star_padding_exact(long r, long s, long t) {
  check_star_params(r, s, t);
  return lambda_min_cmp_padded(star_graph(r), s, t, 0, kThreshold).relation != Relation::Below;
}

/// Quotient of S(K_{1,r} ⊔ s K1 ⊔ t K2) over {centre, leaves, isolated, K2 vertices}.
inline RationalMatrix star_padding_quotient(long r, long s, long t) {
  return RationalMatrix::from_rows(
      {{0, -r, s, 2 * t}, {-1, r - 1, s, 2 * t}, {1, r, s - 1, 2 * t}, {1, r, s, 2 * t - 3}});
}

struct StarDeterminants {
  Rational d3, d5;           // det(Q + 3I), det(Q + 5I)
  Rational d3_closed, d5_closed;

  bool holds() const { return d3 == d3_closed && d5 == d5_closed; }
};

inline StarDeterminants star_padding_determinants(long r, long s, long t) {
  check_star_params(r, s, t);
  RationalMatrix q = star_padding_quotient(r, s, t);
  StarDeterminants d;
  d.d3 = determinant(q.shifted(3));
  d.d5 = determinant(q.shifted(5));
  d.d3_closed = Rational(-16 * t * (r - 1));
  d.d5_closed = Rational(-8 * ((r - 4) * (s + 4 * t - 4) - 36));
  return d;
}

/// λ_min(S(cone(g) ⊔ s K1 ⊔ t K2)) ≤ λ_min(S(K_{1,r} ⊔ s K1 ⊔ t K2)) with r = |g|.
inline bool cone_domination_check(const Graph& g, long s, long t) {
  check_star_params(static_cast<long>(g.order()), s, t);
  auto poly = [&](const Graph& core) { return structured_char_poly(padded(core, s, t, 0)); };
  return compare_smallest_roots(poly(cone(g)), poly(star_graph(g.order()))) != Relation::Above;
}

// ---------------------------------------------------------------------------
// Cores padded with K1, K2 and P3 copies

enum class PaddedFamily { K23, K16, B3 };

inline std::string to_string(PaddedFamily f) {
  switch (f) {
    case PaddedFamily::K23: return "K23";
    case PaddedFamily::K16: return "K16";
    case PaddedFamily::B3: return "B3";
  }
  return "?";
}

struct PaddedFamilyData {
  Graph core;
  std::size_t builtin_k2;  // K2 copies always present on top of t2
  long bound;              // t1 + 4 t2 + 10 t3 ≤ bound
};

inline PaddedFamilyData padded_family_data(PaddedFamily f) {
  switch (f) {
    case PaddedFamily::K23: return {complete_multipartite({2, 3}), 1, 14};
    case PaddedFamily::K16: return {star_graph(6), 2, 14};
    case PaddedFamily::B3: return {build_family({Family::B3, {}}), 2, 16};
  }
  throw ParameterError("unknown padded family");
}

inline void check_nonneg(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) throw ParameterError("counts must be non-negative");
}

/// Closed form for λ_min ≥ -5 of the family core with t1 K1, t2 + builtin K2, t3 P3.
inline bool padded_threshold_predicate(PaddedFamily f, long t1, long t2, long t3) {
  check_nonneg(t1, t2, t3);
  return t1 + 4 * t2 + 10 * t3 <= padded_family_data(f).bound;
}

inline bool padded_threshold_exact(PaddedFamily f, long t1, long t2, long t3) {
  check_nonneg(t1, t2, t3);
  auto d = padded_family_data(f);
  return lambda_min_cmp_padded(d.core, t1, t2 + d.builtin_k2, t3, kThreshold).relation != Relation::Below;
}

/// M(s1, s2, t) ⊔ 2K2 with the edge xy as core and everything else as attached groups.
inline StructuredGraph edge_neighbour_structured(long s1, long s2, long t) {
  check_nonneg(s1, s2, t);
  StructuredGraph s{complete_graph(2), {}};
  BlockGroup on_x{empty_graph(1), {{0}}, static_cast<std::size_t>(s1)};
  BlockGroup on_y{empty_graph(1), {{1}}, static_cast<std::size_t>(s2)};
  BlockGroup split{complete_graph(2), {{0}, {1}}, static_cast<std::size_t>(t)};
  for (auto* g : {&on_x, &on_y, &split})
    if (g->copies) s.groups.push_back(*g);
  s.groups.push_back(unattached_group(complete_graph(2), 2));
  return s;
}

/// Closed form for λ_min(S(M(s1, s2, t) ⊔ 2K2)) ≥ -5.
inline bool edge_neighbour_threshold(long s1, long s2, long t) {
  check_nonneg(s1, s2, t);
  return 3 * s1 + 3 * s2 + 4 * t <= 36;
}

inline bool edge_neighbour_exact(long s1, long s2, long t) {
  return structured_verdict(edge_neighbour_structured(s1, s2, t), kThreshold).relation != Relation::Below;
}

// ---------------------------------------------------------------------------
// Verification

inline ClaimReport verify_entry(const CatalogEntry& e) {
  return timed_claim(e.id, [&] {
    Graph g = parse_graph_expr(e.graph_expr);
    if (e.kind == ClaimKind::MinPadding) {
      std::size_t s = min_padding_to_forbidden(g);
      std::string why;
      bool minimal = is_forbidden_minimal(padded(g, s, 0, 0), &why);
      ClaimReport r = compare_claim(e.id, "min_padding=" + std::to_string(e.padding) + ", minimal",
                                    "min_padding=" + std::to_string(s) + (minimal ? ", minimal" : ", not minimal"));
      r.witness = why;
      return r;
    }
    std::string why;
    StructuredGraph s = decompose(g);
    auto whole = structured_verdict(s, kThreshold);
    bool minimal = is_forbidden_minimal(s, &why);
    std::string actual = minimal ? "minimal_forbidden"
                         : whole.relation == Relation::Below ? "forbidden, not minimal"
                                                             : "not forbidden";
    return compare_claim(e.id, "minimal_forbidden", actual, why);
  });
}

inline std::vector<ClaimReport> verify_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<ClaimReport> out;
  for (const auto& e : entries) out.push_back(verify_entry(e));
  return out;
}

inline std::vector<ClaimReport> verify_catalog() { return verify_catalog(builtin_catalog()); }

}  // namespace seidelcert
