#pragma once

#include <functional>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "catalog.hpp"
#include "exactspec.hpp"
#include "quotient.hpp"
#include "report.hpp"

namespace seidelcert {

enum class Suite { All, MinimalPaddings, PaddedStars, PaddedThresholds, Pillar41, Srg, Catalog, Counting, Smith };

// Command-line names. `all` runs catalog (which holds the padding entries) and then the rest.
inline const std::pair<std::string_view, Suite> kSuiteNames[] = {
    {"all", Suite::All},
    {"table2", Suite::MinimalPaddings},
    {"lemma36", Suite::PaddedStars},
    {"lemma8", Suite::PaddedThresholds},
    {"pillar41", Suite::Pillar41},
    {"srg", Suite::Srg},
    {"catalog", Suite::Catalog},
    {"counting", Suite::Counting},
    {"smith", Suite::Smith},
};

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (auto [n, s] : kSuiteNames)
    if (n == name) return s;
  return std::nullopt;
}

namespace detail {

/// Agreement count over a grid, remembering the first disagreement.
struct Tally {
  long total = 0, agree = 0;
  std::optional<std::string> first_miss;

  void add(bool ok, const std::function<std::string()>& where) {
    ++total;
    if (ok) ++agree;
    else if (!first_miss) first_miss = where();
  }
};

inline ClaimReport tally_claim(const std::string& id, const std::function<Tally()>& body) {
  return timed_claim(id, [&] {
    Tally t = body();
    std::string all = std::to_string(t.total);
    return compare_claim(id, "agree=" + all + "/" + all, "agree=" + std::to_string(t.agree) + "/" + all,
                         t.first_miss);
  });
}

inline std::string triple(long a, long b, long c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

/// Runs every entry on its own thread; the result order is the entry order.
inline std::vector<ClaimReport> verify_catalog_parallel(const std::vector<CatalogEntry>& entries) {
  std::vector<std::future<ClaimReport>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e] { return verify_entry(e); }));
  std::vector<ClaimReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  Graph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

/// The adjacency characteristic polynomial the parameters predict.
inline Polynomial srg_predicted_poly(const SrgParams& p, const SrgEigenData& d) {
  Polynomial out = Polynomial::linear_root(p.k);
  if (d.theta.is_rational()) {
    out = out * Polynomial::linear_root(d.theta.a).pow(d.m_theta.a.get_num().get_ui());
    out = out * Polynomial::linear_root(d.tau.a).pow(d.m_tau.a.get_num().get_ui());
  } else {
    // Conjugate eigenvalues share a multiplicity.
    Polynomial quad({Rational(-(p.k - p.mu)), Rational(-(p.lambda - p.mu)), 1});
    out = out * quad.pow(d.m_theta.a.get_num().get_ui());
  }
  return out;
}

inline std::string srg_summary(const SrgEigenData& d) {
  return "theta=" + to_string(d.theta) + ", tau=" + to_string(d.tau) + ", m_theta=" + to_string(d.m_theta) +
         ", m_tau=" + to_string(d.m_tau) + (d.feasible ? ", feasible" : ", infeasible");
}

inline std::string srg_id(const SrgParams& p) {
  return "srg." + std::to_string(p.n) + "-" + std::to_string(p.k) + "-" + std::to_string(p.lambda) + "-" +
         std::to_string(p.mu);
}

inline ClaimReport srg_control(const SrgParams& p, const Graph& g, const std::string& expected) {
  return timed_claim(srg_id(p), [&] {
    SrgEigenData d = srg_eigen_data(p);
    std::string actual = srg_summary(d);
    if (d.feasible) {
      bool match = characteristic_polynomial(adjacency_matrix(g)) == srg_predicted_poly(p, d);
      actual += match ? ", matches built graph" : ", differs from built graph";
    }
    return compare_claim(srg_id(p), expected, actual);
  });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites

/// The minimal paddings of the 18 cores.
inline std::vector<ClaimReport> minimal_padding_suite(const std::vector<CatalogEntry>& catalog) {
  std::vector<CatalogEntry> padding;
  for (const auto& e : catalog)
    if (e.kind == ClaimKind::MinPadding) padding.push_back(e);
  return detail::verify_catalog_parallel(padding);
}

/// Padded stars: closed form against exact spectra, and the two determinant identities.
inline std::vector<ClaimReport> star_padding_suite() {
  std::vector<long> s_values;
  for (long s = 0; s <= 20; ++s) s_values.push_back(s);
  for (long s = 37; s <= 45; ++s) s_values.push_back(s);
  auto grid = [&](const std::function<bool(long, long, long)>& ok) {
    detail::Tally t;
    for (long r = 2; r <= 12; ++r)
      for (long s : s_values)
        for (long u = 0; u <= 6; ++u) {
          if (s + u == 0) continue;
          t.add(ok(r, s, u), [&] { return "r,s,t=" + detail::triple(r, s, u); });
        }
    return t;
  };
  std::vector<ClaimReport> out;
  out.push_back(detail::tally_claim("star-padding.closed-form", [&] {
    return grid([](long r, long s, long t) { return star_padding_predicate(r, s, t) == star_padding_exact(r, s, t); });
  }));
  out.push_back(detail::tally_claim("star-padding.determinant-identities", [&] {
    return grid([](long r, long s, long t) { return star_padding_determinants(r, s, t).holds(); });
  }));
  return out;
}

/// Padded K23 / K16 / B3 thresholds and the edge-neighbourhood bound.
inline std::vector<ClaimReport> padded_threshold_suite() {
  std::vector<ClaimReport> out;
  for (PaddedFamily f : {PaddedFamily::K23, PaddedFamily::K16, PaddedFamily::B3})
    out.push_back(detail::tally_claim("padded-threshold." + to_string(f), [f] {
      detail::Tally t;
      for (long t1 = 0; t1 <= 20; ++t1)
        for (long t2 = 0; t2 <= 5; ++t2)
          for (long t3 = 0; t3 <= 3; ++t3)
            t.add(padded_threshold_predicate(f, t1, t2, t3) == padded_threshold_exact(f, t1, t2, t3),
                  [&] { return "t=" + detail::triple(t1, t2, t3); });
      return t;
    }));
  out.push_back(detail::tally_claim("edge-neighbour.threshold", [] {
    detail::Tally t;
    for (long s1 = 0; s1 <= 14; ++s1)
      for (long s2 = 0; s2 <= 14; ++s2)
        for (long u = 0; u <= 10; ++u)
          t.add(edge_neighbour_threshold(s1, s2, u) == edge_neighbour_exact(s1, s2, u),
                [&] { return "s1,s2,t=" + detail::triple(s1, s2, u); });
    return t;
  }));
  return out;
}

/// Two valency-13 stars sharing t neighbours: det(S + 5I) >= 0 only when t = 3.
inline ClaimReport star_overlap_claim() {
  return timed_claim("star-overlap.common-neighbours", [] {
    std::string at;
    for (long t = 0; t <= 13; ++t)
      if (star_overlap_condition(t).relation != Relation::Below) at += (at.empty() ? "" : ",") + std::to_string(t);
    return compare_claim("star-overlap.common-neighbours", "det(S+5I) >= 0 only at t=3",
                         "det(S+5I) >= 0 only at t=" + at, star_overlap_condition(3).witness);
  });
}

inline std::vector<ClaimReport> pillar41_suite() {
  std::vector<ClaimReport> out;
  PillarMaximum m;
  out.push_back(timed_claim("pillar41.maximum", [&] {
    m = pillar41_enumerate();
    return compare_claim("pillar41.maximum", "19", std::to_string(m.max_p),
                         std::to_string(m.examined) + " tuples with total <= 40");
  }));
  out.push_back(timed_claim("pillar41.argmax", [&] {
    std::string actual;
    for (const auto& c : m.argmax) actual += (actual.empty() ? "" : " ") + to_string(c);
    return compare_claim("pillar41.argmax", "(9,5,5,0)", actual);
  }));
  out.push_back(detail::tally_claim("pillar41.gram-cross-check", [] {
    detail::Tally t;
    for_each_pillar_counts(21, [&](const PillarCounts& c) {
      t.add(pillar41_feasible(c) == pillar41_gram_psd(c), [&] { return to_string(c); });
    });
    return t;
  }));
  return out;
}

inline std::vector<ClaimReport> srg_suite() {
  std::vector<ClaimReport> out;
  SrgParams p{66, 13, 0, 3};
  out.push_back(timed_claim(detail::srg_id(p), [&] {
    return compare_claim(detail::srg_id(p), "theta=2, tau=-5, m_theta=312/7, m_tau=143/7, infeasible",
                         detail::srg_summary(srg_eigen_data(p)));
  }));
  out.push_back(detail::srg_control({10, 3, 0, 1}, detail::petersen_graph(),
                                    "theta=1, tau=-2, m_theta=5, m_tau=4, feasible, matches built graph"));
  out.push_back(detail::srg_control({5, 2, 0, 1}, cycle_graph(5),
                                    "theta=-1/2+1/2*sqrt(5), tau=-1/2-1/2*sqrt(5), m_theta=2, m_tau=2, feasible, "
                                    "matches built graph"));
  return out;
}

/// Smith's list: family instances, eigenvector labels, and the 18 minimal graphs
/// (the cores of the padding entries).
inline std::vector<ClaimReport> smith_suite(const std::vector<CatalogEntry>& catalog) {
  std::vector<FamilySpec> specs;
  for (long n = 2; n <= 12; ++n) specs.push_back({Family::ATilde, {n}});
  for (long n = 4; n <= 12; ++n) specs.push_back({Family::DTilde, {n}});
  for (long n = 6; n <= 8; ++n) specs.push_back({Family::ETilde, {n}});
  std::vector<ClaimReport> out;
  out.push_back(detail::tally_claim("smith.family-instances", [&] {
    detail::Tally t;
    for (const auto& spec : specs) {
      SmithClass c = smith_classify(build_family(spec));
      t.add(c.kind == SmithKind::RhoEqual2 && *c.family == spec, [&] { return to_string(c); });
    }
    for (std::size_t n = 1; n <= 13; ++n)
      t.add(smith_classify(path_graph(n)).kind == SmithKind::RhoBelow2, [&] { return "P(" + std::to_string(n) + ")"; });
    return t;
  }));
  out.push_back(detail::tally_claim("smith.eigenvector-labels", [&] {
    detail::Tally t;
    for (const auto& spec : specs) {
      Graph g = build_family(spec);
      auto v = smith_eigenvector(spec);
      bool ok = v.size() == g.order();
      for (Vertex x = 0; ok && x < g.order(); ++x) {
        long sum = 0;
        for (Vertex y : g.neighbours(x)) sum += v[y];
        ok = sum == 2 * v[x];
      }
      t.add(ok, [&] { return std::string(family_token(spec.family)) + "(" + std::to_string(spec.params[0]) + ")"; });
    }
    return t;
  }));
  out.push_back(timed_claim("smith.minimal-rho-above-2", [&] {
    long count = 0, good = 0;
    std::optional<std::string> miss;
    for (const auto& e : catalog) {
      if (e.kind != ClaimKind::MinPadding) continue;
      Graph g = parse_graph_expr(e.graph_expr);
      ++count;
      if (smith_classify(g).kind == SmithKind::RhoAbove2 && is_minimal_rho_above2(g)) ++good;
      else if (!miss) miss = e.graph_expr;
    }
    return compare_claim("smith.minimal-rho-above-2", "18 of 18",
                         std::to_string(good) + " of " + std::to_string(count), miss);
  }));
  return out;
}

// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> run_suite(Suite suite, const std::vector<CatalogEntry>& catalog) {
  switch (suite) {
    case Suite::MinimalPaddings: return minimal_padding_suite(catalog);
    case Suite::PaddedStars: return star_padding_suite();
    case Suite::PaddedThresholds: {
      auto out = padded_threshold_suite();
      out.push_back(star_overlap_claim());
      return out;
    }
    case Suite::Pillar41: return pillar41_suite();
    case Suite::Srg: return srg_suite();
    case Suite::Catalog: return detail::verify_catalog_parallel(catalog);
    case Suite::Counting: return counting_replays();
    case Suite::Smith: return smith_suite(catalog);
    case Suite::All: break;
  }
  std::vector<ClaimReport> out;
  for (Suite s : {Suite::Catalog, Suite::PaddedStars, Suite::PaddedThresholds, Suite::Pillar41, Suite::Srg,
                  Suite::Counting, Suite::Smith}) {
    auto part = run_suite(s, catalog);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<ClaimReport> run_suite(Suite suite) { return run_suite(suite, builtin_catalog()); }

}  // namespace seidelcert
