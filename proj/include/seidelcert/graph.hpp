#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace seidelcert {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_; }

  void add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) throw IndexError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) throw ParameterError("duplicate edge");
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
  }

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) throw IndexError("vertex out of range");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const VertexSet& neighbours(Vertex u) const {
    if (u >= order()) throw IndexError("vertex out of range");
    return adj_[u];
  }

  std::size_t degree(Vertex u) const { return neighbours(u).size(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return d;
  }

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

// ---------------------------------------------------------------------------
// Basic constructions

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Graph g(n);
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline Graph star_graph(std::size_t leaves) { return complete_multipartite({1, leaves}); }

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// g2's vertices are shifted by g1.order(); no edges between the parts.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.order() + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  const std::size_t off = g1.order();
  for (auto [u, v] : g2.edges()) g.add_edge(u + off, v + off);
  return g;
}

/// k disjoint copies of g.
inline Graph repeat(const Graph& g, std::size_t k) {
  Graph out(g.order() * k);
  const auto es = g.edges();
  for (std::size_t c = 0; c < k; ++c)
    for (auto [u, v] : es) out.add_edge(u + c * g.order(), v + c * g.order());
  return out;
}

/// g with t1 isolated vertices, t2 copies of K2 and t3 copies of P3 appended, in that order.
inline Graph pad(const Graph& g, std::size_t t1, std::size_t t2, std::size_t t3) {
  Graph out = disjoint_union(g, empty_graph(t1));
  out = disjoint_union(out, repeat(complete_graph(2), t2));
  return disjoint_union(out, repeat(path_graph(3), t3));
}

/// Adds one vertex (the last index) adjacent to every vertex of g.
inline Graph cone(const Graph& g) {
  Graph out = disjoint_union(g, empty_graph(1));
  const Vertex apex = g.order();
  for (Vertex v = 0; v < g.order(); ++v) out.add_edge(v, apex);
  return out;
}

/// Subgraph induced on `u`, re-indexed 0..|u|-1 in the order given.
inline Graph induced_subgraph(const Graph& g, const VertexSet& u) {
  std::vector<std::size_t> pos(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= g.order()) throw IndexError("vertex " + std::to_string(u[i]) + " out of range");
    if (pos[u[i]] != SIZE_MAX) throw ParameterError("repeated vertex in induced subgraph");
    pos[u[i]] = i;
  }
  Graph h(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (Vertex w : g.neighbours(u[i]))
      if (pos[w] != SIZE_MAX && i < pos[w]) h.add_edge(i, pos[w]);
  return h;
}

/// g with vertex v removed; later vertices shift down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw IndexError("vertex out of range");
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

/// N = vertices outside H with a neighbour in H; R = vertices neither in H nor adjacent to H.
struct NeighbourhoodSplit {
  VertexSet neighbours;
  VertexSet rest;
};

inline NeighbourhoodSplit split_by_neighbourhood(const Graph& g, const VertexSet& h) {
  std::vector<char> in_h(g.order(), 0), near(g.order(), 0);
  for (Vertex x : h) {
    if (x >= g.order()) throw IndexError("vertex out of range");
    in_h[x] = 1;
  }
  for (Vertex x : h)
    for (Vertex y : g.neighbours(x)) near[y] = 1;
  NeighbourhoodSplit s;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_h[v]) continue;
    (near[v] ? s.neighbours : s.rest).push_back(v);
  }
  return s;
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x))
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

/// Exact isomorphism test by backtracking with degree filtering. Intended for small graphs.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map a's vertices in BFS order so that each new vertex has mapped neighbours early.
  VertexSet order;
  {
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = order.size();
      order.push_back(s);
      while (head < order.size()) {
        Vertex x = order[head++];
        for (Vertex y : a.neighbours(x))
          if (!seen[y]) {
            seen[y] = 1;
            order.push_back(y);
          }
      }
    }
  }
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    Vertex x = order[k];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || db[y] != da[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Vertex w = order[j];
        ok = a.has_edge(x, w) == b.has_edge(y, map[w]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(k + 1)) return true;
      used[y] = 0;
      map[x] = SIZE_MAX;
    }
    return false;
  };
  return extend(0);
}

// ---------------------------------------------------------------------------
// Named families

enum class Family {
  CompleteMultipartite,
  Path,
  Cycle,
  ATilde,
  DTilde,
  ETilde,
  ATildePlus,
  DTildePlus,
  ETildePlus,
  B1,
  B2,
  B3,
  M,
  Isolated,
};

struct FamilySpec {
  Family family;
  std::vector<long> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Name used by the graph-expression grammar.
inline std::string_view family_token(Family f) {
  switch (f) {
    case Family::CompleteMultipartite: return "K";
    case Family::Path: return "P";
    case Family::Cycle: return "C";
    case Family::ATilde: return "At";
    case Family::DTilde: return "Dt";
    case Family::ETilde: return "Et";
    case Family::ATildePlus: return "At+";
    case Family::DTildePlus: return "Dt+";
    case Family::ETildePlus: return "Et+";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
    case Family::B3: return "B3";
    case Family::M: return "M";
    case Family::Isolated: return "iso";
  }
  return "?";
}

namespace detail {

inline void require(bool ok, Family f, const std::string& what) {
  if (!ok) throw ParameterError(std::string(family_token(f)) + ": " + what);
}

inline void require_arity(const FamilySpec& s, std::size_t n) {
  require(s.params.size() == n, s.family,
          "expects " + std::to_string(n) + " parameter(s), got " + std::to_string(s.params.size()));
}

inline Graph with_pendant(Graph g, Vertex at) {
  Vertex p = g.add_vertex();
  g.add_edge(at, p);
  return g;
}

inline Graph dtilde(std::size_t n) {
  // Path 0..n-2 with leaves n-1 on vertex 1 and n on vertex n-3.
  Graph g = path_graph(n - 1);
  Vertex a = g.add_vertex(), b = g.add_vertex();
  g.add_edge(1, a);
  g.add_edge(n - 3, b);
  return g;
}

inline Graph etilde(long index) {
  switch (index) {
    case 6: {
      // Path 0..4 with the arm 5-6 hanging from the centre 2.
      Graph g = path_graph(5);
      Vertex a = g.add_vertex(), b = g.add_vertex();
      g.add_edge(2, a);
      g.add_edge(a, b);
      return g;
    }
    case 7: {
      Graph g = path_graph(7);
      g.add_edge(3, g.add_vertex());
      return g;
    }
    default: {
      Graph g = path_graph(8);
      g.add_edge(2, g.add_vertex());
      return g;
    }
  }
}

}  // namespace detail

/// Vertex at which the `+` variant attaches its extra pendant.
inline Vertex plus_attachment(Family base, long index) {
  switch (base) {
    case Family::ATilde: return 0;
    case Family::DTilde: return static_cast<Vertex>(index - 2);
    case Family::ETilde: return index == 6 ? 4 : index == 7 ? 6 : 7;
    default: throw ParameterError("family has no + variant");
  }
}

/// M(s1, s2, t): edge xy (x = 0, y = 1); t pairs a_i ~ b_i with x ~ a_i and y ~ b_i;
/// then s1 vertices adjacent to x only and s2 vertices adjacent to y only.
inline Graph edge_neighbourhood_graph(std::size_t s1, std::size_t s2, std::size_t t) {
  Graph g(2);
  g.add_edge(0, 1);
  for (std::size_t i = 0; i < t; ++i) {
    Vertex a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(0, a);
    g.add_edge(1, b);
  }
  for (std::size_t i = 0; i < s1; ++i) g.add_edge(0, g.add_vertex());
  for (std::size_t i = 0; i < s2; ++i) g.add_edge(1, g.add_vertex());
  return g;
}

inline void validate(const FamilySpec& s) {
  using detail::require;
  using detail::require_arity;
  const auto& p = s.params;
  switch (s.family) {
    case Family::CompleteMultipartite:
      require(!p.empty(), s.family, "expects at least one part size");
      for (long a : p) require(a >= 1, s.family, "part sizes must be positive");
      break;
    case Family::Path:
      require_arity(s, 1);
      require(p[0] >= 1, s.family, "needs at least 1 vertex");
      break;
    case Family::Cycle:
      require_arity(s, 1);
      require(p[0] >= 3, s.family, "needs at least 3 vertices");
      break;
    case Family::ATilde:
    case Family::ATildePlus:
      require_arity(s, 1);
      require(p[0] >= 2, s.family, "requires n >= 2");
      break;
    case Family::DTilde:
    case Family::DTildePlus:
      require_arity(s, 1);
      require(p[0] >= 4, s.family, "requires n >= 4");
      break;
    case Family::ETilde:
    case Family::ETildePlus:
      require_arity(s, 1);
      require(p[0] >= 6 && p[0] <= 8, s.family, "index must be 6, 7 or 8");
      break;
    case Family::B1:
    case Family::B2:
    case Family::B3:
      require_arity(s, 0);
      break;
    case Family::M:
      require_arity(s, 3);
      for (long a : p) require(a >= 0, s.family, "parameters must be non-negative");
      break;
    case Family::Isolated:
      require_arity(s, 1);
      require(p[0] >= 0, s.family, "count must be non-negative");
      break;
  }
}

/// Builds the named graph with a fixed vertex layout.
inline Graph build_family(const FamilySpec& s) {
  validate(s);
  const auto& p = s.params;
  auto idx = [&](std::size_t i) { return static_cast<std::size_t>(p[i]); };
  switch (s.family) {
    case Family::CompleteMultipartite:
      if (p.size() == 1) return complete_graph(idx(0));
      {
        std::vector<std::size_t> parts;
        for (std::size_t i = 0; i < p.size(); ++i) parts.push_back(idx(i));
        return complete_multipartite(parts);
      }
    case Family::Path: return path_graph(idx(0));
    case Family::Cycle: return cycle_graph(idx(0));
    case Family::ATilde: return cycle_graph(idx(0) + 1);
    case Family::DTilde: return detail::dtilde(idx(0));
    case Family::ETilde: return detail::etilde(p[0]);
    case Family::ATildePlus:
      return detail::with_pendant(cycle_graph(idx(0) + 1), plus_attachment(Family::ATilde, p[0]));
    case Family::DTildePlus:
      return detail::with_pendant(detail::dtilde(idx(0)), plus_attachment(Family::DTilde, p[0]));
    case Family::ETildePlus:
      return detail::with_pendant(detail::etilde(p[0]), plus_attachment(Family::ETilde, p[0]));
    case Family::B1:
      // Two triangles sharing vertex 2.
      return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    case Family::B2:
      // K_{2,1,1} on {1, 2, 3, 4} (1 ~ 3 the shared edge) with pendants 0 and 5 at vertex 1.
      return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {1, 3}});
    case Family::B3:
      // The 3x2 ladder w1w2, w3w4, w5w6 (rungs) with rails w1w3w5 and w2w4w6.
      return Graph(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {1, 3}, {2, 4}, {3, 5}});
    case Family::M: return edge_neighbourhood_graph(idx(0), idx(1), idx(2));
    case Family::Isolated: return empty_graph(idx(0));
  }
  throw ParameterError("unknown family");
}

// ---------------------------------------------------------------------------
// Text serialization: "n m" then one "u v" line per edge, 0-based.

inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("expected header 'n m'", 0);
  Graph g(static_cast<std::size_t>(n));
  for (long long k = 0; k < m; ++k) {
    long long u = -1, v = -1;
    if (!(is >> u >> v) || u < 0 || v < 0)
      throw ParseError("expected edge line " + std::to_string(k + 1), static_cast<std::size_t>(is.tellg()));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing data after edge list", 0);
  return g;
}

}  // namespace seidelcert
