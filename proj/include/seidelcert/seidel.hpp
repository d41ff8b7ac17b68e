#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace seidelcert {

/// S = J - I - 2A: -1 on edges, +1 on non-edges, 0 on the diagonal.
inline IntegerMatrix seidel_integer_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntegerMatrix s(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) s(i, j) = 1;
  for (auto [u, v] : g.edges()) s(u, v) = s(v, u) = -1;
  return s;
}

inline ExactSymMatrix seidel_of(const Graph& g) { return ExactSymMatrix(to_rational(seidel_integer_matrix(g))); }

/// Inverse of seidel_of.
inline Graph graph_of_seidel(const ExactSymMatrix& s) {
  if (!s.is_seidel()) throw DomainError("not a Seidel matrix");
  Graph g(s.order());
  for (Vertex i = 0; i < s.order(); ++i)
    for (Vertex j = i + 1; j < s.order(); ++j)
      if (s(i, j) == -1) g.add_edge(i, j);
  return g;
}

/// Switching with respect to U: complements the edges between U and its complement.
inline Graph switched(const Graph& g, const VertexSet& u) {
  std::vector<char> in(g.order(), 0);
  for (Vertex x : u) {
    if (x >= g.order()) throw IndexError("vertex out of range");
    in[x] = 1;
  }
  Graph h(g.order());
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j) != (in[i] != in[j])) h.add_edge(i, j);
  return h;
}

/// Graph on 2n vertices (i and its copy n + i) with Seidel matrix [[S, -S+I], [-S+I, S]].
/// A vertex is never adjacent to its own copy; i ~ (n + j) iff i and j are non-adjacent in g.
inline Graph switching_graph(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw DomainError("switching graph needs at least 2 vertices");
  Graph h(2 * n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        h.add_edge(i, j);
        h.add_edge(n + i, n + j);
      } else {
        h.add_edge(i, n + j);
        h.add_edge(n + i, j);
      }
    }
  return h;
}

struct AlphaOmega {
  std::size_t alpha;
  std::size_t omega;
};

/// α([S]) and ω([S]) of the switching class of g, computed on its switching graph.
inline AlphaOmega class_alpha_omega(const Graph& g, std::size_t limit = kDefaultSearchLimit) {
  if (2 * g.order() > limit)
    throw CapacityError("switching graph of order " + std::to_string(2 * g.order()) + " exceeds search limit " +
                        std::to_string(limit));
  Graph sw = switching_graph(g);
  return {independence_number(sw, limit), clique_number(sw, limit)};
}

/// Exact rank of S + shift * I.
inline std::size_t rank_shifted(const ExactSymMatrix& s, const Rational& shift) {
  return rank(s.matrix().shifted(shift));
}

}  // namespace seidelcert
