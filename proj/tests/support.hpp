#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <seidelcert/graph.hpp>
#include <seidelcert/reduction.hpp>

namespace testsupport {

using seidelcert::BlockGroup;
using seidelcert::Graph;
using seidelcert::StructuredGraph;
using seidelcert::Vertex;

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<std::size_t> random_subset(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> u;
  for (std::size_t v = 0; v < n; ++v)
    if (coin(rng)) u.push_back(v);
  return u;
}

// Largest independent set by trying every subset; only for tiny graphs.
inline std::size_t brute_independence(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

// Random core with one attached group and K1 / K2 / P3 padding groups (some possibly empty).
inline StructuredGraph random_structured(std::mt19937& rng, int trial) {
  StructuredGraph s{random_graph(rng, 1 + trial % 5), {}};
  BlockGroup g;
  g.block = random_graph(rng, 1 + trial % 3);
  for (Vertex p = 0; p < g.block.order(); ++p) g.attachments.push_back(random_subset(rng, s.core.order()));
  g.copies = 1 + trial % 4;
  s.groups.push_back(g);
  s.groups.push_back(seidelcert::unattached_group(seidelcert::empty_graph(1), trial % 5));
  s.groups.push_back(seidelcert::unattached_group(seidelcert::complete_graph(2), trial % 3));
  s.groups.push_back(seidelcert::unattached_group(seidelcert::path_graph(3), trial % 2));
  return s;
}

}  // namespace testsupport
