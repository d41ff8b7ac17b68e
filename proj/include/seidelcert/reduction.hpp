#pragma once

// Seidel spectra of graphs made of a core plus many identical blocks.
//
// A group is c disjoint copies of a block graph T (k vertices) whose p-th
// vertex is joined to the same core vertices in every copy. Copies are never
// adjacent to each other or to other groups. Partitioning the vertex set into
// core singletons and, per group, the k "position" cells is equitable for S,
// so S acts on cell-constant vectors through a small quotient Q. On vectors
// supported on one group whose copies sum to zero, S acts as S(T) - J, and
// these subspaces fill up the rest of the space. Hence
//
//   det(xI - S) = det(xI - Q) * prod over groups det(xI - (S(T) - J))^(c - 1).

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "exactspec.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "seidel.hpp"

namespace seidelcert {

struct BlockGroup {
  Graph block;
  /// attachments[p]: core vertices adjacent to position p of every copy.
  std::vector<VertexSet> attachments;
  std::size_t copies = 0;
};

struct StructuredGraph {
  Graph core;
  std::vector<BlockGroup> groups;

  std::size_t order() const {
    std::size_t n = core.order();
    for (const auto& g : groups) n += g.block.order() * g.copies;
    return n;
  }

  /// Number of cells of the equitable partition.
  std::size_t reduced_order() const {
    std::size_t n = core.order();
    for (const auto& g : groups)
      if (g.copies > 0) n += g.block.order();
    return n;
  }

  void validate() const {
    for (const auto& g : groups) {
      if (g.attachments.size() != g.block.order())
        throw ParameterError("one attachment set per block vertex expected");
      for (const auto& a : g.attachments)
        for (Vertex u : a)
          if (u >= core.order()) throw IndexError("attachment outside the core");
    }
  }
};

inline BlockGroup unattached_group(Graph block, std::size_t copies) {
  BlockGroup g;
  g.attachments.assign(block.order(), {});
  g.block = std::move(block);
  g.copies = copies;
  return g;
}

/// Core vertices first, then each group copy by copy.
inline Graph expand(const StructuredGraph& s) {
  s.validate();
  Graph g(s.order());
  for (auto [u, v] : s.core.edges()) g.add_edge(u, v);
  Vertex next = s.core.order();
  for (const auto& grp : s.groups) {
    const auto block_edges = grp.block.edges();
    for (std::size_t c = 0; c < grp.copies; ++c) {
      for (auto [a, b] : block_edges) g.add_edge(next + a, next + b);
      for (Vertex p = 0; p < grp.block.order(); ++p)
        for (Vertex u : grp.attachments[p]) g.add_edge(u, next + p);
      next += grp.block.order();
    }
  }
  return g;
}

/// core ⊔ t1 K1 ⊔ t2 K2 ⊔ t3 P3 in structured form.
inline StructuredGraph padded(const Graph& core, std::size_t t1, std::size_t t2, std::size_t t3) {
  StructuredGraph s{core, {}};
  if (t1) s.groups.push_back(unattached_group(empty_graph(1), t1));
  if (t2) s.groups.push_back(unattached_group(complete_graph(2), t2));
  if (t3) s.groups.push_back(unattached_group(path_graph(3), t3));
  return s;
}

/// Groups isomorphic connected components (of at most `max_block` vertices)
/// that occur at least twice; everything else stays in the core.
inline StructuredGraph decompose(const Graph& g, std::size_t max_block = 16) {
  auto comps = connected_components(g);
  struct Class {
    Graph rep;
    std::vector<std::size_t> members;
  };
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::vector<Class>> classes;
  std::vector<std::pair<std::size_t, std::size_t>> where(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].size() > max_block) continue;
    Graph h = induced_subgraph(g, comps[i]);
    std::vector<std::size_t> degs(h.order());
    for (Vertex v = 0; v < h.order(); ++v) degs[v] = h.degree(v);
    std::sort(degs.begin(), degs.end());
    auto& bucket = classes[{h.order(), h.size(), degs}];
    bool placed = false;
    for (auto& cls : bucket)
      if (are_isomorphic(cls.rep, h)) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) bucket.push_back({std::move(h), {i}});
  }
  std::vector<char> grouped(comps.size(), 0);
  StructuredGraph s;
  for (auto& [key, bucket] : classes)
    for (auto& cls : bucket) {
      if (cls.members.size() < 2) continue;
      for (std::size_t i : cls.members) grouped[i] = 1;
      s.groups.push_back(unattached_group(std::move(cls.rep), cls.members.size()));
    }
  VertexSet core;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!grouped[i]) core.insert(core.end(), comps[i].begin(), comps[i].end());
  std::sort(core.begin(), core.end());
  s.core = induced_subgraph(g, core);
  return s;
}

namespace detail {

inline int seidel_entry(bool adjacent) { return adjacent ? -1 : 1; }

struct CellLayout {
  std::vector<std::size_t> group_offset;  // first cell of each group, or SIZE_MAX when empty
  std::size_t cells = 0;
};

inline CellLayout layout(const StructuredGraph& s) {
  CellLayout l;
  l.cells = s.core.order();
  for (const auto& g : s.groups) {
    l.group_offset.push_back(g.copies > 0 ? l.cells : SIZE_MAX);
    if (g.copies > 0) l.cells += g.block.order();
  }
  return l;
}

}  // namespace detail

/// Quotient of S over the partition {core singletons} ∪ {position cells}.
inline IntegerMatrix seidel_quotient(const StructuredGraph& s) {
  s.validate();
  const auto l = detail::layout(s);
  IntegerMatrix q(l.cells, l.cells);
  const std::size_t nc = s.core.order();
  for (Vertex u = 0; u < nc; ++u)
    for (Vertex v = 0; v < nc; ++v)
      if (u != v) q(u, v) = detail::seidel_entry(s.core.has_edge(u, v));
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const auto& g = s.groups[gi];
    if (g.copies == 0) continue;
    const std::size_t off = l.group_offset[gi];
    const Integer c(static_cast<unsigned long>(g.copies));
    const std::size_t k = g.block.order();
    for (Vertex p = 0; p < k; ++p) {
      std::vector<char> att(nc, 0);
      for (Vertex u : g.attachments[p]) att[u] = 1;
      for (Vertex u = 0; u < nc; ++u) {
        int e = detail::seidel_entry(att[u]);
        q(u, off + p) = c * e;
        q(off + p, u) = e;
      }
      for (Vertex p2 = 0; p2 < k; ++p2) {
        int within = p == p2 ? 0 : detail::seidel_entry(g.block.has_edge(p, p2));
        q(off + p, off + p2) = within + (c - 1);
      }
      for (std::size_t gj = 0; gj < s.groups.size(); ++gj) {
        if (gj == gi || s.groups[gj].copies == 0) continue;
        const Integer c2(static_cast<unsigned long>(s.groups[gj].copies));
        for (Vertex p2 = 0; p2 < s.groups[gj].block.order(); ++p2) q(off + p, l.group_offset[gj] + p2) = c2;
      }
    }
  }
  return q;
}

/// Cell sizes D with D * Q symmetric.
inline std::vector<Integer> seidel_cell_sizes(const StructuredGraph& s) {
  std::vector<Integer> d(s.core.order(), 1);
  for (const auto& g : s.groups)
    if (g.copies > 0) d.insert(d.end(), g.block.order(), Integer(static_cast<unsigned long>(g.copies)));
  return d;
}

/// S(T) - J: the action of S on copy-differences within one group.
inline IntegerMatrix internal_matrix(const Graph& block) {
  IntegerMatrix m = seidel_integer_matrix(block);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= 1;
  return m;
}

inline CharPoly structured_char_poly(const StructuredGraph& s) {
  CharPoly p = characteristic_polynomial(seidel_quotient(s));
  for (const auto& g : s.groups)
    if (g.copies >= 2) p = p * characteristic_polynomial(internal_matrix(g.block)).pow(g.copies - 1);
  return p;
}

/// Least Seidel eigenvalue of the expanded graph against q, on the reduced data.
/// The quotient is decided twice, by the coefficient signs of its
/// characteristic polynomial and by a PSD certificate of D(Q - qI), which is
/// congruent to the symmetrised quotient; disagreement is a bug and throws.
inline SpectralVerdict structured_lambda_min_cmp(const StructuredGraph& s, const Rational& q) {
  SpectralVerdict v;
  if (s.reduced_order() == 0) return v;
  IntegerMatrix quot = seidel_quotient(s);
  Relation by_poly = min_root_relation(characteristic_polynomial(quot), q);

  auto d = seidel_cell_sizes(s);
  RationalMatrix dq(quot.rows(), quot.cols());
  for (std::size_t i = 0; i < quot.rows(); ++i)
    for (std::size_t j = 0; j < quot.cols(); ++j) dq(i, j) = Rational(d[i] * (quot(i, j) - (i == j ? q : Rational(0))));
  auto cert = psd_certificate(dq);
  Relation by_psd = !cert.psd ? Relation::Below : cert.positive_pivots < dq.rows() ? Relation::Equal : Relation::Above;
  if (by_poly != by_psd) throw std::logic_error("quotient verdicts disagree");

  v.relation = by_poly;
  v.witness = "quotient of order " + std::to_string(quot.rows()) + ": " + to_string(by_poly);
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const auto& g = s.groups[gi];
    if (g.copies < 2) continue;
    Relation r = min_root_relation(characteristic_polynomial(internal_matrix(g.block)), q);
    if (r == Relation::Below || (r == Relation::Equal && v.relation == Relation::Above)) {
      v.relation = r;
      v.witness = "copy differences of group " + std::to_string(gi) + ": " + to_string(r);
    }
  }
  return v;
}

/// Multiplicity of q in the Seidel spectrum of the expanded graph.
inline std::size_t structured_multiplicity(const StructuredGraph& s, const Rational& q) {
  std::size_t m = root_multiplicity(characteristic_polynomial(seidel_quotient(s)), q);
  for (const auto& g : s.groups)
    if (g.copies >= 2) m += (g.copies - 1) * root_multiplicity(characteristic_polynomial(internal_matrix(g.block)), q);
  return m;
}

/// One structured graph per vertex orbit under copy permutations, with that vertex removed.
inline std::vector<StructuredGraph> vertex_deletions(const StructuredGraph& s) {
  s.validate();
  std::vector<StructuredGraph> out;
  for (Vertex u = 0; u < s.core.order(); ++u) {
    StructuredGraph t{delete_vertex(s.core, u), s.groups};
    for (auto& g : t.groups)
      for (auto& att : g.attachments) {
        VertexSet kept;
        for (Vertex w : att)
          if (w != u) kept.push_back(w > u ? w - 1 : w);
        att = std::move(kept);
      }
    out.push_back(std::move(t));
  }
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const auto& g = s.groups[gi];
    if (g.copies == 0) continue;
    for (Vertex p = 0; p < g.block.order(); ++p) {
      StructuredGraph t = s;
      t.groups[gi].copies -= 1;
      if (g.block.order() > 1) {
        BlockGroup rest;
        rest.block = delete_vertex(g.block, p);
        for (Vertex p2 = 0; p2 < g.block.order(); ++p2)
          if (p2 != p) rest.attachments.push_back(g.attachments[p2]);
        rest.copies = 1;
        t.groups.push_back(std::move(rest));
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

/// For each entry of vertex_deletions(s), the deleted vertex as numbered by expand(s).
inline std::vector<Vertex> deletion_representatives(const StructuredGraph& s) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < s.core.order(); ++u) out.push_back(u);
  Vertex offset = s.core.order();
  for (const auto& g : s.groups) {
    if (g.copies > 0)
      for (Vertex p = 0; p < g.block.order(); ++p) out.push_back(offset + p);
    offset += g.block.order() * g.copies;
  }
  return out;
}

/// λ_min(S(g)) against q, reducing repeated components first.
inline SpectralVerdict seidel_lambda_min_cmp(const Graph& g, const Rational& q) {
  StructuredGraph s = decompose(g);
  if (s.reduced_order() <= kCharPolyOrderLimit) return structured_lambda_min_cmp(s, q);
  return lambda_min_cmp(seidel_of(g), q);
}

/// λ_min(S(core ⊔ t1 K1 ⊔ t2 K2 ⊔ t3 P3)) against q through the reduced matrix.
inline SpectralVerdict lambda_min_cmp_padded(const Graph& core, std::size_t t1, std::size_t t2, std::size_t t3,
                                             const Rational& q) {
  if (q > -3) throw DomainError("padded comparison requires q <= -3");
  return structured_lambda_min_cmp(padded(core, t1, t2, t3), q);
}

}  // namespace seidelcert
