#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <seidelcert/graph.hpp>
#include <seidelcert/graph_expr.hpp>
#include <seidelcert/independence.hpp>

#include "support.hpp"

using namespace seidelcert;

namespace {

Graph fam(Family f, std::vector<long> p = {}) { return build_family({f, std::move(p)}); }

std::vector<FamilySpec> all_family_instances() {
  std::vector<FamilySpec> out;
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) out.push_back({Family::CompleteMultipartite, {a, b}});
  out.push_back({Family::CompleteMultipartite, {2, 1, 1}});
  out.push_back({Family::CompleteMultipartite, {5}});
  for (long n = 1; n <= 12; ++n) out.push_back({Family::Path, {n}});
  for (long n = 3; n <= 12; ++n) out.push_back({Family::Cycle, {n}});
  for (long n = 2; n <= 11; ++n) {
    out.push_back({Family::ATilde, {n}});
    out.push_back({Family::ATildePlus, {n}});
  }
  for (long n = 4; n <= 11; ++n) {
    out.push_back({Family::DTilde, {n}});
    out.push_back({Family::DTildePlus, {n}});
  }
  for (long n = 6; n <= 8; ++n) {
    out.push_back({Family::ETilde, {n}});
    out.push_back({Family::ETildePlus, {n}});
  }
  out.push_back({Family::B1, {}});
  out.push_back({Family::B2, {}});
  out.push_back({Family::B3, {}});
  out.push_back({Family::M, {3, 2, 3}});
  out.push_back({Family::M, {0, 0, 0}});
  out.push_back({Family::Isolated, {4}});
  return out;
}

}  // namespace

TEST(Families, PaperExamples) {
  Graph k23 = fam(Family::CompleteMultipartite, {2, 3});
  EXPECT_EQ(k23.order(), 5u);
  EXPECT_EQ(k23.size(), 6u);
  Graph a2 = fam(Family::ATilde, {2});
  EXPECT_EQ(a2.order(), 3u);
  EXPECT_EQ(a2.size(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(a2.degree(v), 2u);
  Graph m = fam(Family::M, {3, 2, 3});
  EXPECT_EQ(m.order(), 13u);
  EXPECT_EQ(m.size(), 15u);
  EXPECT_EQ(m.degree(0), 7u);
  EXPECT_EQ(m.degree(1), 6u);
  // The affine E8 diagram has 9 vertices, so its pendant extension has 10.
  EXPECT_EQ(fam(Family::ETilde, {8}).order(), 9u);
  EXPECT_EQ(fam(Family::ETildePlus, {8}).order(), 10u);
}

TEST(Families, FixedLayouts) {
  Graph b1 = fam(Family::B1);
  EXPECT_EQ(b1.order(), 5u);
  EXPECT_EQ(b1.size(), 6u);
  EXPECT_EQ(b1.degree(2), 4u);
  Graph b2 = fam(Family::B2);
  EXPECT_EQ(b2.order(), 6u);
  EXPECT_EQ(b2.size(), 7u);
  Graph b3 = fam(Family::B3);
  EXPECT_EQ(b3.order(), 6u);
  EXPECT_EQ(b3.size(), 7u);
  EXPECT_TRUE(are_isomorphic(b3, fam(Family::M, {0, 0, 2})));
  EXPECT_TRUE(are_isomorphic(fam(Family::DTilde, {4}), star_graph(4)));
  // Ã_n⁺ is a cycle plus a pendant; D̃_n⁺ and Ẽ⁺ are trees.
  EXPECT_EQ(fam(Family::ATildePlus, {5}).size(), 7u);
  EXPECT_EQ(fam(Family::DTildePlus, {6}).size(), 7u);
  EXPECT_EQ(fam(Family::ETildePlus, {7}).size(), 8u);
  // The Ẽ7⁺ pendant extends a longest arm, leaving arms of length 4, 3 and 1.
  Graph e7p = fam(Family::ETildePlus, {7});
  Graph expected = path_graph(8);
  expected.add_edge(3, expected.add_vertex());
  EXPECT_TRUE(are_isomorphic(e7p, expected));
}

TEST(Families, HandshakeOnAllInstances) {
  for (const auto& spec : all_family_instances()) {
    Graph g = build_family(spec);
    std::size_t deg = 0;
    for (Vertex v = 0; v < g.order(); ++v) deg += g.degree(v);
    EXPECT_EQ(deg, 2 * g.size());
  }
}

TEST(Families, ParameterErrors) {
  EXPECT_THROW(fam(Family::ATilde, {1}), ParameterError);
  EXPECT_THROW(fam(Family::ETilde, {9}), ParameterError);
  EXPECT_THROW(fam(Family::M, {1, 2}), ParameterError);
  EXPECT_THROW(fam(Family::M, {1, -2, 0}), ParameterError);
  EXPECT_THROW(fam(Family::DTilde, {3}), ParameterError);
  try {
    fam(Family::ETildePlus, {5});
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("Et+"), std::string::npos);
  }
}

TEST(Operations, UnionPadCone) {
  Graph k2 = complete_graph(2);
  Graph u = disjoint_union(k2, k2);
  EXPECT_EQ(u.order(), 4u);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(disjoint_union(empty_graph(3), Graph()), empty_graph(3));
  Graph c33 = disjoint_union(cycle_graph(3), cycle_graph(3));
  EXPECT_EQ(connected_components(c33).size(), 2u);
  Graph p = pad(complete_graph(4), 5, 0, 0);
  EXPECT_EQ(p.order(), 9u);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(pad(Graph(), 0, 0, 0), Graph());
  Graph q = pad(complete_multipartite({2, 3}), 14, 1, 0);
  EXPECT_EQ(q.order(), 21u);
  EXPECT_EQ(q.size(), 7u);
  EXPECT_EQ(pad(Graph(), 1, 1, 1).size(), 3u);
  EXPECT_TRUE(are_isomorphic(cone(empty_graph(5)), star_graph(5)));
  EXPECT_EQ(cone(complete_graph(3)), complete_graph(4));
  EXPECT_EQ(cone(complete_graph(2)), complete_graph(3));
}

TEST(Operations, InducedSubgraph) {
  EXPECT_EQ(induced_subgraph(complete_graph(4), {0, 2, 3}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(cycle_graph(5), {}), Graph());
  EXPECT_EQ(induced_subgraph(complete_multipartite({2, 3}), {2, 3, 4}), empty_graph(3));
  EXPECT_THROW(induced_subgraph(complete_graph(3), {0, 3}), IndexError);
  // Order of U is preserved.
  Graph p3 = path_graph(3);
  Graph h = induced_subgraph(p3, {2, 1});
  EXPECT_TRUE(h.has_edge(0, 1));
}

TEST(Operations, SplitByNeighbourhood) {
  auto s = split_by_neighbourhood(path_graph(3), {1});
  EXPECT_EQ(s.neighbours, (VertexSet{0, 2}));
  EXPECT_TRUE(s.rest.empty());
  auto t = split_by_neighbourhood(disjoint_union(complete_graph(2), complete_graph(2)), {0, 1});
  EXPECT_TRUE(t.neighbours.empty());
  EXPECT_EQ(t.rest, (VertexSet{2, 3}));
  auto u = split_by_neighbourhood(star_graph(5), {0});
  EXPECT_EQ(u.neighbours.size(), 5u);
  EXPECT_TRUE(u.rest.empty());
}

TEST(Operations, SplitIsPartitionWithNoHToREdges) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_graph(rng, 1 + trial % 12, 0.25);
    VertexSet h = testsupport::random_subset(rng, g.order());
    auto s = split_by_neighbourhood(g, h);
    std::vector<int> seen(g.order(), 0);
    for (Vertex v : h) ++seen[v];
    for (Vertex v : s.neighbours) ++seen[v];
    for (Vertex v : s.rest) ++seen[v];
    for (int c : seen) EXPECT_EQ(c, 1);
    for (Vertex x : h)
      for (Vertex r : s.rest) EXPECT_FALSE(g.has_edge(x, r));
  }
}

TEST(Operations, TextRoundTrip) {
  Graph g = fam(Family::M, {3, 2, 3});
  EXPECT_EQ(from_text(to_text(g)), g);
  EXPECT_EQ(to_text(path_graph(3)), "3 2\n0 1\n1 2\n");
  EXPECT_THROW(from_text("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(from_text("2 1\n0 0\n"), ParameterError);
}

TEST(Independence, SmallValues) {
  EXPECT_EQ(independence_number(complete_graph(4)), 1u);
  EXPECT_EQ(clique_number(complete_graph(4)), 4u);
  EXPECT_EQ(independence_number(complete_multipartite({2, 3})), 3u);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2u);
  EXPECT_EQ(independence_number(Graph()), 0u);
  EXPECT_THROW(independence_number(empty_graph(51)), CapacityError);
  EXPECT_EQ(independence_number(empty_graph(60), 64), 60u);
}

TEST(Independence, AgreesWithBruteForceAndComplement) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_graph(rng, 1 + trial % 12, 0.1 + 0.8 * (trial % 7) / 6.0);
    std::size_t a = independence_number(g);
    EXPECT_EQ(a, testsupport::brute_independence(g));
    EXPECT_EQ(a, clique_number(complement(g)));
  }
}

TEST(Expressions, PaperExamples) {
  Graph a = parse_graph_expr("K(1,5) + iso(41)");
  EXPECT_EQ(a.order(), 47u);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_EQ(parse_graph_expr("Et+(8) + iso(2477)").order(), 2487u);
  Graph c = parse_graph_expr("2*K(2) + B3");
  EXPECT_EQ(c.order(), 10u);
  EXPECT_EQ(c.size(), 9u);
}

TEST(Expressions, GrammarFeatures) {
  EXPECT_TRUE(are_isomorphic(parse_graph_expr("cone(iso(5))"), star_graph(5)));
  EXPECT_EQ(parse_graph_expr("  3 * ( K(2) + iso(1) ) ").order(), 9u);
  EXPECT_EQ(parse_graph_expr("At+(2)").order(), 4u);
  EXPECT_EQ(parse_graph_expr("At(2)+At(2)").order(), 6u);
  EXPECT_EQ(parse_graph_expr("At(2) + At(2)").size(), 6u);
  EXPECT_EQ(parse_graph_expr("0*K(3)"), Graph());
  EXPECT_EQ(parse_graph_expr("M(3,2,3)"), build_family({Family::M, {3, 2, 3}}));
}

TEST(Expressions, ErrorsCarryOffsets) {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_graph_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("K(2) + Q(3)"), 7);
  EXPECT_EQ(offset_of("K(2,"), 4);
  EXPECT_EQ(offset_of("K(2) +"), 6);
  EXPECT_EQ(offset_of("K(2))"), 4);
  EXPECT_EQ(offset_of("3 K(2)"), 2);
  EXPECT_THROW(parse_graph_expr("At"), ParameterError);
  EXPECT_THROW(parse_graph_expr("M(1,2)"), ParameterError);
}

TEST(Expressions, CanonicalRoundTrip) {
  for (const char* text : {"K(1,5) + iso(41)", "2*K(2) + B3", "cone(K(3) + 2*P(4)) + Et+(8)",
                           "(At+(2) + Dt(5)) + M(3,2,3)", "3*cone(iso(2))"}) {
    GraphExpr e = parse_expr(text);
    EXPECT_EQ(to_string(e), text);
    EXPECT_EQ(to_string(parse_expr(to_string(e))), to_string(e));
  }
  EXPECT_EQ(to_string(parse_expr(" 2 *K( 2 )+B3 ")), "2*K(2) + B3");
}

TEST(Isomorphism, RelabellingAndNonIsomorphicPairs) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testsupport::random_graph(rng, 2 + trial % 9, 0.4);
    VertexSet perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_TRUE(are_isomorphic(g, induced_subgraph(g, perm)));
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_FALSE(are_isomorphic(fam(Family::DTilde, {6}), fam(Family::ETilde, {6})));
}
