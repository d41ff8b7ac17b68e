#include <gtest/gtest.h>

#include <random>

#include <seidelcert/exactspec.hpp>
#include <seidelcert/graph_expr.hpp>
#include <seidelcert/reduction.hpp>
#include <seidelcert/seidel.hpp>

#include "support.hpp"

using namespace seidelcert;

namespace {

Graph fam(Family f, std::vector<long> p = {}) { return build_family({f, std::move(p)}); }

ExactSymMatrix random_rational_symmetric(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = m(j, i) = x;
    }
  return ExactSymMatrix(m);
}

// Largest root of p against largest root of q.
Relation largest_root_cmp(const Polynomial& p, const Polynomial& q) {
  return flip(compare_smallest_roots(p.reflect(), q.reflect()));
}

Polynomial adjacency_poly(const Graph& g) { return characteristic_polynomial(adjacency_matrix(g)); }
Polynomial seidel_poly(const Graph& g) { return characteristic_polynomial(seidel_integer_matrix(g)); }

std::vector<Graph> corollary_graphs() {
  std::vector<Graph> out;
  for (long n = 2; n <= 7; ++n) out.push_back(fam(Family::ATildePlus, {n}));
  out.push_back(fam(Family::CompleteMultipartite, {2, 1, 1}));
  out.push_back(complete_graph(4));
  out.push_back(fam(Family::CompleteMultipartite, {2, 3}));
  out.push_back(star_graph(5));
  for (long n = 4; n <= 8; ++n) out.push_back(fam(Family::DTildePlus, {n}));
  for (long n = 6; n <= 8; ++n) out.push_back(fam(Family::ETildePlus, {n}));
  return out;
}

}  // namespace

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(ExactSymMatrix(RationalMatrix(2, 2))), Polynomial({0, 0, 1}));
  EXPECT_EQ(char_poly(seidel_of(complete_graph(2))), Polynomial({-1, 0, 1}));
  Polynomial expected = Polynomial::linear_root(-5) * Polynomial::linear_root(1).pow(5);
  EXPECT_EQ(char_poly(seidel_of(parse_graph_expr("2*At(2)"))), expected);
}

TEST(LambdaMin, Examples) {
  // One below the minimal padding the least eigenvalue sits exactly on -5.
  EXPECT_EQ(lambda_min_cmp(seidel_of(pad(star_graph(5), 40, 0, 0)), -5), Relation::Equal);
  EXPECT_EQ(lambda_min_cmp(seidel_of(pad(star_graph(5), 39, 0, 0)), -5), Relation::Above);
  EXPECT_EQ(lambda_min_cmp(seidel_of(pad(star_graph(5), 41, 0, 0)), -5), Relation::Below);
  EXPECT_EQ(lambda_min_cmp(seidel_of(empty_graph(7)), -1), Relation::Equal);
  EXPECT_EQ(lambda_min_cmp(seidel_of(parse_graph_expr("2*At(2)")), -5), Relation::Equal);
  // Beyond order 64 the PSD route answers.
  EXPECT_EQ(lambda_min_cmp(seidel_of(empty_graph(70)), -1), Relation::Equal);
  EXPECT_EQ(lambda_min_cmp(seidel_of(pad(star_graph(5), 60, 0, 0)), -5), Relation::Below);
}

TEST(LambdaMin, SignCriterionAgreesWithSturmAndPsd) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> qn(-12, 12), qd(1, 4);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 500; ++trial) {
    ExactSymMatrix m = random_rational_symmetric(rng, 1 + trial % 8);
    Rational q(qn(rng), qd(rng));
    q.canonicalize();
    // Hit eigenvalues exactly now and then.
    if (trial % 5 == 0) {
      auto roots = integer_roots(char_poly(m));
      if (!roots.empty()) q = Rational(roots.front());
    }
    Relation a = lambda_min_cmp(m, q).relation;
    EXPECT_EQ(a, lambda_min_cmp_sturm(m, q).relation);
    EXPECT_EQ(a, lambda_min_cmp_psd(m, q).relation);
    ++counts[static_cast<int>(a)];
  }
  EXPECT_GT(counts[0], 50);
  EXPECT_GT(counts[1], 5);
  EXPECT_GT(counts[2], 50);
}

TEST(SpectralRadius, Examples) {
  EXPECT_EQ(spectral_radius_cmp(cycle_graph(3), 2), Relation::Equal);
  EXPECT_EQ(spectral_radius_cmp(path_graph(4), 2), Relation::Below);
  EXPECT_EQ(spectral_radius_cmp(complete_graph(4), 2), Relation::Above);
  EXPECT_EQ(spectral_radius_cmp(disjoint_union(path_graph(3), cycle_graph(5)), 2), Relation::Equal);
  EXPECT_EQ(spectral_radius_cmp(empty_graph(3), 0), Relation::Equal);
  EXPECT_EQ(spectral_radius_cmp(Graph(), 1), Relation::Below);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(eigen_multiplicity(seidel_of(parse_graph_expr("2*At(2)")), -5), 1u);
  EXPECT_EQ(eigen_multiplicity(seidel_of(parse_graph_expr("3*At(2)")), -5), 2u);
  EXPECT_EQ(eigen_multiplicity(seidel_of(complete_graph(2)), -5), 0u);
  EXPECT_EQ(eigen_multiplicity(seidel_of(empty_graph(70)), -1), 69u);
}

// Components with spectral radius exactly 2 each contribute to -5, less one.
TEST(Multiplicity, MinusFiveCountsRhoTwoComponents) {
  const char* exprs[] = {"At(2) + At(4) + Dt(5)", "Et(6) + Et(7) + Et(8) + At(3)", "2*Dt(4) + P(3)"};
  const std::size_t expected[] = {2, 3, 1};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(eigen_multiplicity(seidel_of(parse_graph_expr(exprs[i])), -5), expected[i]);
}

TEST(Interlacing, Examples) {
  std::mt19937 rng(9);
  ExactSymMatrix b = random_rational_symmetric(rng, 5);
  EXPECT_TRUE(interlace_check(b, b));
  std::vector<std::size_t> idx{0, 1};
  EXPECT_TRUE(interlace_check(seidel_of(complete_graph(3)), seidel_of(complete_graph(2)), idx));
  // A spectrum that sits outside B's range cannot interlace.
  EXPECT_FALSE(interlace_check(ExactSymMatrix(RationalMatrix(2, 2)), ExactSymMatrix::from_rows({{5}})));
  // {2, 0} interlaces {3, 1, -1}; {2, 2} does not.
  auto bdiag = ExactSymMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  EXPECT_TRUE(interlace_check(bdiag, ExactSymMatrix::from_rows({{2, 0}, {0, 0}})));
  EXPECT_FALSE(interlace_check(bdiag, ExactSymMatrix::from_rows({{2, 0}, {0, 2}})));
  EXPECT_THROW(interlace_check(seidel_of(complete_graph(3)), seidel_of(empty_graph(2)), idx), DomainError);
  EXPECT_THROW(interlace_check(seidel_of(complete_graph(2)), seidel_of(complete_graph(3))), DomainError);
}

TEST(Interlacing, RandomPrincipalSubmatrices) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_graph(rng, 8);
    std::vector<std::size_t> all{0, 1, 2, 3, 4, 5, 6, 7};
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> idx(all.begin(), all.begin() + 5);
    ExactSymMatrix b = seidel_of(g);
    EXPECT_TRUE(interlace_check(b, b.principal(idx), idx));
  }
}

TEST(Smith, Examples) {
  auto d4 = smith_classify(fam(Family::DTilde, {4}));
  ASSERT_EQ(d4.kind, SmithKind::RhoEqual2);
  EXPECT_EQ(*d4.family, (FamilySpec{Family::DTilde, {4}}));
  EXPECT_EQ(smith_classify(path_graph(7)).kind, SmithKind::RhoBelow2);
  EXPECT_EQ(smith_classify(complete_multipartite({2, 3})).kind, SmithKind::RhoAbove2);
  EXPECT_THROW(smith_classify(empty_graph(2)), DomainError);
}

TEST(Smith, EveryFamilyInstanceUpTo13Vertices) {
  for (long n = 2; n <= 12; ++n) {
    FamilySpec a{Family::ATilde, {n}};
    EXPECT_EQ(*smith_classify(build_family(a)).family, a);
  }
  for (long n = 4; n <= 12; ++n) {
    FamilySpec d{Family::DTilde, {n}};
    EXPECT_EQ(*smith_classify(build_family(d)).family, d);
  }
  for (long n = 6; n <= 8; ++n) {
    FamilySpec e{Family::ETilde, {n}};
    EXPECT_EQ(*smith_classify(build_family(e)).family, e);
  }
  for (long n = 1; n <= 13; ++n) EXPECT_EQ(smith_classify(path_graph(n)).kind, SmithKind::RhoBelow2);
}

TEST(Smith, EigenvectorLabels) {
  std::vector<FamilySpec> specs;
  for (long n = 2; n <= 11; ++n) specs.push_back({Family::ATilde, {n}});
  for (long n = 4; n <= 11; ++n) specs.push_back({Family::DTilde, {n}});
  for (long n = 6; n <= 8; ++n) specs.push_back({Family::ETilde, {n}});
  for (const auto& spec : specs) {
    Graph g = build_family(spec);
    auto v = smith_eigenvector(spec);
    ASSERT_EQ(v.size(), g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
      long sum = 0;
      for (Vertex y : g.neighbours(x)) sum += v[y];
      EXPECT_EQ(sum, 2 * v[x]);
    }
  }
  EXPECT_EQ(smith_eigenvector({Family::ETilde, {8}}), (std::vector<long>{2, 4, 6, 5, 4, 3, 2, 1, 3}));
}

TEST(Smith, EighteenMinimalGraphs) {
  auto graphs = corollary_graphs();
  ASSERT_EQ(graphs.size(), 18u);
  for (const auto& g : graphs) {
    EXPECT_EQ(smith_classify(g).kind, SmithKind::RhoAbove2);
    EXPECT_TRUE(is_minimal_rho_above2(g));
  }
  EXPECT_FALSE(is_minimal_rho_above2(complete_graph(5)));
  EXPECT_FALSE(is_minimal_rho_above2(cycle_graph(5)));
}

TEST(SmallestRoots, Comparison) {
  Polynomial a = Polynomial({-2, 0, 1});                       // ±√2
  Polynomial b = Polynomial({-2, 0, 1}) * Polynomial::linear_root(5);
  Polynomial c = Polynomial({-3, 0, 1});                       // ±√3
  EXPECT_EQ(compare_smallest_roots(a, b), Relation::Equal);
  EXPECT_EQ(compare_smallest_roots(a, c), Relation::Above);
  EXPECT_EQ(compare_smallest_roots(c, a), Relation::Below);
  EXPECT_EQ(compare_smallest_roots(Polynomial::linear_root(Rational(1, 2)), a), Relation::Above);
  EXPECT_EQ(compare_smallest_roots(Polynomial::linear_root(-1), Polynomial({-1, 0, 1})), Relation::Equal);
}

TEST(SpectralBounds, LambdaMinAtLeastMinusTwoRhoMinusOne) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_graph(rng, 1 + trial % 10, 0.2 + 0.6 * (trial % 4) / 3.0);
    // λ_min(S) >= -2ρ - 1  ⇔  (λ_min + 1)/2 >= -ρ: compare least roots of p_S(2x - 1) and p_A(-x).
    Relation r = compare_smallest_roots(seidel_poly(g).compose_linear(2, -1), adjacency_poly(g).reflect());
    EXPECT_NE(r, Relation::Below);
  }
}

TEST(SpectralBounds, InducedSubgraphMonotonicity) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testsupport::random_graph(rng, 2 + trial % 9);
    VertexSet u = testsupport::random_subset(rng, g.order());
    if (u.empty()) continue;
    Graph h = induced_subgraph(g, u);
    EXPECT_NE(compare_smallest_roots(seidel_poly(h), seidel_poly(g)), Relation::Below);
  }
}

// If ρ(H) > θ := (-λ_min(S(g)) - 1)/2 for an induced H, then ρ(R(H)) < θ.
TEST(SpectralBounds, OneLargeComponent) {
  std::mt19937 rng(24);
  int exercised = 0;
  for (int trial = 0; trial < 400 && exercised < 100; ++trial) {
    Graph g = testsupport::random_graph(rng, 6 + trial % 6, 0.25);
    Polynomial theta = seidel_poly(g).compose_linear(-2, -1);  // largest root is θ
    VertexSet h = testsupport::random_subset(rng, g.order());
    if (h.empty()) continue;
    if (largest_root_cmp(adjacency_poly(induced_subgraph(g, h)), theta) != Relation::Above) continue;
    auto split = split_by_neighbourhood(g, h);
    if (split.rest.empty()) continue;
    ++exercised;
    EXPECT_EQ(largest_root_cmp(adjacency_poly(induced_subgraph(g, split.rest)), theta), Relation::Below);
  }
  EXPECT_GT(exercised, 20);
}

// ---------------------------------------------------------------------------
// Reduction

TEST(Reduction, ExpandMatchesPad) {
  Graph core = complete_multipartite({2, 3});
  EXPECT_EQ(expand(padded(core, 3, 2, 1)), pad(core, 3, 2, 1));
}

TEST(Reduction, QuotientIsEquitableRowSumsOfExpandedMatrix) {
  std::mt19937 rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    StructuredGraph s{testsupport::random_graph(rng, 1 + trial % 4), {}};
    BlockGroup g;
    g.block = testsupport::random_graph(rng, 1 + trial % 3);
    for (Vertex p = 0; p < g.block.order(); ++p) g.attachments.push_back(testsupport::random_subset(rng, s.core.order()));
    g.copies = 1 + trial % 4;
    s.groups.push_back(g);
    s.groups.push_back(unattached_group(complete_graph(2), trial % 3));
    IntegerMatrix q = seidel_quotient(s);
    IntegerMatrix full = seidel_integer_matrix(expand(s));
    EXPECT_EQ(structured_char_poly(s), characteristic_polynomial(full));
    // Row sums of the first vertex of each cell reproduce Q.
    std::vector<std::vector<std::size_t>> cells;
    for (Vertex u = 0; u < s.core.order(); ++u) cells.push_back({u});
    Vertex next = s.core.order();
    for (const auto& grp : s.groups) {
      if (grp.copies == 0) continue;
      std::vector<std::vector<std::size_t>> pos(grp.block.order());
      for (std::size_t c = 0; c < grp.copies; ++c)
        for (Vertex p = 0; p < grp.block.order(); ++p) pos[p].push_back(next++);
      cells.insert(cells.end(), pos.begin(), pos.end());
    }
    ASSERT_EQ(cells.size(), q.rows());
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t row : cells[i])
        for (std::size_t j = 0; j < cells.size(); ++j) {
          Integer sum = 0;
          for (std::size_t col : cells[j]) sum += full(row, col);
          EXPECT_EQ(sum, q(i, j));
        }
  }
}

// Oracle: direct exact verdict on the full Seidel matrix.
TEST(Reduction, PaddedAgreesWithDirectOnSmallCores) {
  std::mt19937 rng(31);
  std::size_t checked = 0;
  for (int trial = 0; trial < 24; ++trial) {
    Graph core = testsupport::random_graph(rng, 1 + trial % 8, 0.3 + 0.4 * (trial % 3) / 2.0);
    for (std::size_t t1 = 0; t1 <= 4; ++t1)
      for (std::size_t t2 = 0; t2 <= 4; ++t2)
        for (std::size_t t3 = 0; t3 <= 4; ++t3) {
          Relation fast = lambda_min_cmp_padded(core, t1, t2, t3, -5).relation;
          ExactSymMatrix s = seidel_of(pad(core, t1, t2, t3));
          EXPECT_EQ(fast, lambda_min_cmp_psd(s, -5).relation);
          if ((t1 + t2 + t3) % 7 == 0) EXPECT_EQ(fast, lambda_min_cmp(s, -5).relation);
          ++checked;
        }
  }
  EXPECT_EQ(checked, 24u * 125u);
}

TEST(Reduction, PaddedAgreesAtOtherThresholds) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    Graph core = testsupport::random_graph(rng, 1 + trial % 7);
    std::size_t t1 = trial % 5, t2 = trial % 3, t3 = trial % 2;
    for (Rational q : {Rational(-3), Rational(-4), Rational(-7, 2), Rational(-13, 4)})
      EXPECT_EQ(lambda_min_cmp_padded(core, t1, t2, t3, q).relation,
                lambda_min_cmp(seidel_of(pad(core, t1, t2, t3)), q).relation);
  }
  EXPECT_THROW(lambda_min_cmp_padded(complete_graph(2), 1, 0, 0, -2), DomainError);
}

TEST(Reduction, PaperPaddingExamples) {
  Graph e8p = fam(Family::ETildePlus, {8});
  EXPECT_EQ(lambda_min_cmp_padded(e8p, 2477, 0, 0, -5), Relation::Below);
  EXPECT_EQ(lambda_min_cmp_padded(e8p, 2476, 0, 0, -5), Relation::Equal);
  EXPECT_EQ(lambda_min_cmp_padded(e8p, 2475, 0, 0, -5), Relation::Above);
  for (std::size_t s : {0, 5, 40, 1000})
    for (std::size_t t : {0, 3, 50}) EXPECT_NE(lambda_min_cmp_padded(star_graph(4), s, t, 0, -5), Relation::Below);
}

// On copy differences the shifted matrix S + 5I acts with eigenvalue 4 (isolated
// vertices) and 6 (antisymmetric vector on one K2).
TEST(Reduction, InternalDirections) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    Graph core = testsupport::random_graph(rng, 1 + trial % 6);
    std::size_t t1 = 2 + trial % 3, t2 = 1 + trial % 3;
    Graph g = pad(core, t1, t2, 0);
    IntegerMatrix m = seidel_integer_matrix(g).shifted(5);
    const std::size_t n = g.order(), base = core.order();
    std::vector<Integer> x(n, 0), y(n, 0);
    x[base] = 1;
    x[base + 1] = -1;
    y[base + t1] = 1;
    y[base + t1 + 1] = -1;
    for (std::size_t i = 0; i < n; ++i) {
      Integer mx = 0, my = 0;
      for (std::size_t j = 0; j < n; ++j) {
        mx += m(i, j) * x[j];
        my += m(i, j) * y[j];
      }
      EXPECT_EQ(mx, 4 * x[i]);
      EXPECT_EQ(my, 6 * y[i]);
    }
  }
}

TEST(Reduction, DecomposeRoundTrip) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    Graph block = testsupport::random_graph(rng, 1 + trial % 4);
    Graph g = disjoint_union(testsupport::random_graph(rng, 3 + trial % 4), repeat(block, 2 + trial % 5));
    g = disjoint_union(g, pad(Graph(), trial % 4, trial % 3, 0));
    StructuredGraph s = decompose(g);
    EXPECT_EQ(s.order(), g.order());
    EXPECT_LE(s.reduced_order(), g.order());
    EXPECT_TRUE(are_isomorphic(expand(s), g));
    EXPECT_EQ(structured_char_poly(s), seidel_poly(g));
  }
}

TEST(Reduction, VertexDeletionsMatchDirectDeletions) {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    StructuredGraph s{testsupport::random_graph(rng, 2 + trial % 3), {}};
    BlockGroup g;
    g.block = path_graph(2 + trial % 2);
    for (Vertex p = 0; p < g.block.order(); ++p) g.attachments.push_back(testsupport::random_subset(rng, s.core.order()));
    g.copies = 2 + trial % 3;
    s.groups.push_back(g);
    s.groups.push_back(unattached_group(empty_graph(1), 1 + trial % 3));
    Graph full = expand(s);
    auto dels = vertex_deletions(s);
    // Representatives: every core vertex, then the first copy of each block position.
    std::vector<Vertex> reps;
    for (Vertex u = 0; u < s.core.order(); ++u) reps.push_back(u);
    Vertex next = s.core.order();
    for (const auto& grp : s.groups) {
      for (Vertex p = 0; p < grp.block.order(); ++p) reps.push_back(next + p);
      next += grp.block.order() * grp.copies;
    }
    ASSERT_EQ(dels.size(), reps.size());
    EXPECT_EQ(deletion_representatives(s), reps);
    for (std::size_t i = 0; i < reps.size(); ++i)
      EXPECT_EQ(structured_char_poly(dels[i]), seidel_poly(delete_vertex(full, reps[i])));
  }
}

TEST(Reduction, AutomaticReductionOfLargeGraphs) {
  Graph g = parse_graph_expr("Et+(8) + iso(2477)");
  EXPECT_EQ(seidel_lambda_min_cmp(g, -5), Relation::Below);
  EXPECT_EQ(seidel_lambda_min_cmp(parse_graph_expr("Et+(8) + iso(2476)"), -5), Relation::Equal);
  EXPECT_EQ(seidel_lambda_min_cmp(parse_graph_expr("40*At(2)"), -5), Relation::Equal);
  EXPECT_EQ(structured_multiplicity(decompose(parse_graph_expr("40*At(2)")), -5), 39u);
}
