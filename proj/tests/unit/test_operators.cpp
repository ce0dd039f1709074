#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shiftkit/generators.hpp"
#include "shiftkit/homology.hpp"
#include "shiftkit/operators.hpp"

using namespace shiftkit;

namespace {

SimplicialComplex two_edges() { return SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}}); }

SimplicialComplex points(int m) {
  std::vector<Face> facets;
  for (Vertex v = 1; v <= m; ++v) facets.push_back(Face{v});
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex triangle() { return SimplicialComplex::complete(3); }

} // namespace

TEST(Operators, Suspension) {
  const auto s = suspension(two_edges());
  EXPECT_EQ(s.n(), 6);
  EXPECT_EQ(s.f_vector().counts, (std::vector<std::size_t>{1, 6, 10, 4}));
  EXPECT_TRUE(s.contains(Face{1, 2, 5}));
  EXPECT_FALSE(s.contains(Face{5, 6}));
}

TEST(Operators, DisjointUnionAndJoin) {
  const auto u = disjoint_union(two_edges(), triangle());
  EXPECT_EQ(u.n(), 7);
  EXPECT_TRUE(u.contains(Face{5, 6, 7}));
  EXPECT_FALSE(u.contains(Face{4, 5}));
  const auto j = join(points(2), points(3));
  EXPECT_EQ(j.faces_of_size(2).size(), 6U);
  EXPECT_EQ(j.dim(), 1);
}

TEST(Operators, ConeInsertsApex) {
  const auto c = cone(two_edges(), 3);
  EXPECT_EQ(c.n(), 5);
  EXPECT_TRUE(c.contains(Face{1, 2, 3}));
  EXPECT_TRUE(c.contains(Face{3, 4, 5}));
  EXPECT_FALSE(c.contains(Face{1, 4}));
  EXPECT_TRUE(cone(SimplicialComplex(2)).is_empty());
  EXPECT_THROW(cone(two_edges(), 6), std::invalid_argument);
}

TEST(Operators, LinkAndAntistarMatchDefinitions) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto k = random_complex(rng, n, {5, 4});
    const auto faces = k.faces();
    const Face s = faces[rng() % faces.size()];
    const auto lk = link(k, s);
    const auto ast = antistar(k, s);
    for (Face t : k.faces()) {
      EXPECT_EQ(lk.contains(t), !t.intersects(s) && k.contains(t | s));
      EXPECT_EQ(ast.contains(t), !t.intersects(s));
    }
    EXPECT_TRUE(oracle::is_downward_closed(lk));
    EXPECT_TRUE(oracle::is_downward_closed(ast));
  }
  EXPECT_THROW(link(two_edges(), Face{1, 3}), std::invalid_argument);
  EXPECT_THROW(antistar(two_edges(), Face{2, 3}), std::invalid_argument);
}

TEST(Operators, ConstructionsStayDownwardClosed) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int nk = 1 + static_cast<int>(rng() % 6);
    const int nl = 1 + static_cast<int>(rng() % 6);
    const auto k = random_complex(rng, nk);
    const auto l = random_complex(rng, nl);
    for (const auto& c : {disjoint_union(k, l), join(k, l), union_of(k, l), intersection_of(k, l),
                          cone(k, 1 + static_cast<Vertex>(rng() % (nk + 1))), suspension(l)}) {
      EXPECT_TRUE(oracle::is_downward_closed(c));
      EXPECT_LE(c.n(), 12);
    }
  }
}

TEST(Operators, CliqueSumGluesAlongSimplex) {
  const auto glued = clique_sum(triangle(), triangle(), Face{1, 2}, Face{2, 3});
  EXPECT_EQ(glued.n(), 4);
  EXPECT_EQ(glued.f_vector().counts, (std::vector<std::size_t>{1, 4, 5, 2}));
  EXPECT_TRUE(glued.contains(Face{1, 2, 4}));
  EXPECT_THROW(clique_sum(triangle(), two_edges(), Face{1, 2, 3}, Face{1, 2, 3}),
               std::invalid_argument);
}

TEST(Operators, CombineDispatch) {
  EXPECT_EQ(parse_combine_kind("cone"), CombineKind::Cone);
  EXPECT_EQ(parse_combine_kind("disjoint-union"), CombineKind::DisjointUnion);
  EXPECT_FALSE(parse_combine_kind("wedge"));
  CombineArgs args;
  args.kind = CombineKind::Join;
  EXPECT_THROW(combine(args, two_edges()), std::invalid_argument);
  const auto l = points(2);
  EXPECT_EQ(combine(args, two_edges(), &l), join(two_edges(), l));
  args.kind = CombineKind::Link;
  args.face = Face{1};
  EXPECT_EQ(combine(args, two_edges()), link(two_edges(), Face{1}));
  EXPECT_THROW(combine(args, two_edges(), &l), std::invalid_argument);
}

TEST(Operators, DValueAndGapTestByHand) {
  const auto edge = SimplicialComplex::from_facets(2, {Face{1, 2}});
  const auto d_edge = algebraic_shift(edge);
  EXPECT_EQ(d_value(d_edge, Face{1, 2}, 2), 1U);
  EXPECT_EQ(d_value(d_edge, Face{2, 3}, 3), 0U);
  const auto u = disjoint_union_shift(d_edge, d_edge, 4);
  EXPECT_EQ(u, SimplicialComplex::from_facets(4, {Face{1, 2}, Face{1, 3}, Face{4}}));
  EXPECT_EQ(u, algebraic_shift(disjoint_union(edge, edge)));
  EXPECT_EQ(shifted_union_recursive(d_edge, d_edge), u);
  EXPECT_THROW(d_value(two_edges(), Face{1, 2}, 4), std::invalid_argument);
}

TEST(Operators, DValueIsInvariantUnderReshifting) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto k = random_complex(rng, n);
    const auto d1 = algebraic_shift(k, 1);
    const auto d2 = algebraic_shift(d1, 2);
    for (int c = 1; c <= k.dim() + 1; ++c) {
      for (Face s : oracle::subsets(n, c)) EXPECT_EQ(d_value(d1, s, n), d_value(d2, s, n));
    }
  }
}

TEST(Operators, UnionFormulasAgreeWithEngineOnSmallClasses) {
  const auto classes = complex_classes(3);
  for (const auto& k : classes) {
    for (const auto& l : classes) {
      if (k.num_vertices() + l.num_vertices() == 0) continue;
      const auto dk = algebraic_shift(k);
      const auto dl = algebraic_shift(l);
      const auto engine = algebraic_shift(disjoint_union(k, l));
      EXPECT_EQ(disjoint_union_shift(dk, dl, k.n() + l.n()), engine);
      EXPECT_EQ(shifted_union_recursive(dk, dl).with_ambient(engine.n()), engine)
          << k.to_string() << " " << l.to_string();
    }
  }
}

TEST(Operators, CliqueSumShiftByHand) {
  const auto d = algebraic_shift(triangle());
  const auto expected = SimplicialComplex::from_facets(4, {Face{1, 2, 3}, Face{1, 2, 4}});
  EXPECT_EQ(clique_sum_shift(d, d, 1, 4), expected);
  EXPECT_EQ(algebraic_shift(clique_sum(triangle(), triangle(), Face{1, 3}, Face{2, 3})), expected);
  EXPECT_THROW(clique_sum_shift(d, d, 3, 4), std::invalid_argument);
}

TEST(Operators, UnionIntervalCheckByHand) {
  const auto k = SimplicialComplex::from_facets(4, {Face{1, 2, 3}});
  const auto l = SimplicialComplex::from_facets(4, {Face{2, 3, 4}});
  const auto pair = union_interval_check(k, l, Face{});
  EXPECT_EQ(pair.lhs, 2U);
  EXPECT_EQ(pair.rhs, 2U);
  const std::vector<Face> as{Face{}, Face{1}, Face{2}, Face{1, 2}};
  for (const auto& p : union_interval_check(k, l, as)) EXPECT_TRUE(p.holds());
}

TEST(Operators, NearConeAnalysis) {
  const auto refused = near_cone_analyze(two_edges());
  ASSERT_TRUE(refused.refused_at);
  EXPECT_EQ(*refused.refused_at, 0U);
  EXPECT_EQ(refused.certificate.length(), 0U);
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto s = random_shifted(rng, n);
    const auto a = near_cone_analyze(s);
    EXPECT_FALSE(a.refused_at);
    EXPECT_EQ(a.certificate.length(), static_cast<std::size_t>(s.num_vertices()));
    EXPECT_TRUE(is_valid_certificate(s, a.certificate));
    EXPECT_TRUE(near_cone_certificate_check(s, a.certificate));
  }
}

TEST(Operators, NearConeDecomposition) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto k = random_near_cone(rng, n);
    EXPECT_TRUE(near_cone_decomposition_check(k, 1)) << k.to_string();
    EXPECT_EQ(algebraic_shift(cone(k, 1)), cone(algebraic_shift(k), 1));
  }
  EXPECT_THROW(near_cone_decomposition_check(two_edges(), 1), std::invalid_argument);
}

TEST(Operators, JoinTopCounts) {
  const auto p = points(3);
  const auto k33 = join(p, p);
  const auto pair = join_top_count_check(p, p, 1);
  EXPECT_EQ(pair.lhs, 4U);
  EXPECT_EQ(pair.rhs, 4U);
  EXPECT_EQ(betti_direct(k33).beta(1), 4U);  // 9 - 6 + 1
  EXPECT_TRUE(algebraic_shift(k33).contains(Face{3, 4}));
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(join_top_count_check(p, p, i).holds()) << i;
  EXPECT_THROW(join_top_count_check(p, p, 7), std::invalid_argument);
}

TEST(Operators, LexComparison) {
  const auto b = two_edges();
  const auto lhs = algebraic_shift(suspension(b));
  const auto rhs = algebraic_shift(suspension(algebraic_shift(b)));
  EXPECT_EQ(face_difference(lhs, rhs), (std::vector<Face>{Face{1, 2, 6}}));
  EXPECT_EQ(face_difference(rhs, lhs), (std::vector<Face>{Face{1, 3, 4}}));
  EXPECT_EQ(compare_lex(lhs, rhs), LexComparison::Less);
  EXPECT_EQ(compare_lex(rhs, lhs), LexComparison::Greater);
  EXPECT_EQ(compare_lex(lhs, lhs), LexComparison::Equal);
  EXPECT_TRUE(lex_leq(lhs, rhs));
  EXPECT_FALSE(lex_leq(rhs, lhs));
  // Differences only among vertices are invisible to the order.
  EXPECT_EQ(compare_lex(points(2).with_ambient(3), SimplicialComplex::from_facets(3, {Face{1}, Face{3}})),
            LexComparison::Tied);
  const auto x = SimplicialComplex::from_facets(5, {Face{1, 2}, Face{3, 4, 5}});
  const auto y = SimplicialComplex::from_facets(5, {Face{1, 3, 4}, Face{2, 5}});
  EXPECT_EQ(compare_lex(x, y), LexComparison::Incomparable);
  EXPECT_EQ(to_string(LexComparison::Less), "less");
}
