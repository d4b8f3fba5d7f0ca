#include <gtest/gtest.h>

#include <random>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"
#include "drgkit/families.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/terwilliger.hpp"
#include "oracles.hpp"

namespace drgkit {
namespace {

TEST(DualIdempotents, PartitionOfUnity) {
  const Graph g = construct({Family::johnson, {6, 3}});
  const DistanceData dd = distances(g);
  const auto de = dual_idempotents(g, 5, dd);
  ASSERT_EQ(de.e_star.size(), 4u);
  IntMatrix sum(g.order(), g.order(), Integer(0));
  for (const auto& e : de.e_star) {
    const IntMatrix ei = matrix_cast<Integer>(e);
    EXPECT_EQ(ei * ei, ei);
    sum += ei;
  }
  EXPECT_EQ(sum, IntMatrix::identity(g.order()));
}

TEST(DualAdjacency, J82DualEigenvalues) {
  // cosine sequence for θ_1 = 4 on {12,5;1,4}: u_0 = 1, u_1 = 4/12,
  // u_2 from c_1 u_0 + a_1 u_1 + b_1 u_2 = θ u_1, so u_2 = -1/3; θ*_i = m_1 u_i
  // with m_1 = 7.
  const Graph g = construct({Family::johnson, {8, 2}});
  const DistanceData dd = distances(g);
  const DrgParameters p = verify_drg(g, dd);
  const EigenData ed = eigen_data(dd, p);
  const DualAdjacency da = dual_adjacency(g, 0, dd, ed, {0, 1, 2});
  ASSERT_EQ(da.theta_star.size(), 3u);
  EXPECT_EQ(da.theta_star[0], AlgebraicScalar(7));
  EXPECT_EQ(da.theta_star[1], AlgebraicScalar(Rational(7, 3)));
  EXPECT_EQ(da.theta_star[2], AlgebraicScalar(Rational(-7, 3)));

  // The coefficient-only path must agree with the materialized one.
  const EigenData lean = eigen_data(dd, p, false, false);
  EXPECT_EQ(dual_adjacency(g, 0, dd, lean, {0, 1, 2}).theta_star, da.theta_star);
  EXPECT_THROW(dual_adjacency(g, 0, dd, ed, {1, 0, 2}), Error);
}

TEST(AlgebraClosure, SmallCasesAgainstFloatOracle) {
  for (FamilySpec fs : {FamilySpec{Family::complete_bipartite, {2}}, FamilySpec{Family::complete_bipartite, {3}},
                        FamilySpec{Family::rook_grid, {3}}, FamilySpec{Family::shrikhande, {}},
                        FamilySpec{Family::icosahedron, {}}, FamilySpec{Family::triangular_complement, {5}}}) {
    const Graph g = construct(fs);
    const DistanceData dd = distances(g);
    const AlgebraBasis ab = algebra_closure(terwilliger_generators(g, 0, dd));
    EXPECT_EQ(ab.dim, oracle::float_closure_dim(oracle::dense(g), 0)) << g.label();
    EXPECT_EQ(ab.dim, ab.basis.size());
  }
}

TEST(AlgebraClosure, ProductsStayInSpan) {
  const Graph g = construct({Family::complete_bipartite, {3}});
  const DistanceData dd = distances(g);
  const AlgebraBasis ab = algebra_closure(terwilliger_generators(g, 1, dd));
  exactla::Span span(g.order(), g.order());
  for (const auto& b : ab.basis) ASSERT_TRUE(span.insert(b));
  for (const auto& x : ab.basis)
    for (const auto& y : ab.basis) ASSERT_TRUE(span.contains(x * y));
  EXPECT_TRUE(span.contains(ExactMatrix::identity(g.order())));
}

TEST(AlgebraClosure, Errors) {
  EXPECT_THROW(algebra_closure({}), Error);
  EXPECT_THROW(algebra_closure({ExactMatrix::identity(2), ExactMatrix::identity(3)}), Error);
}

TEST(AlgebraClosure, NonCommutativeGenerators) {
  // Two generic 2x2 matrices generate all of M_2(Q).
  ExactMatrix a(2, 2, AlgebraicScalar(0));
  a(0, 1) = 1;
  ExactMatrix b(2, 2, AlgebraicScalar(0));
  b(1, 0) = 1;
  EXPECT_EQ(algebra_closure({a, b}).dim, 4u);
  EXPECT_EQ(algebra_closure({a}).dim, 2u);
}

TEST(BlockClosureProperty, AgreesWithGenericClosure) {
  std::mt19937_64 rng(71);
  for (FamilySpec fs : {FamilySpec{Family::shrikhande, {}}, FamilySpec{Family::rook_grid, {4}},
                        FamilySpec{Family::johnson, {6, 3}}, FamilySpec{Family::chang, {1}},
                        FamilySpec{Family::hamming, {3, 2}}}) {
    const Graph g = construct(fs);
    const DistanceData dd = distances(g);
    for (int trial = 0; trial < 2; ++trial) {
      const Vertex x = rng() % g.order();
      const BlockClosure bc = terwilliger_closure(g, x, dd);
      EXPECT_EQ(bc.dim, algebra_closure(terwilliger_generators(g, x, dd)).dim) << g.label() << " x=" << x;
      std::size_t total = 0;
      for (std::size_t i = 0; i < bc.block_dim.size(); ++i)
        for (std::size_t j = 0; j < bc.block_dim.size(); ++j) {
          total += bc.block_dim[i][j];
          // T is closed under transpose, so E*_i T E*_j and E*_j T E*_i have equal dimension.
          EXPECT_EQ(bc.block_dim[i][j], bc.block_dim[j][i]);
          if (i > j + 1 || j > i + 1) continue;
          EXPECT_GT(bc.block_dim[i][j], 0u);
        }
      EXPECT_EQ(total, bc.dim);
    }
  }
}

TEST(BlockClosureProperty, FloatOracleOnLargerGraphs) {
  for (FamilySpec fs : {FamilySpec{Family::chang, {2}}, FamilySpec{Family::johnson, {8, 2}}}) {
    const Graph g = construct(fs);
    const DistanceData dd = distances(g);
    for (Vertex x : {Vertex(0), Vertex(13)})
      EXPECT_EQ(terwilliger_closure(g, x, dd).dim, oracle::float_closure_dim(oracle::dense(g), x)) << g.label();
  }
}

TEST(BlockClosureProperty, RelabelingInvariance) {
  std::mt19937_64 rng(72);
  const Graph g = construct({Family::chang, {3}});
  for (int trial = 0; trial < 5; ++trial) {
    const auto perm = oracle::random_permutation(g.order(), rng);
    const Graph h = oracle::relabel(g, perm);
    const Vertex x = rng() % g.order();
    EXPECT_EQ(terwilliger_closure(g, x, distances(g)).dim, terwilliger_closure(h, perm[x], distances(h)).dim);
  }
}

TEST(TridiagonalPrimary, MatchesIntersectionMatrix) {
  const DrgParameters p = verify_drg(construct({Family::johnson, {8, 4}}));
  EXPECT_EQ(tridiagonal_primary(p), intersection_matrix(p));
}

}  // namespace
}  // namespace drgkit
