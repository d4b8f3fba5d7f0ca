#include <gtest/gtest.h>

#include <random>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"
#include "drgkit/families.hpp"
#include "oracles.hpp"

namespace drgkit {
namespace {

IntMatrix random_low_rank(std::size_t rows, std::size_t cols, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-3, 3);
  IntMatrix a(rows, r, Integer(0));
  IntMatrix b(r, cols, Integer(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = e(rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = e(rng);
  return a * b;
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

TEST(ExactRankProperty, IntegerRankMatchesSvd) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 7;
    const std::size_t cols = 3 + trial % 5;
    const IntMatrix m = random_low_rank(rows, cols, 1 + trial % 4, rng);
    EXPECT_EQ(exactla::rank(m), oracle::float_rank(to_double(m)));
    EXPECT_EQ(exactla::rank(exactla::to_exact(m)), exactla::rank(m));
  }
}

TEST(ExactRankProperty, QuadraticFieldRankMatchesSvd) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> e(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix m(4, 5);
    Eigen::MatrixXd f(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        m(i, j) = AlgebraicScalar::surd(e(rng), e(rng), 5);
        f(i, j) = m(i, j).to_double();
      }
    // Force a dependency: row 3 = √5·row 0 + row 1.
    for (std::size_t j = 0; j < 5; ++j) {
      m(3, j) = AlgebraicScalar::sqrt(5) * m(0, j) + m(1, j);
      f(3, j) = m(3, j).to_double();
    }
    EXPECT_EQ(exactla::rank(m), oracle::float_rank(f));
    EXPECT_EQ(exactla::common_radicand(m), 5);
  }
}

TEST(ExactRank, FloatEntriesRejected) {
  ExactMatrix m(1, 1, AlgebraicScalar::approx(0.5));
  try {
    exactla::rank(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "float mode");
  }
}

TEST(IntegerSpanProperty, DimensionEqualsRank) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_low_rank(8, 6, 1 + trial % 5, rng);
    exactla::IntegerSpan span(6);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<Integer> row(m.row(i).begin(), m.row(i).end());
      span.insert(row);
    }
    EXPECT_EQ(span.dim(), exactla::rank(m));
    for (const auto& r : span.rows()) {
      Integer g = 0;
      for (const auto& v : r) g = gcd(g, v);
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(Span, InsertAndContains) {
  exactla::Span span(2, 2);
  ExactMatrix a(2, 2, AlgebraicScalar(0));
  a(0, 1) = AlgebraicScalar::sqrt(2);
  ExactMatrix b = ExactMatrix::identity(2);
  EXPECT_TRUE(span.insert(a));
  EXPECT_TRUE(span.insert(b));
  ExactMatrix c = a;
  c *= AlgebraicScalar::surd(1, 3, 2);
  c += b;
  EXPECT_TRUE(span.contains(c));
  EXPECT_FALSE(span.insert(c));
  EXPECT_EQ(span.dim(), 2u);
}

TEST(Inverse, RandomInvertible) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<long> e(-4, 4);
  int checked = 0;
  while (checked < 20) {
    ExactMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = AlgebraicScalar::surd(e(rng), e(rng), 3);
    if (exactla::rank(m) < 4) continue;
    EXPECT_EQ(m * exactla::inverse(m), ExactMatrix::identity(4));
    ++checked;
  }
  ExactMatrix singular(2, 2, AlgebraicScalar(1));
  EXPECT_THROW(exactla::inverse(singular), Error);
}

TEST(CharacteristicPolynomial, Companion) {
  // Companion matrix of z^3 - 2z^2 - 5z + 6 = (z-1)(z+2)(z-3).
  ExactMatrix m(3, 3, AlgebraicScalar(0));
  m(1, 0) = 1;
  m(2, 1) = 1;
  m(0, 2) = -6;
  m(1, 2) = 5;
  m(2, 2) = 2;
  const auto p = exactla::characteristic_polynomial(m);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], AlgebraicScalar(6));
  EXPECT_EQ(p[1], AlgebraicScalar(-5));
  EXPECT_EQ(p[2], AlgebraicScalar(-2));
  EXPECT_EQ(p[3], AlgebraicScalar(1));
  for (long r : {1, -2, 3}) EXPECT_TRUE(exactla::evaluate(p, AlgebraicScalar(r)).is_zero());
}

TEST(Eigenprojection, Icosahedron) {
  const Graph g = construct({Family::icosahedron, {}});
  const ExactMatrix a = exactla::to_exact(g.adjacency());
  const std::vector<AlgebraicScalar> eigs{5, AlgebraicScalar::sqrt(5), -1, -AlgebraicScalar::sqrt(5)};
  const auto e = exactla::eigenprojection(a, eigs);
  ASSERT_EQ(e.size(), 4u);
  // Multiplicities 1, 3, 5, 3: traces of the projections sum to 12 and match the float spectrum.
  const auto f = oracle::eigenvalues(oracle::dense(g));
  std::vector<std::size_t> counts(4, 0);
  for (double v : f)
    for (std::size_t i = 0; i < 4; ++i)
      if (std::fabs(v - eigs[i].to_double()) < 1e-8) ++counts[i];
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(e[i].trace(), AlgebraicScalar(static_cast<long>(counts[i])));

  const std::vector<AlgebraicScalar> incomplete{5, AlgebraicScalar::sqrt(5), -1};
  EXPECT_THROW(exactla::eigenprojection(a, incomplete), Error);
}

}  // namespace
}  // namespace drgkit
