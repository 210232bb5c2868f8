#include <gtest/gtest.h>

#include <random>

#include "ricd/linalg.hpp"
#include "ricd/rational.hpp"
#include "ricd/subspace.hpp"
#include "test_util.hpp"

namespace ricd {
namespace {

using test::q;

// Column-first elimination on the transpose: rank(A) = rank(A^T). Plain
// rational arithmetic, independent of the Bareiss path under test.
std::size_t rank_oracle(const Matrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) t[j][i] = rows[i][j];
  }
  std::size_t r = 0;
  for (std::size_t col = rows.size(); col-- > 0 && r < t.size();) {
    std::size_t piv = t.size();
    for (std::size_t i = r; i < t.size(); ++i) {
      if (t[i][col] != 0) piv = i;
    }
    if (piv == t.size()) continue;
    std::swap(t[piv], t[r]);
    for (std::size_t i = r + 1; i < t.size(); ++i) {
      const Rational f = t[i][col] / t[r][col];
      for (std::size_t j = 0; j < rows.size(); ++j) t[i][j] -= f * t[r][j];
    }
    ++r;
  }
  return r;
}

TEST(RationalTest, FormatsAndParses) {
  EXPECT_EQ(to_string(q(3, 6)), "1/2");
  EXPECT_EQ(to_string(q(-4, 2)), "-2");
  EXPECT_EQ(to_string(q(0)), "0");
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(parse_rational("+7/1"), q(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("0.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(RationalTest, RoundTripsRandomValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = test::random_rational(rng, 1000, 97);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(RankTest, Identity) { EXPECT_EQ(rank({QVector{1, 0}, QVector{0, 1}}), 2u); }

TEST(RankTest, ProportionalRows) { EXPECT_EQ(rank({QVector{2, 4}, QVector{1, 2}}), 1u); }

TEST(RankTest, EmptyAndZero) {
  EXPECT_EQ(rank({}), 0u);
  EXPECT_EQ(rank({QVector{0, 0, 0}}), 0u);
}

TEST(RankTest, AgreesWithOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 6;
    Matrix m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(test::random_vector(rng, cols, 3, 3));
    // Force dependence now and then.
    if (rows > 2 && trial % 3 == 0) m[2] = q(2) * m[0] - q(1, 3) * m[1];
    EXPECT_EQ(rank(m), rank_oracle(m)) << "trial " << trial;
  }
}

TEST(RankTest, Random4x6) {
  std::mt19937_64 rng(4);
  Matrix m;
  for (int i = 0; i < 4; ++i) m.push_back(test::random_vector(rng, 6));
  EXPECT_EQ(rank(m), rank_oracle(m));
}

TEST(LinearSolveTest, ParticularSolutionAndInconsistency) {
  auto x = solve_linear({QVector{1, 1}, QVector{1, -1}}, {q(3), q(1)}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (QVector{2, 1}));
  EXPECT_FALSE(solve_linear({QVector{1, 1}, QVector{2, 2}}, {q(1), q(3)}, 2));
}

TEST(SubspaceTest, RejectsDependentBasis) {
  EXPECT_THROW(Subspace(2, {QVector{1, 2}, QVector{2, 4}}), Error);
  EXPECT_EQ(Subspace::span(2, {QVector{1, 2}, QVector{2, 4}}).dim(), 1u);
}

TEST(SubspaceTest, ComplementOfAxis) {
  const Subspace n = orthogonal_complement(Subspace::coordinate(2, {0}));
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_TRUE(n.same_span(Subspace::coordinate(2, {1})));
}

TEST(SubspaceTest, ComplementOfZeroIsFullSpace) {
  const Subspace n = orthogonal_complement(Subspace::zero(3));
  EXPECT_EQ(n.dim(), 3u);
}

TEST(SubspaceTest, ComplementOfDiagonal) {
  const Subspace i(3, {QVector{1, 1, 0}});
  const Subspace n = orthogonal_complement(i);
  ASSERT_EQ(n.dim(), 2u);
  for (const auto& v : n.basis()) EXPECT_EQ(dot(v, i.basis()[0]), 0);
}

TEST(SubspaceTest, ComplementIsInvolutionOnRandomSubspaces) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix vs;
    const std::size_t k = rng() % (n + 1);
    for (std::size_t j = 0; j < k; ++j) vs.push_back(test::random_vector(rng, n, 3, 2));
    const Subspace s = Subspace::span(n, vs);
    const Subspace c = orthogonal_complement(s);
    EXPECT_EQ(c.dim() + s.dim(), n);
    for (const auto& a : c.basis()) {
      for (const auto& b : s.basis()) EXPECT_EQ(dot(a, b), 0);
    }
    EXPECT_TRUE(orthogonal_complement(c).same_span(s));
  }
}

TEST(SegmentTest, RelativeInteriorMembership) {
  EXPECT_TRUE(in_relative_interior_of_segment(QVector{1, 0}, {QVector{0, 0}, QVector{2, 0}}));
  EXPECT_FALSE(in_relative_interior_of_segment(QVector{0, 0}, {QVector{0, 0}, QVector{2, 0}}));
  EXPECT_FALSE(in_relative_interior_of_segment(QVector{2, 0}, {QVector{0, 0}, QVector{2, 0}}));
  EXPECT_FALSE(in_relative_interior_of_segment(QVector{1, 1}, {QVector{0, 0}, QVector{2, 0}}));
  EXPECT_TRUE(in_relative_interior_of_segment(QVector{1, 1}, {QVector{1, 1}, QVector{1, 1}}));
  EXPECT_FALSE(in_relative_interior_of_segment(QVector{1, 2}, {QVector{1, 1}, QVector{1, 1}}));
}

// For x != y, ri[x,y] together with the two endpoints partitions [x,y].
TEST(SegmentTest, PartitionsRandomSegments) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const QVector a = test::random_vector(rng, 3);
    QVector b = test::random_vector(rng, 3);
    if (a == b) b[0] += 1;
    const Rational alpha(static_cast<long>(rng() % 9), 8);  // 0, 1/8, ..., 1
    const QVector x = (1 - alpha) * a + alpha * b;
    const bool endpoint = x == a || x == b;
    EXPECT_NE(endpoint, in_relative_interior_of_segment(x, {a, b}));
  }
}

TEST(XyzuWitnessTest, CoincidentPoints) {
  const QVector p{2, 3};
  EXPECT_EQ(xyzu_witness(p, p, p, p, q(1, 2)), p);
}

TEST(XyzuWitnessTest, PlanarExample) {
  const QVector y{0, 0}, u{2, 0}, x{1, 0}, z{0, 2};
  const QVector v = xyzu_witness(y, z, u, x, q(1, 2));
  EXPECT_EQ(v, (QVector{1, 1}));
  EXPECT_TRUE(in_relative_interior_of_segment(v, {u, z}));
  EXPECT_TRUE(in_relative_interior_of_segment(v, {x, x + z - y}));
}

TEST(XyzuWitnessTest, RejectsBadInput) {
  const QVector y{0, 0}, u{2, 0}, z{0, 2};
  EXPECT_THROW(xyzu_witness(y, z, u, QVector{1, 0}, q(1)), Error);
  EXPECT_THROW(xyzu_witness(y, z, u, QVector{1, 1}, q(1, 2)), Error);
}

TEST(XyzuWitnessTest, BothMembershipsHoldOnRandomInstances) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const QVector y = test::random_vector(rng, n);
    const QVector z = test::random_vector(rng, n);
    const QVector u = trial % 10 == 0 ? y : test::random_vector(rng, n);
    const Rational alpha(static_cast<long>(rng() % 15) + 1, 16);
    const QVector x = (1 - alpha) * u + alpha * y;
    const QVector v = xyzu_witness(y, z, u, x, alpha);
    EXPECT_TRUE(in_relative_interior_of_segment(v, {u, z})) << trial;
    EXPECT_TRUE(in_relative_interior_of_segment(v, {x, x + z - y})) << trial;
  }
}

}  // namespace
}  // namespace ricd
