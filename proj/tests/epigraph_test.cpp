#include <gtest/gtest.h>

#include "ricd/epigraph.hpp"
#include "test_util.hpp"

namespace ricd {
namespace {

using test::q;

TEST(PiecewiseAffineTest, Evaluate) {
  const PiecewiseAffine abs_value({{QVector{1}, 0}, {QVector{-1}, 0}});
  EXPECT_EQ(abs_value(QVector{-3}), 3);
  EXPECT_EQ(abs_value(QVector{q(1, 2)}), q(1, 2));
  EXPECT_THROW(PiecewiseAffine(std::vector<AffinePiece>{}), Error);
  EXPECT_THROW(PiecewiseAffine({{QVector{1}, 0}, {QVector{1, 1}, 0}}), Error);
}

TEST(LiftTest, ConstantOnSquare) {
  const PiecewiseAffine zero({{QVector{0, 0}, 0}});
  const EpigraphProblem e = lift(test::unit_square(), zero);
  EXPECT_EQ(e.lifted.ambient_dim(), 3u);
  EXPECT_TRUE(e.lifted.contains(QVector{1, 0, 5}));
  EXPECT_FALSE(e.lifted.contains(QVector{1, 0, -1}));
  EXPECT_EQ(solve(e.lifted, e.objective).value, 0);
}

TEST(LiftTest, AbsoluteValueOnInterval) {
  const PiecewiseAffine abs_value({{QVector{1}, 0}, {QVector{-1}, 0}});
  const EpigraphProblem e = lift(Polyhedron::box(1, -1, 1), abs_value);
  const LpOutcome r = solve(e.lifted, e.objective);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point, (QVector{0, 0}));
}

TEST(LiftTest, WorkedExampleSinglePiece) {
  const Polyhedron x = test::worked_example_polytope();
  const PiecewiseAffine f = PiecewiseAffine::linear(LinearObjective{QVector{-1, 0}});
  const EpigraphProblem e = lift(x, f);
  EXPECT_EQ(solve(e.lifted, e.objective).value, -3);
  std::vector<QVector> projected;
  for (const auto& v : vertices(optimal_face(e.lifted, e.objective))) projected.push_back(project_down(v));
  EXPECT_EQ(projected, (std::vector<QVector>{QVector{3, 0}, QVector{3, 1}}));
}

TEST(LiftTest, PointsOfXLiftToTMinimalPoints) {
  const Polyhedron x = test::worked_example_polytope();
  const PiecewiseAffine f({{QVector{1, 0}, 0}, {QVector{0, 1}, -1}});
  const EpigraphProblem e = lift(x, f);
  for (const auto& p : {QVector{1, 3}, QVector{3, 0}, QVector{2, q(1, 2)}}) {
    EXPECT_TRUE(e.lifted.contains(lift_point(p, f)));
    EXPECT_FALSE(e.lifted.contains(p.appended(f(p) - q(1, 100))));
  }
}

TEST(LiftDirectionTest, Examples) {
  const Subspace z = lift_direction(Subspace::zero(2));
  EXPECT_EQ(z.ambient_dim(), 3u);
  EXPECT_TRUE(z.same_span(Subspace::coordinate(3, {2})));
  EXPECT_TRUE(lift_direction(Subspace::coordinate(2, {0})).same_span(Subspace::coordinate(3, {0, 2})));
  Prng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace s = random_subspaces(rng, 3, 1, 3).front();
    const Subspace l = lift_direction(s);
    EXPECT_EQ(l.dim(), s.dim() + 1);
    EXPECT_TRUE(l.contains(QVector::unit(4, 3)));
  }
}

TEST(ProjectDownTest, Examples) {
  EXPECT_EQ(project_down(QVector{3, q(1, 2), -3}), (QVector{3, q(1, 2)}));
  const PiecewiseAffine f({{QVector{1, 2}, 1}});
  EXPECT_EQ(project_down(lift_point(QVector{q(2, 3), 5}, f)), (QVector{q(2, 3), 5}));
}

TEST(MinimizerSetByPiecesTest, AbsoluteValue) {
  const PiecewiseAffine abs_value({{QVector{1}, 0}, {QVector{-1}, 0}});
  Rational opt;
  const Polyhedron m = minimizer_set_by_pieces(Polyhedron::box(1, -1, 1), abs_value, &opt);
  EXPECT_EQ(opt, 0);
  EXPECT_EQ(vertices(m), std::vector<QVector>{QVector{0}});
  const Polyhedron shifted = minimizer_set_by_pieces(Polyhedron::box(1, 1, 2), abs_value, &opt);
  EXPECT_EQ(opt, 1);
}

// Both equivalences of the restricted epigraph correspondence on random instances:
// probes are vertices and ri points of the direct minimizer set, random
// points of the restriction, and points of X off the affine set.
TEST(EpigraphEquivalenceTest, RandomInstances) {
  Prng rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto inst = random_polytope(rng, n, n + 3);
    const PiecewiseAffine f = random_piecewise_affine(rng, n);
    const EpigraphProblem e = lift(inst.polytope, f);
    const QVector x = inst.generators[static_cast<std::size_t>(trial) % inst.generators.size()];
    const Subspace dir = random_subspaces(rng, n, 1, n - 1).front();
    const Polyhedron restricted = inst.polytope.restrict_to_affine(x, dir);
    const Polyhedron direct = minimizer_set_by_pieces(restricted, f);
    const Polyhedron lifted_m = minimizer_set(e.lifted, e.objective, lift_point(x, f), lift_direction(dir));
    std::vector<QVector> probes = vertices(direct);
    const QVector z = relative_interior_point(direct, RiStrategy::SlackAverage);
    probes.push_back(z);
    for (const auto& v : vertices(restricted)) probes.push_back((v + z) / q(2));
    for (const auto& g : inst.generators) probes.push_back(g);
    for (const auto& y : probes) {
      const QVector ybar = lift_point(y, f);
      EXPECT_EQ(direct.contains(y), lifted_m.contains(ybar)) << "trial " << trial << " y " << y;
      EXPECT_EQ(ri_membership(direct, y), ri_membership(lifted_m, ybar)) << "trial " << trial << " y " << y;
    }
  }
}

TEST(EpigraphEquivalenceTest, GlobalMinimizerSetsMatch) {
  Prng rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto inst = random_polytope(rng, n, n + 3);
    const PiecewiseAffine f = random_piecewise_affine(rng, n);
    const EpigraphProblem e = lift(inst.polytope, f);
    Rational t;
    const Polyhedron direct = minimizer_set_by_pieces(inst.polytope, f, &t);
    std::vector<QVector> expected;
    for (const auto& v : vertices(direct)) expected.push_back(v.appended(t));
    EXPECT_EQ(vertices(optimal_face(e.lifted, e.objective)), expected);
  }
}

TEST(EpigraphEquivalenceTest, ClassificationTransfers) {
  Prng rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2;
    const auto inst = random_polytope(rng, n, 5);
    const PiecewiseAffine f = random_piecewise_affine(rng, n);
    const DirectionSet dirs(coordinate_directions(n));
    const Problem lifted = lifted_problem(inst.polytope, f, dirs);
    std::vector<QVector> probes = inst.generators;
    probes.push_back(relative_interior_point(inst.polytope, RiStrategy::VertexBarycenter));
    probes.push_back(relative_interior_point(minimizer_set_by_pieces(inst.polytope, f), RiStrategy::SlackAverage));
    for (const auto& y : probes) {
      EXPECT_EQ(is_local_min_direct(inst.polytope, f, dirs, y), is_local_min(lifted, lift_point(y, f)));
      EXPECT_EQ(is_interior_local_min_direct(inst.polytope, f, dirs, y),
                is_interior_local_min(lifted, lift_point(y, f)));
    }
  }
}

}  // namespace
}  // namespace ricd
