#include <gtest/gtest.h>

#include <algorithm>

#include "ricd/faces.hpp"
#include "ricd/lp.hpp"
#include "ricd/random.hpp"
#include "test_util.hpp"

namespace ricd {
namespace {

using test::q;

// Checks the multipliers returned with an optimal outcome.
void expect_certificate(const Polyhedron& p, const LinearObjective& f, const LpOutcome& r) {
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_TRUE(p.contains(r.point));
  EXPECT_EQ(f(r.point), r.value);
  ASSERT_EQ(r.ineq_duals.size(), p.num_inequalities());
  QVector stationarity = f.c;
  Rational dual_value = 0;
  for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
    EXPECT_GE(r.ineq_duals[i], 0);
    stationarity += r.ineq_duals[i] * p.ineq_lhs()[i];
    dual_value -= r.ineq_duals[i] * p.ineq_rhs()[i];
  }
  if (p.num_equalities() > 0) {
    ASSERT_EQ(r.eq_duals.size(), p.num_equalities());
    for (std::size_t i = 0; i < p.num_equalities(); ++i) {
      stationarity += r.eq_duals[i] * p.eq_lhs()[i];
      dual_value -= r.eq_duals[i] * p.eq_rhs()[i];
    }
  }
  EXPECT_TRUE(stationarity.is_zero()) << stationarity;
  EXPECT_EQ(dual_value, r.value);
}

TEST(LpTest, MinimizeOverUnitInterval) {
  const Polyhedron p = Polyhedron::box(1, 0, 1);
  const LinearObjective f{QVector{1}};
  const LpOutcome r = solve(p, f);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point, QVector{0});
  EXPECT_EQ(r.value, 0);
  expect_certificate(p, f, r);
}

TEST(LpTest, WorkedExampleOptimum) {
  const Polyhedron x = test::worked_example_polytope();
  const LinearObjective f{QVector{-1, 0}};
  const LpOutcome r = solve(x, f);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, -3);
  EXPECT_EQ(r.point[0], 3);
  expect_certificate(x, f, r);
}

TEST(LpTest, InfeasibleAndUnbounded) {
  Polyhedron empty(1);
  empty.add_inequality(QVector{1}, 0);
  empty.add_inequality(QVector{-1}, -1);
  EXPECT_EQ(solve(empty, LinearObjective{QVector{1}}).status, LpStatus::Infeasible);

  Polyhedron ray(2);
  ray.add_inequality(QVector{-1, 0}, 0);
  ray.add_inequality(QVector{0, -1}, 0);
  EXPECT_EQ(solve(ray, LinearObjective{QVector{-1, 1}}).status, LpStatus::Unbounded);
  const LinearObjective up{QVector{1, 1}};
  const LpOutcome r = solve(ray, up);
  expect_certificate(ray, up, r);
}

TEST(LpTest, InconsistentEqualities) {
  Polyhedron p(2);
  p.add_equality(QVector{1, 1}, 1);
  p.add_equality(QVector{2, 2}, 3);
  EXPECT_EQ(solve(p, LinearObjective{QVector{0, 0}}).status, LpStatus::Infeasible);
}

TEST(LpTest, RedundantEqualitiesAndFreeVariables) {
  Polyhedron p(3);
  p.add_equality(QVector{1, 1, 1}, 1);
  p.add_equality(QVector{2, 2, 2}, 2);
  p.add_inequality(QVector{-1, 0, 0}, 0);
  p.add_inequality(QVector{0, -1, 0}, 0);
  p.add_inequality(QVector{0, 0, -1}, 0);
  const LinearObjective f{QVector{3, 1, 2}};
  const LpOutcome r = solve(p, f);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point, (QVector{0, 1, 0}));
  expect_certificate(p, f, r);
}

TEST(LpTest, PhaseOneWithNegativeRightHandSides) {
  // 1 <= x <= 2, 1 <= y <= 3, x + y >= 3
  Polyhedron p = Polyhedron::box(2, 0, 10);
  p.add_inequality(QVector{-1, 0}, -1);
  p.add_inequality(QVector{1, 0}, 2);
  p.add_inequality(QVector{0, -1}, -1);
  p.add_inequality(QVector{0, 1}, 3);
  p.add_inequality(QVector{-1, -1}, -3);
  const LinearObjective f{QVector{1, 2}};
  const LpOutcome r = solve(p, f);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.point, (QVector{2, 1}));
  expect_certificate(p, f, r);
}

TEST(LpTest, DegenerateVertexTerminates) {
  // Square pyramid apex: many constraints through one vertex.
  Polyhedron p(3);
  p.add_inequality(QVector{1, 0, 1}, 1);
  p.add_inequality(QVector{-1, 0, 1}, 1);
  p.add_inequality(QVector{0, 1, 1}, 1);
  p.add_inequality(QVector{0, -1, 1}, 1);
  p.add_inequality(QVector{1, 1, 1}, 1);
  p.add_inequality(QVector{0, 0, -1}, 0);
  const LinearObjective f{QVector{0, 0, -1}};
  const LpOutcome r = solve(p, f);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point, (QVector{0, 0, 1}));
  expect_certificate(p, f, r);
}

TEST(LpTest, DeterministicAcrossCalls) {
  const Polyhedron x = test::worked_example_polytope();
  const LinearObjective f{QVector{0, 0}};
  EXPECT_EQ(solve(x, f).point, solve(x, f).point);
}

TEST(LpTest, HintDoesNotChangeOptimum) {
  const Polyhedron x = test::worked_example_polytope();
  const LinearObjective f{QVector{-1, -1}};
  const QVector hint{1, 3};
  EXPECT_EQ(solve(x, f).value, solve(x, f, &hint).value);
}

TEST(LpTest, OptimalFaceOfInterval) {
  const Polyhedron face = optimal_face(Polyhedron::box(1, 0, 1), LinearObjective{QVector{1}});
  EXPECT_EQ(vertices(face), std::vector<QVector>{QVector{0}});
}

TEST(LpTest, OptimalFaceOfWorkedExampleIsRightEdge) {
  const Polyhedron face = optimal_face(test::worked_example_polytope(), LinearObjective{QVector{-1, 0}});
  EXPECT_EQ(vertices(face), (std::vector<QVector>{QVector{3, 0}, QVector{3, 1}}));
}

TEST(LpTest, OptimalFaceRejectsUnbounded) {
  Polyhedron ray(1);
  ray.add_inequality(QVector{-1}, 0);
  EXPECT_THROW(optimal_face(ray, LinearObjective{QVector{-1}}), Error);
}

TEST(LpTest, LexicographicMin) {
  EXPECT_EQ(lexicographic_min(test::worked_example_polytope()), (QVector{0, 4}));
}

// Simplex optimum vs the minimum over the generating points and over the
// enumerated vertices, with the dual certificate checked each time.
TEST(LpTest, MatchesVertexOracleOnRandomPolytopes) {
  Prng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto inst = random_polytope(rng, n, n + 2 + trial % 4);
    const LinearObjective f{random_direction(rng, n)};
    const LpOutcome r = solve(inst.polytope, f);
    expect_certificate(inst.polytope, f, r);
    Rational best = f(inst.generators.front());
    for (const auto& g : inst.generators) best = std::min(best, f(g));
    EXPECT_EQ(r.value, best) << "trial " << trial;
    const auto verts = vertices(inst.polytope);
    Rational vbest = f(verts.front());
    for (const auto& v : verts) vbest = std::min(vbest, f(v));
    EXPECT_EQ(r.value, vbest);

    const Polyhedron face = optimal_face(inst.polytope, f);
    for (const auto& v : verts) {
      EXPECT_EQ(face.contains(v), f(v) == r.value);
    }
  }
}

}  // namespace
}  // namespace ricd
