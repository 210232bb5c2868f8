#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ricd/descent.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/rational.hpp"

namespace ricd::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Rational random_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = static_cast<long>(rng() % max_den) + 1;
  return Rational(num, den);
}

inline QVector random_vector(std::mt19937_64& rng, std::size_t n, int span = 5, int max_den = 4) {
  QVector v(n);
  for (auto& x : v) x = random_rational(rng, span, max_den);
  return v;
}

/// X = conv{(1,0),(3,0),(3,1),(0,4)} as
/// x2 >= 0, x1 <= 3, x1 + x2 <= 4, 4x1 + x2 >= 4.
inline Polyhedron worked_example_polytope() {
  Polyhedron p(2);
  p.add_inequality(QVector{0, -1}, 0);
  p.add_inequality(QVector{1, 0}, 3);
  p.add_inequality(QVector{1, 1}, 4);
  p.add_inequality(QVector{-4, -1}, -4);
  return p;
}

/// f = -x1 on the worked example, directions {span e1, span e2}.
inline Problem worked_example_problem() {
  return Problem(worked_example_polytope(), LinearObjective{QVector{-1, 0}},
                 DirectionSet({Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})}));
}

inline Polyhedron unit_square() { return Polyhedron::box(2, 0, 1); }

}  // namespace ricd::test
