#pragma once

// Convex piecewise-affine objectives f(x) = max_k <g_k, x> + h_k, minimized
// through their epigraph {(x, t) : x in X, f(x) <= t} with the linear
// objective pi(x, t) = t. The t coordinate is always appended last.

#include <utility>
#include <vector>

#include "ricd/descent.hpp"
#include "ricd/faces.hpp"
#include "ricd/lp.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/random.hpp"
#include "ricd/subspace.hpp"

namespace ricd {

struct AffinePiece {
  QVector g;
  Rational h;
};

class PiecewiseAffine {
 public:
  PiecewiseAffine() = default;
  explicit PiecewiseAffine(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error(ErrorCode::InvalidArgument, "piecewise-affine function needs a piece");
    for (const auto& p : pieces_) {
      if (p.g.size() != pieces_.front().g.size()) throw Error(ErrorCode::InvalidArgument, "pieces differ in dimension");
    }
  }

  /// A linear objective as a single piece.
  static PiecewiseAffine linear(const LinearObjective& f) { return PiecewiseAffine({{f.c, 0}}); }

  std::size_t dim() const noexcept { return pieces_.empty() ? 0 : pieces_.front().g.size(); }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }

  Rational operator()(const QVector& x) const {
    Rational best = dot(pieces_.front().g, x) + pieces_.front().h;
    for (const auto& p : pieces_) best = std::max(best, dot(p.g, x) + p.h);
    return best;
  }

 private:
  std::vector<AffinePiece> pieces_;
};

struct EpigraphProblem {
  Polyhedron lifted;
  LinearObjective objective;  // selects t
};

inline EpigraphProblem lift(const Polyhedron& x, const PiecewiseAffine& f) {
  if (f.dim() != x.ambient_dim()) throw Error(ErrorCode::InvalidArgument, "lift: dimension mismatch");
  const std::size_t n = x.ambient_dim();
  Polyhedron out(n + 1);
  for (std::size_t i = 0; i < x.num_inequalities(); ++i) out.add_inequality(x.ineq_lhs()[i].appended(0), x.ineq_rhs()[i]);
  for (std::size_t i = 0; i < x.num_equalities(); ++i) out.add_equality(x.eq_lhs()[i].appended(0), x.eq_rhs()[i]);
  // <g, x> + h <= t
  for (const auto& p : f.pieces()) out.add_inequality(p.g.appended(-1), -p.h);
  return {std::move(out), LinearObjective{QVector::unit(n + 1, n)}};
}

/// I x R
inline Subspace lift_direction(const Subspace& direction) {
  const std::size_t n = direction.ambient_dim();
  Matrix basis;
  for (const auto& v : direction.basis()) basis.push_back(v.appended(0));
  basis.push_back(QVector::unit(n + 1, n));
  return Subspace(n + 1, std::move(basis));
}

inline DirectionSet lift_directions(const DirectionSet& dirs) {
  std::vector<Subspace> out;
  for (const auto& d : dirs) out.push_back(lift_direction(d));
  return DirectionSet(std::move(out));
}

/// (x, f(x))
inline QVector lift_point(const QVector& x, const PiecewiseAffine& f) { return x.appended(f(x)); }

inline QVector project_down(const QVector& lifted) {
  if (lifted.size() == 0) throw Error(ErrorCode::InvalidArgument, "project_down: empty vector");
  std::vector<Rational> c(lifted.begin(), lifted.end() - 1);
  return QVector(std::move(c));
}

/// The lifted descent problem: minimize pi over epi f along I x R.
inline Problem lifted_problem(const Polyhedron& x, const PiecewiseAffine& f, const DirectionSet& dirs) {
  EpigraphProblem e = lift(x, f);
  return Problem(std::move(e.lifted), e.objective, lift_directions(dirs));
}

/// M(Y, f) computed without the epigraph: on each region where piece k attains
/// the max, f is affine and its minimum is attained at a vertex of the region.
/// The least of these is min f, and M(Y, f) = Y ∩ {<g_j, y> + h_j <= min f}.
/// Requires Y bounded and nonempty.
inline Polyhedron minimizer_set_by_pieces(const Polyhedron& y, const PiecewiseAffine& f, Rational* optimum = nullptr) {
  std::optional<Rational> best;
  for (const auto& pk : f.pieces()) {
    Polyhedron region = y;
    for (const auto& pj : f.pieces()) region.add_inequality(pj.g - pk.g, pk.h - pj.h);
    for (const auto& v : vertices(region)) {
      const Rational val = dot(pk.g, v) + pk.h;
      if (!best || val < *best) best = val;
    }
  }
  if (!best) throw Error(ErrorCode::EmptyPolyhedron, "minimizer_set_by_pieces: empty domain");
  Polyhedron m = y;
  for (const auto& p : f.pieces()) m.add_inequality(p.g, *best - p.h);
  if (optimum) *optimum = *best;
  return m;
}

/// x ∈ M(X ∩ (x + I), f) for every I, decided directly on X.
inline bool is_local_min_direct(const Polyhedron& x_set, const PiecewiseAffine& f, const DirectionSet& dirs,
                                const QVector& x) {
  for (const auto& d : dirs) {
    if (!minimizer_set_by_pieces(x_set.restrict_to_affine(x, d), f).contains(x)) return false;
  }
  return true;
}

/// x ∈ ri M(X ∩ (x + I), f) for every I, decided directly on X.
inline bool is_interior_local_min_direct(const Polyhedron& x_set, const PiecewiseAffine& f, const DirectionSet& dirs,
                                         const QVector& x) {
  for (const auto& d : dirs) {
    if (!ri_membership(minimizer_set_by_pieces(x_set.restrict_to_affine(x, d), f), x)) return false;
  }
  return true;
}

/// max of 1..max_pieces random affine functions with small integer data.
inline PiecewiseAffine random_piecewise_affine(Prng& rng, std::size_t n, std::size_t max_pieces = 3) {
  const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_pieces)));
  std::vector<AffinePiece> pieces;
  for (std::size_t k = 0; k < count; ++k) {
    QVector g(n);
    for (auto& c : g) c = rng.uniform(-2, 2);
    pieces.push_back({std::move(g), Rational(rng.uniform(-3, 3))});
  }
  return PiecewiseAffine(std::move(pieces));
}

}  // namespace ricd
