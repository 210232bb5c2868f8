#pragma once

// Block-coordinate minimization of a linear objective over a polyhedron X
// along a finite family of subspaces. One step moves from x to a point of
// M(X ∩ (x + I), f), the minimizer set along one direction subspace I. The
// plain rule accepts any such point; the relative-interior rule requires
// the new point to lie in ri M(X ∩ (x + I), f).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ricd/faces.hpp"
#include "ricd/lp.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/subspace.hpp"

namespace ricd {

/// The finite family of search directions. Nonempty, common ambient dim.
class DirectionSet {
 public:
  DirectionSet() = default;
  explicit DirectionSet(std::vector<Subspace> directions) : dirs_(std::move(directions)) {
    if (dirs_.empty()) throw Error(ErrorCode::InvalidArgument, "direction set is empty");
    for (const auto& d : dirs_) {
      if (d.ambient_dim() != dirs_.front().ambient_dim()) {
        throw Error(ErrorCode::InvalidArgument, "direction set: mixed ambient dimensions");
      }
    }
  }

  std::size_t size() const noexcept { return dirs_.size(); }
  std::size_t ambient_dim() const noexcept { return dirs_.empty() ? 0 : dirs_.front().ambient_dim(); }
  const Subspace& operator[](std::size_t i) const { return dirs_.at(i); }
  auto begin() const noexcept { return dirs_.begin(); }
  auto end() const noexcept { return dirs_.end(); }

 private:
  std::vector<Subspace> dirs_;
};

/// Visiting order σ of one round. Every direction index appears at least once.
class Schedule {
 public:
  Schedule() = default;
  Schedule(std::vector<std::size_t> order, std::size_t num_directions) : order_(std::move(order)) {
    std::vector<bool> seen(num_directions, false);
    for (auto i : order_) {
      if (i >= num_directions) throw Error(ErrorCode::InvalidArgument, "schedule: direction index out of range");
      seen[i] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Error(ErrorCode::InvalidArgument, "schedule must visit every direction");
    }
  }

  /// 0, 1, ..., k-1
  static Schedule cyclic(std::size_t num_directions) {
    std::vector<std::size_t> order(num_directions);
    for (std::size_t i = 0; i < num_directions; ++i) order[i] = i;
    return Schedule(std::move(order), num_directions);
  }

  const std::vector<std::size_t>& order() const noexcept { return order_; }

 private:
  std::vector<std::size_t> order_;
};

/// min <c, x> over X, searched along `directions`.
struct Problem {
  Polyhedron domain;
  LinearObjective objective;
  DirectionSet directions;

  Problem(Polyhedron x, LinearObjective f, DirectionSet dirs)
      : domain(std::move(x)), objective(std::move(f)), directions(std::move(dirs)) {
    if (objective.c.size() != domain.ambient_dim() || directions.ambient_dim() != domain.ambient_dim()) {
      throw Error(ErrorCode::InvalidArgument, "problem: dimension mismatch");
    }
  }
};

/// How the plain rule chooses among minimizers.
enum class Picker {
  LexMinVertex,   // lexicographically smallest point of the minimizer set
  StayIfOptimal,  // the current point whenever it is a minimizer, else LexMinVertex
};

enum class UpdateRule { Plain, RelativeInterior };

struct StepRule {
  UpdateRule rule = UpdateRule::RelativeInterior;
  Picker picker = Picker::LexMinVertex;
  RiStrategy strategy = RiStrategy::SlackAverage;

  static StepRule relative_interior(RiStrategy s) { return {UpdateRule::RelativeInterior, Picker::LexMinVertex, s}; }
  static StepRule plain(Picker p) { return {UpdateRule::Plain, p, RiStrategy::SlackAverage}; }
};

/// M(X ∩ (x + I), f) as a polyhedron, with the LP optimum that produced it.
struct MinimizerSet {
  Polyhedron set;
  QVector optimum;  // one point of the set
  Rational value;
};

inline MinimizerSet minimizer_set_with_point(const Polyhedron& x_set, const LinearObjective& f, const QVector& x,
                                             const Subspace& direction) {
  Polyhedron restricted = x_set.restrict_to_affine(x, direction);
  const LpOutcome r = solve(restricted, f, &x);
  if (r.status == LpStatus::Unbounded) {
    throw Error(ErrorCode::UnboundedDirection, "objective unbounded below along a direction from " + to_string(x));
  }
  if (r.status != LpStatus::Optimal) throw Error(ErrorCode::InvalidArgument, "minimizer_set: restriction infeasible");
  if (!f.c.is_zero()) restricted.add_equality(f.c, r.value);
  return {std::move(restricted), r.point, r.value};
}

inline Polyhedron minimizer_set(const Polyhedron& x_set, const LinearObjective& f, const QVector& x,
                                const Subspace& direction) {
  return minimizer_set_with_point(x_set, f, x, direction).set;
}

/// One iteration under the plain rule: any point of the minimizer set.
inline QVector step_plain(const Polyhedron& x_set, const LinearObjective& f, const QVector& x,
                          const Subspace& direction, Picker picker) {
  const MinimizerSet m = minimizer_set_with_point(x_set, f, x, direction);
  if (picker == Picker::StayIfOptimal && f(x) == m.value) return x;
  return lexicographic_min(m.set);
}

/// One iteration under the relative-interior rule.
inline QVector step_ri(const Polyhedron& x_set, const LinearObjective& f, const QVector& x, const Subspace& direction,
                       RiStrategy strategy) {
  const MinimizerSet m = minimizer_set_with_point(x_set, f, x, direction);
  return relative_interior_point(m.set, strategy, &m.optimum);
}

inline QVector step(const Problem& prob, const QVector& x, std::size_t direction_index, const StepRule& rule) {
  const Subspace& dir = prob.directions[direction_index];
  if (rule.rule == UpdateRule::Plain) return step_plain(prob.domain, prob.objective, x, dir, rule.picker);
  return step_ri(prob.domain, prob.objective, x, dir, rule.strategy);
}

/// p_σ = p_σ(1) ∘ ... ∘ p_σ(m): the schedule is applied last entry first.
inline QVector round(const Problem& prob, QVector x, const Schedule& sched, RiStrategy strategy) {
  const auto& order = sched.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    x = step_ri(prob.domain, prob.objective, x, prob.directions[*it], strategy);
  }
  return x;
}

/// p = p_σ^(d+1) with d = dim X.
inline QVector p_operator(const Problem& prob, QVector x, const Schedule& sched, RiStrategy strategy) {
  const std::size_t d = dimension(prob.domain, &x);
  for (std::size_t k = 0; k <= d; ++k) x = round(prob, std::move(x), sched, strategy);
  return x;
}

/// Index of the first direction along which f improves from x, if any.
inline std::optional<std::size_t> improving_direction(const Problem& prob, const QVector& x) {
  if (!prob.domain.contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "classify: " + to_string(x));
  const Rational fx = prob.objective(x);
  for (std::size_t k = 0; k < prob.directions.size(); ++k) {
    if (minimizer_set_with_point(prob.domain, prob.objective, x, prob.directions[k]).value != fx) return k;
  }
  return std::nullopt;
}

/// x ∈ M(X ∩ (x + I), f) for every I.
inline bool is_local_min(const Problem& prob, const QVector& x) { return !improving_direction(prob, x).has_value(); }

/// Index of the first direction I with x ∉ ri M(X ∩ (x + I), f), if any.
inline std::optional<std::size_t> non_interior_direction(const Problem& prob, const QVector& x) {
  if (!prob.domain.contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "classify: " + to_string(x));
  for (std::size_t k = 0; k < prob.directions.size(); ++k) {
    const MinimizerSet m = minimizer_set_with_point(prob.domain, prob.objective, x, prob.directions[k]);
    if (!ri_membership(m.set, x)) return k;
  }
  return std::nullopt;
}

/// x ∈ ri M(X ∩ (x + I), f) for every I.
inline bool is_interior_local_min(const Problem& prob, const QVector& x) {
  return !non_interior_direction(prob, x).has_value();
}

/// f(p(x)) = f(x). When equal, p(x) is an interior local minimum whose
/// smallest face contains x; when x is pre-interior, no relative-interior
/// iteration can change f. So the test is exact.
inline bool is_pre_interior_local_min(const Problem& prob, const QVector& x, const Schedule& sched,
                                      RiStrategy strategy = RiStrategy::SlackAverage) {
  if (!prob.domain.contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "classify: " + to_string(x));
  return prob.objective(p_operator(prob, x, sched, strategy)) == prob.objective(x);
}

struct Classification {
  bool is_local = false;
  bool is_interior_local = false;
  bool is_pre_interior_local = false;
  FaceDescriptor face;                           // F(X, x)
  std::optional<std::size_t> violating_direction;  // improving (not local) or non-interior direction
  std::optional<QVector> certified_point;        // p(x), an interior local minimum, when pre-interior
  std::string witness;
};

inline Classification classify(const Problem& prob, const QVector& x, const Schedule& sched,
                               RiStrategy strategy = RiStrategy::SlackAverage) {
  Classification c;
  c.face = smallest_face(prob.domain, x);
  if (auto k = improving_direction(prob, x)) {
    c.violating_direction = k;
    c.witness = "f decreases along direction " + std::to_string(*k);
  } else {
    c.is_local = true;
    if (auto j = non_interior_direction(prob, x)) {
      c.violating_direction = j;
      c.witness = "x is on the relative boundary of the minimizer set along direction " + std::to_string(*j);
    } else {
      c.is_interior_local = true;
      c.witness = "x is in the relative interior of every minimizer set";
    }
  }
  const QVector px = p_operator(prob, x, sched, strategy);
  if (prob.objective(px) == prob.objective(x)) {
    c.is_pre_interior_local = true;
    c.certified_point = px;
    if (!c.is_interior_local) c.witness += "; p(x) = " + to_string(px) + " is an interior local minimum";
  }
  return c;
}

/// Every subspace of `dominated` lies in some subspace of `dominating`.
inline bool dominates(const DirectionSet& dominating, const DirectionSet& dominated) {
  if (dominating.ambient_dim() != dominated.ambient_dim()) {
    throw Error(ErrorCode::InvalidArgument, "dominates: ambient dimension mismatch");
  }
  return std::all_of(dominated.begin(), dominated.end(), [&](const Subspace& small) {
    return std::any_of(dominating.begin(), dominating.end(),
                       [&](const Subspace& big) { return small.is_subspace_of(big); });
  });
}

struct IterationRecord {
  std::size_t step_index = 0;
  std::size_t direction_index = 0;
  QVector point_before;
  QVector point_after;
  Rational objective_after;
  std::size_t minimizer_face_dim = 0;
  bool was_ri_selection = false;
};

enum class RunStatus {
  Certified,  // relative-interior rule, f constant over d+1 rounds: final point is an interior local minimum
  Stalled,    // plain rule, f constant over the stall window (no certificate)
  MaxRounds,
};

inline const char* run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Certified: return "CERTIFIED";
    case RunStatus::Stalled: return "STALLED";
    case RunStatus::MaxRounds: return "MAX_ROUNDS";
  }
  return "?";
}

struct StopRule {
  std::size_t max_rounds = 100;
  /// Stop after this many consecutive rounds without change in f. Raised to
  /// d + 1 under the relative-interior rule; 0 disables it for the plain rule.
  std::size_t f_stall_rounds = 0;
};

struct Trace {
  std::vector<IterationRecord> records;
  RunStatus status = RunStatus::MaxRounds;
  std::size_t rounds = 0;
  std::size_t domain_dim = 0;
  QVector final_point;
  Rational final_objective;
};

/// Runs rounds of the schedule (last entry first within a round) from x0.
inline Trace run(const Problem& prob, const QVector& x0, const Schedule& sched, const StepRule& rule,
                 const StopRule& stop) {
  if (!prob.domain.contains(x0)) throw Error(ErrorCode::PointNotInPolyhedron, "run: start " + to_string(x0));
  Trace trace;
  trace.domain_dim = dimension(prob.domain, &x0);
  std::size_t stall_needed = stop.f_stall_rounds;
  if (rule.rule == UpdateRule::RelativeInterior) stall_needed = std::max(stall_needed, trace.domain_dim + 1);

  QVector x = x0;
  std::size_t stalled = 0;
  std::size_t step_index = 0;
  const auto& order = sched.order();
  while (trace.rounds < stop.max_rounds) {
    const Rational f_start = prob.objective(x);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Subspace& dir = prob.directions[*it];
      const MinimizerSet m = minimizer_set_with_point(prob.domain, prob.objective, x, dir);
      QVector next;
      if (rule.rule == UpdateRule::Plain) {
        next = (rule.picker == Picker::StayIfOptimal && prob.objective(x) == m.value) ? x : lexicographic_min(m.set);
      } else {
        next = relative_interior_point(m.set, rule.strategy, &m.optimum);
      }
      const auto implicit = implicit_equalities(m.set, &next);
      const auto tight = m.set.tight_set(next);
      IterationRecord rec;
      rec.step_index = step_index++;
      rec.direction_index = *it;
      rec.point_before = x;
      rec.point_after = next;
      rec.objective_after = prob.objective(next);
      rec.minimizer_face_dim = detail::affine_dim(m.set, implicit);
      rec.was_ri_selection = tight == implicit;
      trace.records.push_back(std::move(rec));
      x = std::move(next);
    }
    ++trace.rounds;
    stalled = prob.objective(x) == f_start ? stalled + 1 : 0;
    if (stall_needed > 0 && stalled >= stall_needed) {
      trace.status = rule.rule == UpdateRule::RelativeInterior ? RunStatus::Certified : RunStatus::Stalled;
      break;
    }
  }
  trace.final_point = x;
  trace.final_objective = prob.objective(x);
  return trace;
}

/// Exact squared Euclidean distance from x to conv(points). The nearest point
/// lies in the relative interior of the hull of some affinely independent
/// subset, so every such subset is projected onto and kept when its
/// barycentric coordinates are nonnegative.
inline Rational squared_distance_to_hull(const std::vector<QVector>& points, const QVector& x) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "distance: no points");
  if (points.size() > 16) throw Error(ErrorCode::DimensionTooLarge, "distance: more than 16 vertices");
  const std::size_t n = x.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  auto consider = [&]() {
    const QVector& base = points[pick[0]];
    Matrix w;
    for (std::size_t k = 1; k < pick.size(); ++k) w.push_back(points[pick[k]] - base);
    if (rank(w) != w.size()) return;
    const std::size_t m = w.size();
    QVector mu(m);
    if (m > 0) {
      Matrix gram(m, QVector(m));
      std::vector<Rational> rhs(m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(w[i], w[j]);
        rhs[i] = dot(w[i], x - base);
      }
      mu = *solve_linear(gram, rhs, m);
    }
    Rational first = 1;
    for (const auto& c : mu) {
      if (c < 0) return;
      first -= c;
    }
    if (first < 0) return;
    QVector nearest = base;
    for (std::size_t i = 0; i < m; ++i) nearest += mu[i] * w[i];
    const QVector diff = nearest - x;
    const Rational d2 = dot(diff, diff);
    if (!best || d2 < *best) best = d2;
  };
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (!pick.empty()) consider();
    if (pick.size() == n + 1) return;
    for (std::size_t i = next; i < points.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return *best;
}

/// min over targets of the Euclidean distance from x (targets bounded).
inline double distance_to_union(const std::vector<Polyhedron>& targets, const QVector& x) {
  if (targets.empty()) throw Error(ErrorCode::InvalidArgument, "distance_to_union: no targets");
  std::optional<Rational> best;
  for (const auto& t : targets) {
    const auto verts = vertices(t);
    if (verts.empty()) continue;
    const Rational d2 = squared_distance_to_hull(verts, x);
    if (!best || d2 < *best) best = d2;
  }
  if (!best) throw Error(ErrorCode::EmptyPolyhedron, "distance_to_union: all targets empty");
  return std::sqrt(to_double(*best));
}

/// X ∩ {y : f(y) <= f(x)} bounded, which keeps every iterate sequence from x
/// bounded.
inline bool sublevel_set_bounded(const Problem& prob, const QVector& x) {
  Polyhedron sub = prob.domain;
  sub.add_inequality(prob.objective.c, prob.objective(x));
  return is_bounded(sub);
}

}  // namespace ricd
