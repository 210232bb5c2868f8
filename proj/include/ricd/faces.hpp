#pragma once

// Face structure of H-represented polyhedra: implicit equalities, smallest
// faces F(X, x), relative interiors and the face lattice of small polytopes.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <vector>

#include "ricd/linalg.hpp"
#include "ricd/lp.hpp"
#include "ricd/polyhedron.hpp"

namespace ricd {

/// A nonempty face identified by its canonical tight set: every inequality
/// index tight on the whole face. Two descriptors are equal iff the faces are.
struct FaceDescriptor {
  std::vector<std::size_t> tight_set;  // ascending
  std::size_t dim = 0;

  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
  friend auto operator<=>(const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dim != b.dim) return a.dim <=> b.dim;
    return a.tight_set <=> b.tight_set;
  }
};

/// How F(X, y) relates to F(X, x).
enum class FaceRelation {
  EqualFace,         // y ∈ ri F(X, x)
  ProperSubface,     // F(X, y) ⊊ F(X, x), i.e. y ∈ rb F(X, x)
  ProperSuperface,   // F(X, x) ⊊ F(X, y)
  Incomparable,
};

inline const char* face_relation_name(FaceRelation r) {
  switch (r) {
    case FaceRelation::EqualFace: return "EQUAL_FACE";
    case FaceRelation::ProperSubface: return "PROPER_SUBFACE";
    case FaceRelation::ProperSuperface: return "PROPER_SUPERFACE";
    case FaceRelation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

enum class RiStrategy { SlackAverage, VertexBarycenter };

inline constexpr std::size_t kMaxVertexEnumerationDim = 6;

/// Some point of P, or nullopt when P is empty.
inline std::optional<QVector> feasible_point(const Polyhedron& p, const QVector* hint = nullptr) {
  if (hint && hint->size() == p.ambient_dim() && p.contains(*hint)) return *hint;
  const LpOutcome r = solve(p, LinearObjective{QVector(p.ambient_dim())}, hint);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.point;
}

inline bool is_empty(const Polyhedron& p) { return !feasible_point(p).has_value(); }

/// Result of the slack analysis behind implicit equalities and ri points.
struct SlackAnalysis {
  std::vector<std::size_t> implicit;  // ascending, restricted to the candidates
  std::vector<QVector> witnesses;     // feasible points; each non-implicit candidate is strictly slack at one of them
};

namespace detail {

/// Decides which candidate inequalities are implicit equalities of the
/// nonempty polyhedron P. Each round maximizes the sum of truncated slacks
/// s_j ∈ [0, 1], a_j x + s_j <= b_j, over the undecided candidates; indices
/// with s_j > 0 at the optimum are resolved as non-implicit, and when the
/// optimum is 0 every remaining candidate is implicit.
inline SlackAnalysis analyze_slacks(const Polyhedron& p, const std::vector<std::size_t>& candidates,
                                    const QVector& start) {
  const std::size_t n = p.ambient_dim();
  SlackAnalysis out;
  std::vector<std::size_t> undecided;
  for (auto i : candidates) {
    if (p.slack(i, start) == 0) undecided.push_back(i);
  }
  if (undecided.size() < candidates.size()) out.witnesses.push_back(start);

  while (!undecided.empty()) {
    const std::size_t u = undecided.size();
    std::vector<std::size_t> slot(p.num_inequalities(), u);
    for (std::size_t k = 0; k < u; ++k) slot[undecided[k]] = k;

    Polyhedron lifted(n + u);
    for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
      QVector row = p.ineq_lhs()[i];
      for (std::size_t k = 0; k < u; ++k) row = row.appended(k == slot[i] ? 1 : 0);
      lifted.add_inequality(std::move(row), p.ineq_rhs()[i]);
    }
    for (std::size_t k = 0; k < u; ++k) {
      lifted.add_inequality(QVector::unit(n + u, n + k), 1);
      lifted.add_inequality(-QVector::unit(n + u, n + k), 0);
    }
    for (std::size_t i = 0; i < p.num_equalities(); ++i) {
      QVector row = p.eq_lhs()[i];
      for (std::size_t k = 0; k < u; ++k) row = row.appended(0);
      lifted.add_equality(std::move(row), p.eq_rhs()[i]);
    }
    QVector objective(n + u);
    for (std::size_t k = 0; k < u; ++k) objective[n + k] = -1;
    QVector hint = start;
    for (std::size_t k = 0; k < u; ++k) hint = hint.appended(0);

    const LpOutcome r = solve(lifted, LinearObjective{objective}, &hint);
    if (r.status != LpStatus::Optimal) {
      throw Error(ErrorCode::InvalidArgument, "analyze_slacks: slack LP not optimal");
    }
    if (r.value == 0) {
      out.implicit.insert(out.implicit.end(), undecided.begin(), undecided.end());
      break;
    }
    QVector x(std::vector<Rational>(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n)));
    std::vector<std::size_t> still;
    for (auto i : undecided) {
      if (p.slack(i, x) == 0) still.push_back(i);
    }
    out.witnesses.push_back(std::move(x));
    undecided = std::move(still);
  }
  std::sort(out.implicit.begin(), out.implicit.end());
  return out;
}

inline std::vector<std::size_t> all_indices(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = i;
  return v;
}

inline std::size_t affine_dim(const Polyhedron& p, const std::vector<std::size_t>& implicit) {
  return p.ambient_dim() - rank(p.equality_rows_with(implicit));
}

}  // namespace detail

/// Indices i with a_i x = b_i for every x in P.
inline std::vector<std::size_t> implicit_equalities(const Polyhedron& p, const QVector* hint = nullptr) {
  auto start = feasible_point(p, hint);
  if (!start) throw Error(ErrorCode::EmptyPolyhedron, "implicit_equalities");
  return detail::analyze_slacks(p, detail::all_indices(p.num_inequalities()), *start).implicit;
}

/// dim aff P
inline std::size_t dimension(const Polyhedron& p, const QVector* hint = nullptr) {
  return detail::affine_dim(p, implicit_equalities(p, hint));
}

/// F(P, x). The tight set of a point is already canonical: any inequality
/// tight on all of F(P, x) is tight at x itself.
inline FaceDescriptor smallest_face(const Polyhedron& p, const QVector& x) {
  if (!p.contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "smallest_face: " + to_string(x));
  FaceDescriptor f;
  f.tight_set = p.tight_set(x);
  f.dim = detail::affine_dim(p, f.tight_set);
  return f;
}

/// The face {x in P : a_i x = b_i, i in tight}, canonicalized; nullopt if empty.
inline std::optional<FaceDescriptor> canonical_face(const Polyhedron& p, const std::vector<std::size_t>& tight) {
  const Polyhedron q = p.face(tight);
  auto start = feasible_point(q);
  if (!start) return std::nullopt;
  FaceDescriptor f;
  f.tight_set = detail::analyze_slacks(q, detail::all_indices(q.num_inequalities()), *start).implicit;
  f.dim = detail::affine_dim(p, f.tight_set);
  return f;
}

inline Polyhedron face_polyhedron(const Polyhedron& p, const FaceDescriptor& f) { return p.face(f.tight_set); }

/// Intersection of two faces (union of tight sets), or nullopt if disjoint.
inline std::optional<FaceDescriptor> intersect_faces(const Polyhedron& p, const FaceDescriptor& a,
                                                     const FaceDescriptor& b) {
  std::vector<std::size_t> u;
  std::set_union(a.tight_set.begin(), a.tight_set.end(), b.tight_set.begin(), b.tight_set.end(),
                 std::back_inserter(u));
  return canonical_face(p, u);
}

inline FaceRelation face_relation(const Polyhedron& p, const QVector& x, const QVector& y) {
  const FaceDescriptor fx = smallest_face(p, x);
  const FaceDescriptor fy = smallest_face(p, y);
  if (fx.tight_set == fy.tight_set) return FaceRelation::EqualFace;
  const auto& tx = fx.tight_set;
  const auto& ty = fy.tight_set;
  if (std::includes(ty.begin(), ty.end(), tx.begin(), tx.end())) return FaceRelation::ProperSubface;
  if (std::includes(tx.begin(), tx.end(), ty.begin(), ty.end())) return FaceRelation::ProperSuperface;
  return FaceRelation::Incomparable;
}

/// x ∈ ri P: x in P and every non-implicit inequality strictly slack at x.
inline bool ri_membership(const Polyhedron& p, const QVector& x) {
  if (!p.contains(x)) return false;
  const auto tight = p.tight_set(x);
  if (tight.empty()) return true;
  return detail::analyze_slacks(p, tight, x).implicit.size() == tight.size();
}

/// Whether every coordinate is bounded above and below on P (P nonempty).
inline bool is_bounded(const Polyhedron& p) {
  const std::size_t n = p.ambient_dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      QVector c = QVector::unit(n, i);
      if (sign < 0) c = -c;
      if (solve(p, LinearObjective{c}).status == LpStatus::Unbounded) return false;
    }
  }
  return true;
}

/// Vertices of a bounded polyhedron, by enumerating full-rank subsets of
/// inequalities joined with the equalities. Sorted lexicographically.
inline std::vector<QVector> vertices(const Polyhedron& p) {
  const std::size_t n = p.ambient_dim();
  if (n > kMaxVertexEnumerationDim) {
    throw Error(ErrorCode::DimensionTooLarge, "vertices: ambient dimension " + std::to_string(n) + " > 6");
  }
  if (is_empty(p)) return {};
  if (!is_bounded(p)) throw Error(ErrorCode::UnboundedPolyhedron, "vertices");

  Matrix base;
  std::vector<Rational> base_rhs;
  for (auto i : independent_rows(p.eq_lhs())) {
    base.push_back(p.eq_lhs()[i]);
    base_rhs.push_back(p.eq_rhs()[i]);
  }
  const std::size_t need = n - base.size();
  std::set<QVector> found;
  std::vector<std::size_t> chosen;

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == need) {
      Matrix rows = base;
      std::vector<Rational> rhs = base_rhs;
      for (auto i : chosen) {
        rows.push_back(p.ineq_lhs()[i]);
        rhs.push_back(p.ineq_rhs()[i]);
      }
      auto x = solve_linear(rows, rhs, n);
      if (x && p.contains(*x)) found.insert(std::move(*x));
      return;
    }
    const std::size_t remaining = need - chosen.size();
    for (std::size_t i = next; i + remaining <= p.num_inequalities(); ++i) {
      Matrix rows = base;
      for (auto j : chosen) rows.push_back(p.ineq_lhs()[j]);
      rows.push_back(p.ineq_lhs()[i]);
      if (rank(rows) != rows.size()) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return {found.begin(), found.end()};
}

/// A point z of ri P.
///
/// SlackAverage averages the witness points of the slack analysis (each is
/// feasible and strictly slack on some non-implicit inequality, and every
/// non-implicit inequality is covered); it works for unbounded P.
/// VertexBarycenter averages vertices(P) and requires P bounded.
inline QVector relative_interior_point(const Polyhedron& p, RiStrategy strategy = RiStrategy::SlackAverage,
                                       const QVector* hint = nullptr) {
  if (strategy == RiStrategy::VertexBarycenter) {
    const auto verts = vertices(p);
    if (verts.empty()) throw Error(ErrorCode::EmptyPolyhedron, "relative_interior_point");
    return average(verts);
  }
  auto start = feasible_point(p, hint);
  if (!start) throw Error(ErrorCode::EmptyPolyhedron, "relative_interior_point");
  auto analysis = detail::analyze_slacks(p, detail::all_indices(p.num_inequalities()), *start);
  if (analysis.witnesses.empty()) return *start;
  return average(analysis.witnesses);
}

/// u = x + t(x - y) with x ∈ ri[y, u]: t is half the largest step <= 1 that
/// keeps u in P. Returns x when x == y, nullopt when no positive step exists.
inline std::optional<QVector> prolong(const Polyhedron& p, const QVector& x, const QVector& y) {
  if (!p.contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "prolong: x = " + to_string(x));
  if (!p.contains(y)) throw Error(ErrorCode::PointNotInPolyhedron, "prolong: y = " + to_string(y));
  if (x == y) return x;
  const QVector dir = x - y;
  Rational step = 1;
  for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
    const Rational rate = dot(p.ineq_lhs()[i], dir);
    if (rate > 0) step = std::min(step, Rational(p.slack(i, x) / rate));
  }
  if (step == 0) return std::nullopt;
  return x + (step / 2) * dir;
}

/// Every nonempty face of a bounded polyhedron, as the closure of the vertex
/// tight sets under intersection. Sorted by (dim, tight set).
inline std::vector<FaceDescriptor> enumerate_faces(const Polyhedron& p) {
  std::set<std::vector<std::size_t>> sets;
  for (const auto& v : vertices(p)) sets.insert(p.tight_set(v));
  std::vector<std::vector<std::size_t>> frontier(sets.begin(), sets.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    const std::vector<std::vector<std::size_t>> known(sets.begin(), sets.end());
    for (const auto& a : frontier) {
      for (const auto& b : known) {
        std::vector<std::size_t> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        if (sets.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    frontier = std::move(next);
  }
  std::vector<FaceDescriptor> faces;
  for (const auto& t : sets) faces.push_back(FaceDescriptor{t, detail::affine_dim(p, t)});
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace ricd
