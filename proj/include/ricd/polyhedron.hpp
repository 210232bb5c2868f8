#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "ricd/rational.hpp"
#include "ricd/subspace.hpp"

namespace ricd {

/// {x in Q^n : Ax <= b, Ex = d}. May be empty; emptiness is a queryable state.
///
/// Inequality row indices are stable: derived sets (faces, restrictions,
/// optimal faces) keep every inequality of their parent in the same position
/// and only append equalities, so tight sets of a parent and of its derived
/// sets are directly comparable.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t ambient_dim) : dim_(ambient_dim) {
    if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "polyhedron: ambient dimension must be positive");
  }
  Polyhedron(std::size_t ambient_dim, Matrix ineq_lhs, std::vector<Rational> ineq_rhs, Matrix eq_lhs = {},
             std::vector<Rational> eq_rhs = {})
      : dim_(ambient_dim),
        ineq_lhs_(std::move(ineq_lhs)),
        ineq_rhs_(std::move(ineq_rhs)),
        eq_lhs_(std::move(eq_lhs)),
        eq_rhs_(std::move(eq_rhs)) {
    if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "polyhedron: ambient dimension must be positive");
    if (ineq_lhs_.size() != ineq_rhs_.size() || eq_lhs_.size() != eq_rhs_.size()) {
      throw Error(ErrorCode::InvalidArgument, "polyhedron: lhs/rhs row count mismatch");
    }
    for (const auto& r : ineq_lhs_) check_row(r);
    for (const auto& r : eq_lhs_) check_row(r);
  }

  /// lo <= x_i <= hi for every coordinate.
  static Polyhedron box(std::size_t n, const Rational& lo, const Rational& hi) {
    Polyhedron p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.add_inequality(QVector::unit(n, i), hi);
      p.add_inequality(-QVector::unit(n, i), -lo);
    }
    return p;
  }

  void add_inequality(QVector a, Rational b) {
    check_row(a);
    ineq_lhs_.push_back(std::move(a));
    ineq_rhs_.push_back(std::move(b));
  }

  void add_equality(QVector e, Rational d) {
    check_row(e);
    eq_lhs_.push_back(std::move(e));
    eq_rhs_.push_back(std::move(d));
  }

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t num_inequalities() const noexcept { return ineq_lhs_.size(); }
  std::size_t num_equalities() const noexcept { return eq_lhs_.size(); }
  const Matrix& ineq_lhs() const noexcept { return ineq_lhs_; }
  const std::vector<Rational>& ineq_rhs() const noexcept { return ineq_rhs_; }
  const Matrix& eq_lhs() const noexcept { return eq_lhs_; }
  const std::vector<Rational>& eq_rhs() const noexcept { return eq_rhs_; }

  /// b_i - a_i x
  Rational slack(std::size_t i, const QVector& x) const { return ineq_rhs_[i] - dot(ineq_lhs_[i], x); }

  bool contains(const QVector& x) const {
    check_point(x);
    for (std::size_t i = 0; i < eq_lhs_.size(); ++i) {
      if (dot(eq_lhs_[i], x) != eq_rhs_[i]) return false;
    }
    for (std::size_t i = 0; i < ineq_lhs_.size(); ++i) {
      if (slack(i, x) < 0) return false;
    }
    return true;
  }

  /// {i : a_i x = b_i}, ascending.
  std::vector<std::size_t> tight_set(const QVector& x) const {
    check_point(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ineq_lhs_.size(); ++i) {
      if (slack(i, x) == 0) out.push_back(i);
    }
    return out;
  }

  /// The set with inequalities in `tight` forced to equality (kept as
  /// inequalities as well so row indices stay aligned).
  Polyhedron face(const std::vector<std::size_t>& tight) const {
    Polyhedron out = *this;
    for (auto i : tight) {
      if (i >= ineq_lhs_.size()) throw Error(ErrorCode::InvalidArgument, "face: inequality index out of range");
      out.add_equality(ineq_lhs_[i], ineq_rhs_[i]);
    }
    return out;
  }

  /// X ∩ (x + I), represented by appending N y = N x with N ⟂ I.
  Polyhedron restrict_to_affine(const QVector& x, const Subspace& directions) const {
    if (!contains(x)) throw Error(ErrorCode::PointNotInPolyhedron, "restrict_to_affine: " + to_string(x));
    if (directions.ambient_dim() != dim_) throw Error(ErrorCode::InvalidArgument, "restrict_to_affine: dimension");
    Polyhedron out = *this;
    const Subspace normals = orthogonal_complement(directions);
    for (const auto& normal : normals.basis()) {
      out.add_equality(normal, dot(normal, x));
    }
    return out;
  }

  /// All constraints of both sets; inequalities of *this come first.
  Polyhedron intersect(const Polyhedron& other) const {
    if (other.dim_ != dim_) throw Error(ErrorCode::InvalidArgument, "intersect: dimension mismatch");
    Polyhedron out = *this;
    for (std::size_t i = 0; i < other.num_inequalities(); ++i) out.add_inequality(other.ineq_lhs_[i], other.ineq_rhs_[i]);
    for (std::size_t i = 0; i < other.num_equalities(); ++i) out.add_equality(other.eq_lhs_[i], other.eq_rhs_[i]);
    return out;
  }

  /// Rows of the equalities and of the given inequalities, stacked.
  Matrix equality_rows_with(const std::vector<std::size_t>& ineq_indices) const {
    Matrix rows = eq_lhs_;
    for (auto i : ineq_indices) rows.push_back(ineq_lhs_[i]);
    return rows;
  }

 private:
  void check_row(const QVector& r) const {
    if (r.size() != dim_) throw Error(ErrorCode::InvalidArgument, "polyhedron: row length differs from dimension");
  }
  void check_point(const QVector& x) const {
    if (x.size() != dim_) throw Error(ErrorCode::InvalidArgument, "polyhedron: point dimension mismatch");
  }

  std::size_t dim_ = 0;
  Matrix ineq_lhs_;
  std::vector<Rational> ineq_rhs_;
  Matrix eq_lhs_;
  std::vector<Rational> eq_rhs_;
};

}  // namespace ricd
