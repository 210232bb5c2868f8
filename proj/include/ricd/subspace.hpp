#pragma once

#include <cstddef>
#include <vector>

#include "ricd/linalg.hpp"
#include "ricd/rational.hpp"

namespace ricd {

/// Linear subspace of Q^n given by an independent basis. Empty basis is {0}.
class Subspace {
 public:
  Subspace() = default;

  /// Throws InvalidArgument unless `basis` is linearly independent.
  Subspace(std::size_t ambient_dim, Matrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_ == 0) throw Error(ErrorCode::InvalidArgument, "subspace: ambient dimension must be positive");
    for (const auto& v : basis_) {
      if (v.size() != ambient_) throw Error(ErrorCode::InvalidArgument, "subspace: basis vector length");
    }
    if (rank(basis_) != basis_.size()) {
      throw Error(ErrorCode::InvalidArgument, "subspace: basis vectors are linearly dependent");
    }
  }

  /// Span of arbitrary vectors; dependent ones are dropped.
  static Subspace span(std::size_t ambient_dim, const Matrix& vectors) {
    Matrix basis;
    for (auto i : independent_rows(vectors)) basis.push_back(vectors[i]);
    return Subspace(ambient_dim, std::move(basis));
  }

  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  static Subspace full(std::size_t n) {
    Matrix basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(QVector::unit(n, i));
    return Subspace(n, std::move(basis));
  }

  /// span{e_i : i in coords}
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& coords) {
    Matrix basis;
    for (auto i : coords) basis.push_back(QVector::unit(n, i));
    return Subspace(n, std::move(basis));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const QVector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::InvalidArgument, "subspace: vector length");
    if (v.is_zero()) return true;
    Matrix stacked = basis_;
    stacked.push_back(v);
    return rank(stacked) == basis_.size();
  }

  /// this ⊆ other
  bool is_subspace_of(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorCode::InvalidArgument, "subspace: ambient mismatch");
    if (basis_.empty()) return true;
    Matrix stacked = other.basis_;
    stacked.insert(stacked.end(), basis_.begin(), basis_.end());
    return rank(stacked) == other.basis_.size();
  }

  bool same_span(const Subspace& other) const {
    return dim() == other.dim() && is_subspace_of(other);
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// N with dim N = n - dim I and every basis vector of N orthogonal to I.
inline Subspace orthogonal_complement(const Subspace& space) {
  return Subspace(space.ambient_dim(), nullspace(space.basis(), space.ambient_dim()));
}

/// [a, b] = conv{a, b}
struct Segment {
  QVector a;
  QVector b;
};

/// x ∈ ri[a, b]: x = (1-α)a + αb with 0 < α < 1, or a = b = x.
inline bool in_relative_interior_of_segment(const QVector& x, const Segment& s) {
  if (x.size() != s.a.size() || x.size() != s.b.size()) {
    throw Error(ErrorCode::InvalidArgument, "segment: dimension mismatch");
  }
  if (s.a == s.b) return x == s.a;
  std::size_t k = 0;
  while (s.a[k] == s.b[k]) ++k;
  const Rational alpha = (x[k] - s.a[k]) / (s.b[k] - s.a[k]);
  if (alpha <= 0 || alpha >= 1) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != (1 - alpha) * s.a[i] + alpha * s.b[i]) return false;
  }
  return true;
}

/// Given x = (1-α)u + αy with 0 < α < 1, returns v = (1-α)u + αz, which lies
/// in both ri[u, z] and ri[x, x + z - y].
inline QVector xyzu_witness(const QVector& y, const QVector& z, const QVector& u, const QVector& x,
                            const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw Error(ErrorCode::InvalidArgument, "xyzu_witness: alpha outside (0,1)");
  if (x != (1 - alpha) * u + alpha * y) {
    throw Error(ErrorCode::InvalidArgument, "xyzu_witness: x != (1-alpha)u + alpha y");
  }
  return (1 - alpha) * u + alpha * z;
}

}  // namespace ricd
