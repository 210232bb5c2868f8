#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ricd/rational.hpp"

namespace ricd {

namespace detail {

inline std::size_t common_width(const Matrix& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "rows of unequal length");
  }
  return n;
}

/// Row scaled by the lcm of its denominators, so all entries are integers.
inline std::vector<Integer> integer_row(const QVector& row) {
  Integer l = 1;
  for (const auto& x : row) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) {
    out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
  }
  return out;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank(const Matrix& rows) {
  const std::size_t n = detail::common_width(rows);
  std::vector<std::vector<Integer>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(detail::integer_row(r));

  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

/// Reduced row echelon form over Q. `pivots[k]` is the pivot column of row k;
/// zero rows are dropped.
struct RowEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

inline RowEchelon rref(Matrix m) {
  const std::size_t n = detail::common_width(m);
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][col];
    m[r] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) {
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

/// Basis of {x : rows * x = 0}, one vector per free column.
inline Matrix nullspace(const Matrix& rows, std::size_t n) {
  if (rows.empty()) {
    Matrix basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(QVector::unit(n, i));
    return basis;
  }
  const RowEchelon e = rref(rows);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of rows * x = rhs (free coordinates set to 0), or nullopt
/// when the system is inconsistent.
inline std::optional<QVector> solve_linear(const Matrix& rows, const std::vector<Rational>& rhs, std::size_t n) {
  if (rows.size() != rhs.size()) throw Error(ErrorCode::InvalidArgument, "solve_linear: rhs length");
  Matrix aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw Error(ErrorCode::InvalidArgument, "solve_linear: row length");
    aug.push_back(rows[i].appended(rhs[i]));
  }
  QVector x(n);
  if (aug.empty()) return x;
  const RowEchelon e = rref(std::move(aug));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == n) return std::nullopt;
    x[e.pivots[k]] = e.rows[k][n];
  }
  return x;
}

/// Indices of a maximal linearly independent subset of rows, greedy in order.
inline std::vector<std::size_t> independent_rows(const Matrix& rows) {
  std::vector<std::size_t> keep;
  Matrix basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    basis.push_back(rows[i]);
    if (rank(basis) == basis.size()) {
      keep.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return keep;
}

}  // namespace ricd
