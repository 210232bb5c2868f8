#pragma once

// Exact rational linear programming over H-represented polyhedra.
//
// Equalities are eliminated first by parametrizing their solution set
// x = origin + N z, leaving an inequality-form problem in the free variables
// z. That problem is solved by a dense two-phase tableau simplex with Bland's
// rule (lowest-index entering column, lowest-index basic variable among tied
// ratios), so it terminates on degenerate input and is fully deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "ricd/linalg.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/rational.hpp"

namespace ricd {

/// f(x) = <c, x>
struct LinearObjective {
  QVector c;

  Rational operator()(const QVector& x) const { return dot(c, x); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "OPTIMAL";
    case LpStatus::Infeasible: return "INFEASIBLE";
    case LpStatus::Unbounded: return "UNBOUNDED";
  }
  return "?";
}

/// When Optimal, `point` is in P, <c, point> = value, and the multipliers
/// certify it: ineq_duals >= 0, c + A^T ineq_duals + E^T eq_duals = 0 and
/// -b^T ineq_duals - d^T eq_duals = value.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  QVector point;
  Rational value;
  std::vector<Rational> ineq_duals;
  std::vector<Rational> eq_duals;
};

namespace detail {

/// x = origin + sum_j z_j directions[j] parametrizes {x : Ex = d}.
struct AffineChart {
  QVector origin;
  Matrix directions;
};

inline std::optional<AffineChart> equality_chart(const Polyhedron& p, const QVector* hint) {
  const std::size_t n = p.ambient_dim();
  AffineChart chart;
  if (p.num_equalities() == 0) {
    chart.origin = hint ? *hint : QVector(n);
    for (std::size_t i = 0; i < n; ++i) chart.directions.push_back(QVector::unit(n, i));
    return chart;
  }
  bool hint_ok = hint != nullptr;
  for (std::size_t i = 0; hint_ok && i < p.num_equalities(); ++i) {
    hint_ok = dot(p.eq_lhs()[i], *hint) == p.eq_rhs()[i];
  }
  if (hint_ok) {
    chart.origin = *hint;
  } else {
    auto particular = solve_linear(p.eq_lhs(), p.eq_rhs(), n);
    if (!particular) return std::nullopt;
    chart.origin = std::move(*particular);
  }
  chart.directions = nullspace(p.eq_lhs(), n);
  return chart;
}

/// min c^T z  s.t.  A z <= b, z free.
class InequalitySimplex {
 public:
  InequalitySimplex(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c)
      : k_(c.size()), m_(b.size()) {
    std::vector<std::size_t> flipped;
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < 0) flipped.push_back(i);
    }
    num_art_ = flipped.size();
    width_ = 2 * k_ + m_ + num_art_;
    rows_.assign(m_, std::vector<Rational>(width_ + 1));
    basis_.assign(m_, 0);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < k_; ++j) {
        if (a[i][j] == 0) continue;
        row[j] = flip ? Rational(-a[i][j]) : a[i][j];
        row[k_ + j] = -row[j];
      }
      row[slack_col(i)] = flip ? -1 : 1;
      row[width_] = flip ? Rational(-b[i]) : b[i];
      if (flip) {
        row[2 * k_ + m_ + art] = 1;
        basis_[i] = 2 * k_ + m_ + art;
        ++art;
      } else {
        basis_[i] = slack_col(i);
      }
    }
    cost_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < k_; ++j) {
      cost_[j] = c[j];
      cost_[k_ + j] = -c[j];
    }
  }

  LpStatus run() {
    allowed_.assign(width_, true);
    if (num_art_ > 0) {
      std::vector<Rational> phase1(width_, Rational(0));
      for (std::size_t j = 2 * k_ + m_; j < width_; ++j) phase1[j] = 1;
      load_objective(phase1);
      iterate();
      if (-obj_[width_] > 0) return LpStatus::Infeasible;
      drive_out_artificials();
      for (std::size_t j = 2 * k_ + m_; j < width_; ++j) allowed_[j] = false;
    }
    load_objective(cost_);
    if (!iterate()) return LpStatus::Unbounded;

    z_.assign(k_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t col = basis_[i];
      if (col < k_) {
        z_[col] += rows_[i][width_];
      } else if (col < 2 * k_) {
        z_[col - k_] -= rows_[i][width_];
      }
    }
    lambda_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) lambda_[i] = obj_[slack_col(i)];
    value_ = -obj_[width_];
    return LpStatus::Optimal;
  }

  const std::vector<Rational>& z() const { return z_; }
  const std::vector<Rational>& lambda() const { return lambda_; }
  const Rational& value() const { return value_; }

 private:
  std::size_t slack_col(std::size_t i) const { return 2 * k_ + i; }
  bool is_artificial(std::size_t col) const { return col >= 2 * k_ + m_; }

  void load_objective(const std::vector<Rational>& cost) {
    obj_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (rows_[i][j] != 0) obj_[j] -= cb * rows_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[col] == 0) return;
      const Rational f = row[col];
      for (auto j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = col;
  }

  /// Returns false when the objective is unbounded below.
  bool iterate() {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (allowed_[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::size_t col = 0;
      while (col < 2 * k_ + m_ && rows_[i][col] == 0) ++col;
      if (col < 2 * k_ + m_) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant row: zero in every structural and slack column.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t k_;
  std::size_t m_;
  std::size_t num_art_ = 0;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> obj_;
  std::vector<bool> allowed_;
  std::vector<Rational> z_;
  std::vector<Rational> lambda_;
  Rational value_;
};

}  // namespace detail

/// Minimizes <c, x> over P. `feasible_hint`, when it is a point of P, spares
/// the phase-one search; it never changes the status or the optimal value.
inline LpOutcome solve(const Polyhedron& p, const LinearObjective& f, const QVector* feasible_hint = nullptr) {
  const std::size_t n = p.ambient_dim();
  if (f.c.size() != n) throw Error(ErrorCode::InvalidArgument, "solve: objective length differs from dimension");
  if (feasible_hint && feasible_hint->size() != n) feasible_hint = nullptr;

  LpOutcome out;
  auto chart = detail::equality_chart(p, feasible_hint);
  if (!chart) return out;

  const std::size_t k = chart->directions.size();
  const std::size_t m = p.num_inequalities();
  Matrix reduced_a(m, QVector(k));
  std::vector<Rational> reduced_b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) reduced_a[i][j] = dot(p.ineq_lhs()[i], chart->directions[j]);
    reduced_b[i] = p.slack(i, chart->origin);
  }
  std::vector<Rational> reduced_c(k);
  for (std::size_t j = 0; j < k; ++j) reduced_c[j] = dot(f.c, chart->directions[j]);

  std::vector<Rational> z(k);
  std::vector<Rational> lambda(m, Rational(0));
  if (k == 0) {
    for (const auto& s : reduced_b) {
      if (s < 0) return out;
    }
  } else {
    detail::InequalitySimplex simplex(reduced_a, reduced_b, reduced_c);
    out.status = simplex.run();
    if (out.status != LpStatus::Optimal) return out;
    z = simplex.z();
    lambda = simplex.lambda();
  }

  out.status = LpStatus::Optimal;
  out.point = chart->origin;
  for (std::size_t j = 0; j < k; ++j) {
    if (z[j] != 0) out.point += z[j] * chart->directions[j];
  }
  out.value = f(out.point);
  out.ineq_duals = std::move(lambda);

  if (p.num_equalities() > 0) {
    // E^T mu = -(c + A^T lambda); consistent because the reduced problem is stationary.
    QVector residual = f.c;
    for (std::size_t i = 0; i < m; ++i) {
      if (out.ineq_duals[i] != 0) residual += out.ineq_duals[i] * p.ineq_lhs()[i];
    }
    Matrix transposed(n, QVector(p.num_equalities()));
    for (std::size_t r = 0; r < p.num_equalities(); ++r) {
      for (std::size_t col = 0; col < n; ++col) transposed[col][r] = p.eq_lhs()[r][col];
    }
    auto mu = solve_linear(transposed, (-residual).coords(), p.num_equalities());
    if (!mu) throw Error(ErrorCode::InvalidArgument, "solve: internal error, inconsistent equality multipliers");
    out.eq_duals = mu->coords();
  }
  return out;
}

/// M(P, f) as a polyhedron: P plus the equality <c, x> = min.
inline Polyhedron optimal_face(const Polyhedron& p, const LinearObjective& f, const QVector* feasible_hint = nullptr) {
  const LpOutcome r = solve(p, f, feasible_hint);
  if (r.status != LpStatus::Optimal) {
    throw Error(ErrorCode::NotOptimal, std::string("optimal_face: LP is ") + lp_status_name(r.status));
  }
  Polyhedron face = p;
  if (!f.c.is_zero()) face.add_equality(f.c, r.value);
  return face;
}

/// Lexicographically smallest point of P (a vertex when P is bounded).
inline QVector lexicographic_min(Polyhedron p) {
  const std::size_t n = p.ambient_dim();
  QVector hint;
  for (std::size_t i = 0; i < n; ++i) {
    const LpOutcome r = solve(p, LinearObjective{QVector::unit(n, i)}, hint.empty() ? nullptr : &hint);
    if (r.status == LpStatus::Infeasible) throw Error(ErrorCode::EmptyPolyhedron, "lexicographic_min");
    if (r.status == LpStatus::Unbounded) {
      throw Error(ErrorCode::UnboundedPolyhedron, "lexicographic_min: coordinate unbounded below");
    }
    p.add_equality(QVector::unit(n, i), r.value);
    hint = r.point;
  }
  return hint;
}

}  // namespace ricd
