#pragma once

// Max-sum diffusion on tiny pairwise models (min-sum convention), and an
// exact check that each diffusion update picks a relative-interior point of
// its block-minimizer set.
//
// Reparametrization phi holds phi_{u,e}(i) for every edge e = (u, v), first
// the labels of u, then those of v, edge by edge. With
//   theta^phi_u(i)    = theta_u(i) + sum_{e ∋ u} phi_{u,e}(i)
//   theta^phi_e(i, j) = theta_e(i, j) - phi_{u,e}(i) - phi_{v,e}(j)
// the dual bound is sum_u min_i theta^phi_u(i) + sum_e min_ij theta^phi_e(i, j).

#include <algorithm>
#include <utility>
#include <vector>

#include "ricd/descent.hpp"
#include "ricd/epigraph.hpp"
#include "ricd/faces.hpp"
#include "ricd/random.hpp"

namespace ricd {

struct PairwiseEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::vector<std::vector<Rational>> costs;  // costs[i][j], i a label of u, j of v
};

struct PairwiseModel {
  std::vector<std::size_t> labels;          // per node
  std::vector<std::vector<Rational>> unary;  // unary[u][i]
  std::vector<PairwiseEdge> edges;

  std::size_t num_nodes() const noexcept { return labels.size(); }

  /// Throws InvalidArgument on inconsistent shapes.
  void validate() const {
    if (labels.empty()) throw Error(ErrorCode::InvalidArgument, "model: no nodes");
    if (unary.size() != labels.size()) throw Error(ErrorCode::InvalidArgument, "model: unary count");
    for (std::size_t u = 0; u < labels.size(); ++u) {
      if (labels[u] == 0) throw Error(ErrorCode::InvalidArgument, "model: node without labels");
      if (unary[u].size() != labels[u]) throw Error(ErrorCode::InvalidArgument, "model: unary length");
    }
    for (const auto& e : edges) {
      if (e.u >= labels.size() || e.v >= labels.size() || e.u == e.v) {
        throw Error(ErrorCode::InvalidArgument, "model: bad edge endpoints");
      }
      if (e.costs.size() != labels[e.u]) throw Error(ErrorCode::InvalidArgument, "model: edge cost rows");
      for (const auto& row : e.costs) {
        if (row.size() != labels[e.v]) throw Error(ErrorCode::InvalidArgument, "model: edge cost columns");
      }
    }
  }

  /// Offset of phi_{node,e}(0); `second` selects the v endpoint.
  std::size_t phi_offset(std::size_t edge, bool second) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < edge; ++k) off += labels[edges[k].u] + labels[edges[k].v];
    return second ? off + labels[edges[edge].u] : off;
  }

  std::size_t phi_dim() const { return edges.empty() ? 0 : phi_offset(edges.size() - 1, true) + labels[edges.back().v]; }
};

using Reparametrization = QVector;

/// A node together with one of its edges: the block phi_{u,e}(·).
struct Pivot {
  std::size_t edge = 0;
  bool second = false;  // false: u endpoint, true: v endpoint

  std::size_t node(const PairwiseModel& m) const { return second ? m.edges[edge].v : m.edges[edge].u; }
};

/// Every (edge, endpoint) pair in storage order: one sweep.
inline std::vector<Pivot> all_pivots(const PairwiseModel& m) {
  std::vector<Pivot> out;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    out.push_back({e, false});
    out.push_back({e, true});
  }
  return out;
}

inline Reparametrization zero_reparametrization(const PairwiseModel& m) { return QVector(m.phi_dim()); }

namespace detail {

inline void check_phi(const PairwiseModel& m, const Reparametrization& phi) {
  if (phi.size() != m.phi_dim()) throw Error(ErrorCode::InvalidArgument, "reparametrization has wrong length");
}

inline void check_pivot(const PairwiseModel& m, const Pivot& p) {
  if (p.edge >= m.edges.size()) throw Error(ErrorCode::InvalidArgument, "pivot edge out of range");
}

}  // namespace detail

inline Rational reparam_unary(const PairwiseModel& m, const Reparametrization& phi, std::size_t u, std::size_t i) {
  Rational val = m.unary[u][i];
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    if (m.edges[e].u == u) val += phi[m.phi_offset(e, false) + i];
    if (m.edges[e].v == u) val += phi[m.phi_offset(e, true) + i];
  }
  return val;
}

inline Rational reparam_pairwise(const PairwiseModel& m, const Reparametrization& phi, std::size_t e, std::size_t i,
                                 std::size_t j) {
  return m.edges[e].costs[i][j] - phi[m.phi_offset(e, false) + i] - phi[m.phi_offset(e, true) + j];
}

inline Rational node_min(const PairwiseModel& m, const Reparametrization& phi, std::size_t u) {
  Rational best = reparam_unary(m, phi, u, 0);
  for (std::size_t i = 1; i < m.labels[u]; ++i) best = std::min(best, reparam_unary(m, phi, u, i));
  return best;
}

inline Rational edge_min(const PairwiseModel& m, const Reparametrization& phi, std::size_t e) {
  const auto& edge = m.edges[e];
  Rational best = reparam_pairwise(m, phi, e, 0, 0);
  for (std::size_t i = 0; i < m.labels[edge.u]; ++i) {
    for (std::size_t j = 0; j < m.labels[edge.v]; ++j) best = std::min(best, reparam_pairwise(m, phi, e, i, j));
  }
  return best;
}

/// min over the other endpoint's labels of theta^phi_e, as seen from the pivot node.
inline Rational min_marginal(const PairwiseModel& m, const Reparametrization& phi, const Pivot& p, std::size_t i) {
  const auto& edge = m.edges[p.edge];
  const std::size_t other = p.second ? edge.u : edge.v;
  std::optional<Rational> best;
  for (std::size_t j = 0; j < m.labels[other]; ++j) {
    const Rational c = p.second ? reparam_pairwise(m, phi, p.edge, j, i) : reparam_pairwise(m, phi, p.edge, i, j);
    if (!best || c < *best) best = c;
  }
  return *best;
}

inline Rational dual_bound(const PairwiseModel& m, const Reparametrization& phi) {
  detail::check_phi(m, phi);
  Rational total = 0;
  for (std::size_t u = 0; u < m.num_nodes(); ++u) total += node_min(m, phi, u);
  for (std::size_t e = 0; e < m.edges.size(); ++e) total += edge_min(m, phi, e);
  return total;
}

/// Brute-force minimum energy over all labelings.
inline Rational primal_minimum(const PairwiseModel& m) {
  std::vector<std::size_t> x(m.num_nodes(), 0);
  std::optional<Rational> best;
  for (;;) {
    Rational energy = 0;
    for (std::size_t u = 0; u < x.size(); ++u) energy += m.unary[u][x[u]];
    for (const auto& e : m.edges) energy += e.costs[x[e.u]][x[e.v]];
    if (!best || energy < *best) best = energy;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == m.labels[k]) x[k++] = 0;
    if (k == x.size()) break;
  }
  return *best;
}

enum class DiffusionRule {
  Averaging,  // split the gap evenly between node and edge
  OneSided,   // move the whole edge min-marginal onto the node
};

inline Reparametrization diffusion_step(const PairwiseModel& m, Reparametrization phi, const Pivot& p,
                                        DiffusionRule rule = DiffusionRule::Averaging) {
  detail::check_phi(m, phi);
  detail::check_pivot(m, p);
  const std::size_t u = p.node(m);
  const std::size_t off = m.phi_offset(p.edge, p.second);
  std::vector<Rational> shift(m.labels[u]);
  for (std::size_t i = 0; i < m.labels[u]; ++i) {
    const Rational marginal = min_marginal(m, phi, p, i);
    shift[i] = rule == DiffusionRule::Averaging ? (marginal - reparam_unary(m, phi, u, i)) / 2 : marginal;
  }
  for (std::size_t i = 0; i < m.labels[u]; ++i) phi[off + i] += shift[i];
  return phi;
}

constexpr std::size_t kMaxDiffusionPhi = 24;
constexpr std::size_t kMaxDiffusionLabels = 3;
constexpr std::size_t kMaxDiffusionNodes = 4;

inline void check_model_size(const PairwiseModel& m) {
  const bool labels_ok = std::all_of(m.labels.begin(), m.labels.end(), [](auto l) { return l <= kMaxDiffusionLabels; });
  if (m.num_nodes() > kMaxDiffusionNodes || !labels_ok || m.phi_dim() > kMaxDiffusionPhi) {
    throw Error(ErrorCode::ModelTooLarge, "model exceeds 4 nodes, 3 labels or 24 reparametrization coordinates");
  }
}

/// Minimization of -dual_bound over (phi, m) with one auxiliary variable per
/// node and per edge, m_w <= every term of w. Variables: phi, then m_u per
/// node, then m_e per edge.
struct DualEncoding {
  EpigraphProblem problem;
  Subspace block;   // the pivot's phi block plus every auxiliary coordinate
  QVector point;    // (phi, term minima)
};

/// (phi, term minima): the feasible point with the best auxiliary values.
inline QVector encode_point(const PairwiseModel& m, const Reparametrization& phi) {
  std::vector<Rational> c(phi.begin(), phi.end());
  for (std::size_t u = 0; u < m.num_nodes(); ++u) c.push_back(node_min(m, phi, u));
  for (std::size_t e = 0; e < m.edges.size(); ++e) c.push_back(edge_min(m, phi, e));
  return QVector(std::move(c));
}

inline DualEncoding encode_dual_block(const PairwiseModel& m, const Reparametrization& phi, const Pivot& p) {
  m.validate();
  check_model_size(m);
  detail::check_phi(m, phi);
  detail::check_pivot(m, p);
  const std::size_t d = m.phi_dim();
  const std::size_t n = d + m.num_nodes() + m.edges.size();
  Polyhedron x(n);
  for (std::size_t u = 0; u < m.num_nodes(); ++u) {
    for (std::size_t i = 0; i < m.labels[u]; ++i) {
      QVector a(n);
      a[d + u] = 1;
      for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].u == u) a[m.phi_offset(e, false) + i] = -1;
        if (m.edges[e].v == u) a[m.phi_offset(e, true) + i] = -1;
      }
      x.add_inequality(std::move(a), m.unary[u][i]);
    }
  }
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    const auto& edge = m.edges[e];
    for (std::size_t i = 0; i < m.labels[edge.u]; ++i) {
      for (std::size_t j = 0; j < m.labels[edge.v]; ++j) {
        QVector a(n);
        a[d + m.num_nodes() + e] = 1;
        a[m.phi_offset(e, false) + i] = 1;
        a[m.phi_offset(e, true) + j] = 1;
        x.add_inequality(std::move(a), edge.costs[i][j]);
      }
    }
  }
  QVector c(n);
  for (std::size_t k = d; k < n; ++k) c[k] = -1;

  std::vector<std::size_t> coords;
  const std::size_t off = m.phi_offset(p.edge, p.second);
  for (std::size_t i = 0; i < m.labels[p.node(m)]; ++i) coords.push_back(off + i);
  for (std::size_t k = d; k < n; ++k) coords.push_back(k);
  return {{std::move(x), LinearObjective{std::move(c)}}, Subspace::coordinate(n, coords), encode_point(m, phi)};
}

/// Feasible set of the block subproblem: other phi coordinates fixed.
inline Polyhedron restrict_to_block(const DualEncoding& enc) {
  return enc.problem.lifted.restrict_to_affine(enc.point, enc.block);
}

/// The block subproblem of the encoding, solved by the exact engine.
inline Polyhedron block_minimizer_set(const DualEncoding& enc) {
  return minimizer_set(enc.problem.lifted, enc.problem.objective, enc.point, enc.block);
}

/// The encoded image of the updated phi lies in the relative interior of the
/// block-minimizer set computed by the engine.
inline bool verify_ri_property(const PairwiseModel& m, const Reparametrization& phi, const Pivot& p,
                               DiffusionRule rule = DiffusionRule::Averaging) {
  const DualEncoding enc = encode_dual_block(m, phi, p);
  const Polyhedron block_min = block_minimizer_set(enc);
  const QVector next = encode_point(m, diffusion_step(m, phi, p, rule));
  return block_min.contains(next) && ri_membership(block_min, next);
}

/// Random model with 2..max_nodes nodes, 2..max_labels labels and integer
/// costs in [0, 4]; edges form a random nonempty subset of node pairs that
/// respects the size guard.
inline PairwiseModel random_model(Prng& rng, std::size_t max_nodes = kMaxDiffusionNodes,
                                  std::size_t max_labels = kMaxDiffusionLabels) {
  PairwiseModel m;
  const auto nodes = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(max_nodes)));
  for (std::size_t u = 0; u < nodes; ++u) {
    const auto l = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(max_labels)));
    m.labels.push_back(l);
    std::vector<Rational> un;
    for (std::size_t i = 0; i < l; ++i) un.emplace_back(rng.uniform(0, 4));
    m.unary.push_back(std::move(un));
  }
  std::size_t phi = 0;
  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::size_t v = u + 1; v < nodes; ++v) {
      const bool first = m.edges.empty() && v == nodes - 1 && u == nodes - 2;
      if (!rng.coin() && !first) continue;
      if (phi + m.labels[u] + m.labels[v] > kMaxDiffusionPhi) continue;
      PairwiseEdge e{u, v, {}};
      for (std::size_t i = 0; i < m.labels[u]; ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < m.labels[v]; ++j) row.emplace_back(rng.uniform(0, 4));
        e.costs.push_back(std::move(row));
      }
      phi += m.labels[u] + m.labels[v];
      m.edges.push_back(std::move(e));
    }
  }
  return m;
}

}  // namespace ricd
