#pragma once

// Seeded generators for small random instances. The bit stream is
// std::mt19937_64, whose output sequence is fixed by the C++ standard; bounded
// integers are drawn as lo + (next() mod (hi - lo + 1)) rather than through
// <random> distributions, whose algorithms are implementation-defined. Both
// choices keep instance streams identical across standard libraries.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ricd/linalg.hpp"
#include "ricd/polyhedron.hpp"
#include "ricd/subspace.hpp"

namespace ricd {

class Prng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/mod";

  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

/// Integer normal with gcd 1 (rows of integer points give rational normals).
inline QVector primitive(QVector v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  Integer g = 0;
  for (auto& x : v) {
    x *= Rational(l);
    g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(x)));
  }
  if (g > 1) {
    for (auto& x : v) x /= Rational(g);
  }
  return v;
}

}  // namespace detail

/// H-representation of conv(points), which must affinely span Q^n. Facets are
/// found by brute force over n-subsets of the points: the hyperplane through a
/// subset is a facet iff it is unique and every point lies on one side.
inline Polyhedron hull_to_hrep(const std::vector<QVector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "hull_to_hrep: no points");
  const std::size_t n = points.front().size();
  {
    Matrix diffs;
    for (const auto& p : points) diffs.push_back(p - points.front());
    if (rank(diffs) != n) throw Error(ErrorCode::InvalidArgument, "hull_to_hrep: points not full-dimensional");
  }
  std::set<std::pair<QVector, Rational>> facets;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (pick.size() == n) {
      Matrix diffs;
      for (std::size_t k = 1; k < n; ++k) diffs.push_back(points[pick[k]] - points[pick[0]]);
      const Matrix normals = nullspace(diffs, n);
      if (normals.size() != 1) return;
      QVector a = detail::primitive(normals.front());
      Rational beta = dot(a, points[pick[0]]);
      bool below = false, above = false;
      for (const auto& p : points) {
        const Rational s = dot(a, p);
        if (s < beta) below = true;
        if (s > beta) above = true;
      }
      if (below && above) return;
      if (above) {
        a = -a;
        beta = -beta;
      }
      facets.emplace(std::move(a), std::move(beta));
      return;
    }
    for (std::size_t i = next; i < points.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  Polyhedron out(n);
  for (const auto& [a, b] : facets) out.add_inequality(a, b);
  return out;
}

struct RandomPolytope {
  Polyhedron polytope;
  std::vector<QVector> generators;  // conv(generators) == polytope
};

/// conv of `count` random integer points in [0, box]^n, redrawn until
/// full-dimensional.
inline RandomPolytope random_polytope(Prng& rng, std::size_t n, std::size_t count, long box = 4) {
  if (count < n + 1) count = n + 1;
  for (;;) {
    std::set<QVector> unique;
    for (std::size_t k = 0; k < count; ++k) {
      QVector p(n);
      for (auto& x : p) x = rng.uniform(0, box);
      unique.insert(std::move(p));
    }
    std::vector<QVector> pts(unique.begin(), unique.end());
    Matrix diffs;
    for (const auto& p : pts) diffs.push_back(p - pts.front());
    if (rank(diffs) != n) continue;
    return {hull_to_hrep(pts), std::move(pts)};
  }
}

/// Nonzero integer vector with entries in [-span, span].
inline QVector random_direction(Prng& rng, std::size_t n, long span = 2) {
  for (;;) {
    QVector c(n);
    for (auto& x : c) x = rng.uniform(-span, span);
    if (!c.is_zero()) return c;
  }
}

/// {span e_0, ..., span e_{n-1}}
inline std::vector<Subspace> coordinate_directions(std::size_t n) {
  std::vector<Subspace> dirs;
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(Subspace::coordinate(n, {i}));
  return dirs;
}

/// A random partition of the coordinates into blocks (block-coordinate
/// minimization), each block spanning its unit vectors.
inline std::vector<Subspace> random_blocks(Prng& rng, std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(blocks.size())));
    if (slot == blocks.size()) {
      blocks.push_back({i});
    } else {
      blocks[slot].push_back(i);
    }
  }
  std::vector<Subspace> dirs;
  for (const auto& b : blocks) dirs.push_back(Subspace::coordinate(n, b));
  return dirs;
}

/// Random family of `count` subspaces, each spanned by 1..max_dim random
/// integer vectors.
inline std::vector<Subspace> random_subspaces(Prng& rng, std::size_t n, std::size_t count, std::size_t max_dim) {
  std::vector<Subspace> dirs;
  for (std::size_t k = 0; k < count; ++k) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
    Matrix vs;
    for (std::size_t j = 0; j < d; ++j) vs.push_back(random_direction(rng, n, 1));
    dirs.push_back(Subspace::span(n, vs));
  }
  return dirs;
}

}  // namespace ricd
