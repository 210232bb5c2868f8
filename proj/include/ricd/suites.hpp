#pragma once

// Seeded property suites over random instances. Every instance draws from its
// own generator, seeded from (suite seed, instance index), so any single
// instance can be regenerated alone. A failing instance carries a JSON
// reproducer.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ricd/descent.hpp"
#include "ricd/diffusion.hpp"
#include "ricd/epigraph.hpp"
#include "ricd/json_io.hpp"
#include "ricd/random.hpp"

namespace ricd::suites {

using json_io::Json;

struct InstanceResult {
  std::size_t index = 0;
  bool passed = true;
  std::string detail;
  Json reproducer;  // null when passed
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<InstanceResult> results;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed ? 0 : 1;
    return n;
  }
};

/// splitmix64 of the pair, so neighbouring indices get unrelated streams.
inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(index) + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Collects violations of one instance.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_.empty()) first_ = what;
    if (!ok) ++violations_;
  }
  void note(const std::string& s) { notes_ += notes_.empty() ? s : ", " + s; }

  bool passed() const { return violations_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.empty()) out << ", " << notes_;
    if (!passed()) out << "; " << violations_ << " violations, first: " << first_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0, violations_ = 0;
  std::string first_, notes_;
};

struct DescentInstance {
  Polyhedron domain;
  std::vector<QVector> generators;
  LinearObjective objective;
  std::vector<Subspace> directions;

  Problem problem() const { return Problem(domain, objective, DirectionSet(directions)); }
  Schedule schedule() const { return Schedule::cyclic(directions.size()); }

  Json to_json(const QVector* start = nullptr) const {
    json_io::Instance inst{domain, objective, directions, {}, start ? *start : QVector(), StepRule{}, 100};
    return json_io::to_json(inst);
  }
};

/// Polytope of dim in [min_dim, max_dim] with at most 12 vertices, a small
/// integer objective (ties are common, so minimizer sets are often faces of
/// positive dimension) and one of three kinds of direction set.
inline DescentInstance random_descent_instance(Prng& rng, std::size_t min_dim, std::size_t max_dim) {
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_dim), static_cast<long>(max_dim)));
  const auto count =
      static_cast<std::size_t>(rng.uniform(static_cast<long>(n + 2), static_cast<long>(std::min<std::size_t>(12, 2 * n + 3))));
  auto poly = random_polytope(rng, n, count, n <= 2 ? 4 : 3);
  DescentInstance inst{std::move(poly.polytope), std::move(poly.generators), LinearObjective{random_direction(rng, n, 1)}, {}};
  switch (rng.uniform(0, 2)) {
    case 0: inst.directions = coordinate_directions(n); break;
    case 1: inst.directions = random_blocks(rng, n); break;
    default: inst.directions = random_subspaces(rng, n, static_cast<std::size_t>(rng.uniform(2, static_cast<long>(n) + 1)),
                                                std::max<std::size_t>(1, n - 1));
  }
  return inst;
}

/// Final point of a relative-interior run, if the run certified.
inline std::optional<QVector> certified_minimum(const Problem& prob, const QVector& start, const Schedule& sched,
                                                RiStrategy strategy = RiStrategy::VertexBarycenter) {
  const Trace t = run(prob, start, sched, StepRule::relative_interior(strategy), StopRule{60, 0});
  if (t.status != RunStatus::Certified) return std::nullopt;
  return t.final_point;
}

/// Interior local minima to start from: the ri point of the optimal face
/// (global minimizers are interior local minima) and the end points of
/// relative-interior runs from two generators that certified. Runs may
/// instead converge only in the limit, so an uncertified run is not an error.
inline std::vector<QVector> interior_minima(const Problem& prob, const DescentInstance& inst, const Schedule& sched,
                                            Checker& c) {
  std::vector<QVector> out = {relative_interior_point(optimal_face(prob.domain, prob.objective), RiStrategy::VertexBarycenter)};
  std::size_t certified = 0;
  for (std::size_t k = 0; k < 2 && k < inst.generators.size(); ++k) {
    if (auto y = certified_minimum(prob, inst.generators[k], sched)) {
      ++certified;
      if (std::find(out.begin(), out.end(), *y) == out.end()) out.push_back(*y);
    }
  }
  for (const auto& y : out) c.expect(is_interior_local_min(prob, y), "not an interior local minimum: " + to_string(y));
  c.note(std::to_string(certified) + "/2 runs certified");
  return out;
}

inline Json descent_reproducer(const std::string& suite, std::uint64_t seed, std::size_t index,
                               const DescentInstance& inst, const std::string& detail) {
  Json j = inst.to_json();
  j["suite"] = suite;
  j["seed"] = seed;
  j["index"] = index;
  j["prng"] = Prng::kAlgorithm;
  j["detail"] = detail;
  return j;
}

/// Local minima w.r.t. a dominating family are local w.r.t. the dominated one
/// (plain and interior versions).
inline void check_dominance(Prng& rng, const DescentInstance& inst, Checker& c) {
  const std::size_t n = inst.domain.ambient_dim();
  std::vector<Subspace> bigger;
  for (const auto& d : inst.directions) {
    Matrix vs = d.basis();
    const auto extra = rng.uniform(0, 1);
    for (long k = 0; k < extra; ++k) vs.push_back(random_direction(rng, n, 1));
    bigger.push_back(Subspace::span(n, vs));
  }
  if (rng.coin()) bigger.push_back(random_subspaces(rng, n, 1, n).front());
  const Problem small = inst.problem();
  const Problem big(inst.domain, inst.objective, DirectionSet(bigger));
  c.expect(dominates(big.directions, small.directions), "constructed family does not dominate");

  std::vector<QVector> probes = inst.generators;
  probes.push_back(relative_interior_point(inst.domain, RiStrategy::VertexBarycenter));
  for (std::size_t k = 0; k < 2 && k < inst.generators.size(); ++k) {
    if (auto y = certified_minimum(big, inst.generators[k], Schedule::cyclic(bigger.size()))) probes.push_back(*y);
  }
  if (auto y = certified_minimum(small, inst.generators.front(), inst.schedule())) probes.push_back(*y);
  std::size_t local = 0;
  for (const auto& x : probes) {
    if (is_local_min(big, x)) {
      ++local;
      c.expect(is_local_min(small, x), "local for dominating family but not dominated at " + to_string(x));
    }
    if (is_interior_local_min(big, x)) {
      c.expect(is_interior_local_min(small, x), "interior for dominating family but not dominated at " + to_string(x));
    }
  }
  c.note(std::to_string(local) + " dominating-local probes");
}

/// Every point of F(X, x) for a local minimum x is a local minimum; the ri of
/// the meet of two interior-local faces is interior-local; at dim <= 3 the
/// interior-local faces are closed under intersection.
inline void check_faces(const DescentInstance& inst, Checker& c) {
  const Problem prob = inst.problem();
  const Schedule sched = inst.schedule();
  std::vector<QVector> probes = inst.generators;
  for (const auto& g : inst.generators) {
    if (auto y = certified_minimum(prob, g, sched)) probes.push_back(*y);
  }
  std::vector<FaceDescriptor> interior_faces;
  for (const auto& x : probes) {
    if (!is_local_min(prob, x)) continue;
    const FaceDescriptor fx = smallest_face(prob.domain, x);
    const Polyhedron face = face_polyhedron(prob.domain, fx);
    std::vector<QVector> pts = vertices(face);
    pts.push_back(average(pts));
    for (const auto& p : pts) c.expect(is_local_min(prob, p), "face point not local: " + to_string(p) + " in F(X," + to_string(x) + ")");
    if (is_interior_local_min(prob, x) &&
        std::find(interior_faces.begin(), interior_faces.end(), fx) == interior_faces.end()) {
      interior_faces.push_back(fx);
    }
  }
  for (std::size_t a = 0; a < interior_faces.size(); ++a) {
    for (std::size_t b = a + 1; b < interior_faces.size(); ++b) {
      const auto meet = intersect_faces(prob.domain, interior_faces[a], interior_faces[b]);
      if (!meet) continue;
      const QVector z = relative_interior_point(face_polyhedron(prob.domain, *meet), RiStrategy::VertexBarycenter);
      c.expect(is_interior_local_min(prob, z), "ri of meet of interior faces not interior: " + to_string(z));
    }
  }
  c.note(std::to_string(interior_faces.size()) + " interior faces");

  if (prob.domain.ambient_dim() <= 3) {
    std::vector<FaceDescriptor> good;
    for (const auto& f : enumerate_faces(prob.domain)) {
      const QVector z = relative_interior_point(face_polyhedron(prob.domain, f), RiStrategy::VertexBarycenter);
      if (is_interior_local_min(prob, z)) good.push_back(f);
    }
    for (const auto& a : good) {
      for (const auto& b : good) {
        const auto meet = intersect_faces(prob.domain, a, b);
        if (!meet) continue;
        c.expect(std::find(good.begin(), good.end(), *meet) != good.end(), "interior faces not closed under intersection");
      }
    }
  }
}

/// Orthogonal projection of v onto the span of `basis` (independent rows).
inline QVector orthogonal_projection(const Matrix& basis, const QVector& v) {
  const std::size_t m = basis.size();
  if (m == 0) return QVector(v.size());
  Matrix gram(m, QVector(m));
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const QVector coef = *solve_linear(gram, rhs, m);
  QVector out(v.size());
  for (std::size_t i = 0; i < m; ++i) out += coef[i] * basis[i];
  return out;
}

/// ri X ∩ ri Y = ri(X ∩ Y) when the relative interiors meet.
inline void check_ricap(Prng& rng, const DescentInstance& inst, Checker& c) {
  const std::size_t n = inst.domain.ambient_dim();
  const Polyhedron& x = inst.domain;
  const QVector center = relative_interior_point(x, RiStrategy::VertexBarycenter);
  std::vector<Polyhedron> others;
  {
    const QVector a = random_direction(rng, n, 1);
    Polyhedron hyper(n);
    hyper.add_equality(a, dot(a, center));
    others.push_back(std::move(hyper));
  }
  {
    std::vector<QVector> shifted;
    for (const auto& g : inst.generators) {
      QVector s = g;
      for (auto& v : s) v += rng.uniform(-1, 1);
      shifted.push_back(std::move(s));
    }
    Matrix diffs;
    for (const auto& s : shifted) diffs.push_back(s - shifted.front());
    if (rank(diffs) == n) others.push_back(hull_to_hrep(shifted));
  }
  {
    const QVector a = random_direction(rng, n, 1);
    Polyhedron half(n);
    half.add_inequality(a, dot(a, center) + rng.uniform(0, 1));
    others.push_back(std::move(half));
  }
  std::size_t premises = 0;
  for (const auto& y : others) {
    const Polyhedron both = x.intersect(y);
    if (is_empty(both)) continue;
    const QVector z = relative_interior_point(both, RiStrategy::SlackAverage);
    if (!(ri_membership(x, z) && ri_membership(y, z))) continue;
    ++premises;
    // Along rays from z towards the generators: the exit point of X ∩ Y (on
    // its relative boundary unless the generator itself is inside) and the
    // point halfway to it.
    std::vector<QVector> probes = {z};
    const Matrix along = nullspace(both.eq_lhs(), n);
    for (const auto& g : inst.generators) {
      const QVector dir = orthogonal_projection(along, g - z);
      if (dir.is_zero()) continue;
      Rational step = 1;
      for (std::size_t i = 0; i < both.num_inequalities(); ++i) {
        const Rational rate = dot(both.ineq_lhs()[i], dir);
        if (rate > 0) step = std::min(step, Rational(both.slack(i, z) / rate));
      }
      probes.push_back(z + step * dir);
      probes.push_back(z + (step / 2) * dir);
      probes.push_back(z + dir);
    }
    for (const auto& p : probes) {
      c.expect((ri_membership(x, p) && ri_membership(y, p)) == ri_membership(both, p), "ri-cap fails at " + to_string(p));
    }
  }
  c.note(std::to_string(premises) + " intersecting pairs");
}

/// From a certified interior local minimum the relative-interior rule keeps f
/// and steps within ri F(X, previous); from a point of its face f stays
/// constant, faces grow along the trace, and the point after d+1 rounds is an
/// interior local minimum.
inline void check_iterations(const DescentInstance& inst, Checker& c) {
  const Problem prob = inst.problem();
  const Schedule sched = inst.schedule();
  const std::size_t d = dimension(prob.domain);
  for (const auto& y : interior_minima(prob, inst, sched, c)) {
    for (auto strategy : {RiStrategy::SlackAverage, RiStrategy::VertexBarycenter}) {
      const Trace t = run(prob, y, sched, StepRule::relative_interior(strategy), StopRule{2, 0});
      for (const auto& r : t.records) {
        c.expect(r.objective_after == prob.objective(y), "f changed after an interior local minimum");
        const Polyhedron prev = face_polyhedron(prob.domain, smallest_face(prob.domain, r.point_before));
        c.expect(ri_membership(prev, r.point_after), "step left ri F(X, previous) at " + to_string(r.point_after));
      }
    }
    const Polyhedron face = face_polyhedron(prob.domain, smallest_face(prob.domain, y));
    for (const auto& x : vertices(face)) {
      const Trace t = run(prob, x, sched, StepRule::relative_interior(RiStrategy::VertexBarycenter), StopRule{d + 1, 0});
      QVector prev = x;
      for (const auto& r : t.records) {
        c.expect(r.objective_after == prob.objective(x), "f not constant from a face point");
        const auto rel = face_relation(prob.domain, r.point_after, prev);
        c.expect(rel == FaceRelation::EqualFace || rel == FaceRelation::ProperSubface,
                 "faces do not grow along the trace at " + to_string(r.point_after));
        prev = r.point_after;
      }
      c.expect(is_interior_local_min(prob, t.final_point), "not interior after d+1 rounds from " + to_string(x));
    }
  }
}

/// Any rule started inside F(X, y) of an interior local minimum y keeps f and
/// stays inside F(X, y).
inline void check_captured(Prng& rng, const DescentInstance& inst, Checker& c) {
  const Problem prob = inst.problem();
  const Schedule sched = inst.schedule();
  std::size_t total_starts = 0;
  for (const auto& y : interior_minima(prob, inst, sched, c)) {
    const Polyhedron face = face_polyhedron(prob.domain, smallest_face(prob.domain, y));
    std::vector<QVector> starts = vertices(face);
    const std::size_t nv = starts.size();
    for (int k = 0; k < 2; ++k) {
      QVector mix(prob.domain.ambient_dim());
      Rational total = 0;
      for (std::size_t i = 0; i < nv; ++i) {
        const Rational w = rng.uniform(0, 3);
        mix += w * starts[i];
        total += w;
      }
      if (total > 0) starts.push_back(mix / total);
    }
    const std::vector<StepRule> rules = {StepRule::plain(Picker::LexMinVertex), StepRule::plain(Picker::StayIfOptimal),
                                         StepRule::relative_interior(RiStrategy::SlackAverage)};
    for (const auto& x : starts) {
      for (const auto& rule : rules) {
        const Trace t = run(prob, x, sched, rule, StopRule{3, 0});
        for (const auto& r : t.records) {
          c.expect(r.objective_after == prob.objective(x), "f changed from a captured start " + to_string(x));
          c.expect(face.contains(r.point_after), "left F(X, y) at " + to_string(r.point_after));
        }
      }
    }
    total_starts += starts.size();
  }
  c.note(std::to_string(total_starts) + " captured starts");
}

/// The f(p(x)) = f(x) test against the definition: x lies in some face whose
/// relative interior consists of interior local minima.
inline void check_cycle(Prng& rng, const DescentInstance& inst, Checker& c) {
  const Problem prob = inst.problem();
  const Schedule sched = inst.schedule();
  std::vector<Polyhedron> good;
  std::vector<QVector> probes = inst.generators;
  for (const auto& f : enumerate_faces(prob.domain)) {
    const Polyhedron face = face_polyhedron(prob.domain, f);
    const QVector z = relative_interior_point(face, RiStrategy::VertexBarycenter);
    probes.push_back(z);
    if (is_interior_local_min(prob, z)) good.push_back(face);
  }
  const std::size_t base = probes.size();
  for (int k = 0; k < 6; ++k) {
    const QVector& a = probes[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(base) - 1))];
    const QVector& b = probes[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(base) - 1))];
    const Rational t(rng.uniform(1, 4), 5);
    probes.push_back(a + t * (b - a));
  }
  std::size_t pre = 0;
  for (const auto& x : probes) {
    bool definitional = false;
    for (const auto& g : good) definitional = definitional || g.contains(x);
    const RiStrategy s = rng.coin() ? RiStrategy::SlackAverage : RiStrategy::VertexBarycenter;
    const bool tested = is_pre_interior_local_min(prob, x, sched, s);
    pre += tested ? 1 : 0;
    c.expect(tested == definitional, "pre-interior test " + std::string(tested ? "true" : "false") +
                                         " disagrees with the definition at " + to_string(x));
  }
  c.note(std::to_string(pre) + "/" + std::to_string(probes.size()) + " pre-interior probes");
}

/// Both equivalences between a restricted problem and its epigraph, at 20
/// probes, plus equality of the global minimizer sets.
inline Json check_epigraph(Prng& rng, Checker& c) {
  const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
  const auto poly = random_polytope(rng, n, static_cast<std::size_t>(rng.uniform(static_cast<long>(n) + 2, 8)), 3);
  const PiecewiseAffine f = random_piecewise_affine(rng, n);
  const Subspace dir = random_subspaces(rng, n, 1, n - 1).front();
  const QVector x = rng.coin() ? poly.generators.front() : relative_interior_point(poly.polytope, RiStrategy::VertexBarycenter);
  Json repro = {{"polyhedron", json_io::to_json(poly.polytope)},
                {"function", json_io::to_json(f)},
                {"direction", json_io::to_json(dir)},
                {"x", json_io::to_json(x)}};

  const EpigraphProblem e = lift(poly.polytope, f);
  const Polyhedron restricted = poly.polytope.restrict_to_affine(x, dir);
  const Polyhedron direct = minimizer_set_by_pieces(restricted, f);
  const Polyhedron lifted_m = minimizer_set(e.lifted, e.objective, lift_point(x, f), lift_direction(dir));

  std::vector<QVector> probes = vertices(direct);
  const QVector z = relative_interior_point(direct, RiStrategy::SlackAverage);
  probes.push_back(z);
  const auto restricted_vertices = vertices(restricted);
  for (const auto& v : restricted_vertices) probes.push_back((v + z) / Rational(2));
  for (const auto& v : restricted_vertices) probes.push_back(v);
  for (const auto& g : poly.generators) probes.push_back(g);
  while (probes.size() < 20) {
    const QVector& a = restricted_vertices[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(restricted_vertices.size()) - 1))];
    probes.push_back(a + Rational(rng.uniform(1, 4), 5) * (z - a));
  }
  probes.resize(20);
  for (const auto& y : probes) {
    const QVector ybar = lift_point(y, f);
    c.expect(direct.contains(y) == lifted_m.contains(ybar), "minimizer membership differs at " + to_string(y));
    c.expect(ri_membership(direct, y) == ri_membership(lifted_m, ybar), "ri membership differs at " + to_string(y));
  }

  Rational t;
  const Polyhedron global = minimizer_set_by_pieces(poly.polytope, f, &t);
  std::vector<QVector> expected;
  for (const auto& v : vertices(global)) expected.push_back(v.appended(t));
  c.expect(vertices(optimal_face(e.lifted, e.objective)) == expected, "global minimizer sets differ");
  const QVector ri_lifted = relative_interior_point(optimal_face(e.lifted, e.objective), RiStrategy::SlackAverage);
  c.expect(ri_membership(global, project_down(ri_lifted)) && ri_lifted[n] == t, "ri of lifted optimum does not project into ri");
  return repro;
}

/// Five sweeps of averaging diffusion: every update is a relative-interior
/// block minimizer, the bound never drops and stays below the primal minimum.
inline Json check_diffusion(Prng& rng, Checker& c) {
  const PairwiseModel m = random_model(rng);
  Json repro = {{"model", json_io::to_json(m)}};
  Reparametrization phi = zero_reparametrization(m);
  const Rational primal = primal_minimum(m);
  std::size_t pivots = 0;
  for (int sweep = 0; sweep < 5; ++sweep) {
    for (const auto& p : all_pivots(m)) {
      const bool ok = verify_ri_property(m, phi, p);
      c.expect(ok, "update not in ri of block minimizers at sweep " + std::to_string(sweep) + ", edge " +
                       std::to_string(p.edge) + (p.second ? " (v side)" : " (u side)"));
      if (!ok && !repro.contains("phi")) {
        repro["phi"] = json_io::to_json(phi);
        repro["pivot"] = {{"edge", p.edge}, {"second", p.second}};
      }
      const Reparametrization next = diffusion_step(m, phi, p);
      c.expect(dual_bound(m, next) >= dual_bound(m, phi), "dual bound decreased");
      c.expect(dual_bound(m, next) <= primal, "dual bound exceeds primal minimum");
      phi = next;
      ++pivots;
    }
  }
  c.note(std::to_string(pivots) + " pivots");
  return repro;
}

/// Simplex optimum equals the minimum over enumerated vertices.
inline Json check_lp(Prng& rng, Checker& c) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto poly = random_polytope(rng, n, static_cast<std::size_t>(rng.uniform(static_cast<long>(n) + 1, 10)));
  const LinearObjective f{random_direction(rng, n)};
  Json repro = {{"polyhedron", json_io::to_json(poly.polytope)}, {"objective", json_io::to_json(f.c)}};
  const LpOutcome r = solve(poly.polytope, f);
  c.expect(r.status == LpStatus::Optimal, "simplex did not report an optimum");
  if (r.status != LpStatus::Optimal) return repro;
  const auto verts = vertices(poly.polytope);
  Rational best = f(verts.front());
  for (const auto& v : verts) best = std::min(best, f(v));
  c.expect(r.value == best, "simplex " + to_string(r.value) + " vs vertex minimum " + to_string(best));
  c.expect(poly.polytope.contains(r.point) && f(r.point) == r.value, "simplex point inconsistent");
  return repro;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dominance", "faces",     "ricap",     "iterations", "captured",
                                                 "cycle",     "epigraph",  "diffusion", "lp"};
  return names;
}

/// One instance of a suite.
inline InstanceResult run_instance(const std::string& suite, std::uint64_t seed, std::size_t index) {
  Prng rng(instance_seed(seed, index));
  Checker c;
  Json repro;
  auto descent = [&](std::size_t lo, std::size_t hi, auto&& check) {
    const DescentInstance inst = random_descent_instance(rng, lo, hi);
    check(inst);
    repro = descent_reproducer(suite, seed, index, inst, c.summary());
  };
  try {
    if (suite == "dominance") {
      descent(2, 4, [&](const DescentInstance& i) { check_dominance(rng, i, c); });
    } else if (suite == "faces") {
      descent(2, 4, [&](const DescentInstance& i) { check_faces(i, c); });
    } else if (suite == "ricap") {
      descent(2, 4, [&](const DescentInstance& i) { check_ricap(rng, i, c); });
    } else if (suite == "iterations") {
      descent(2, 4, [&](const DescentInstance& i) { check_iterations(i, c); });
    } else if (suite == "captured") {
      descent(2, 4, [&](const DescentInstance& i) { check_captured(rng, i, c); });
    } else if (suite == "cycle") {
      descent(2, 2, [&](const DescentInstance& i) { check_cycle(rng, i, c); });
    } else if (suite == "epigraph") {
      repro = check_epigraph(rng, c);
    } else if (suite == "diffusion") {
      repro = check_diffusion(rng, c);
    } else if (suite == "lp") {
      repro = check_lp(rng, c);
    } else {
      throw Error(ErrorCode::UnknownSuite, "unknown suite \"" + suite + "\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownSuite) throw;
    c.expect(false, std::string("error: ") + e.what());
  }
  InstanceResult out{index, c.passed(), c.summary(), nullptr};
  if (!out.passed) {
    repro["suite"] = suite;
    repro["seed"] = seed;
    repro["index"] = index;
    repro["prng"] = Prng::kAlgorithm;
    repro["detail"] = out.detail;
    out.reproducer = std::move(repro);
  }
  return out;
}

/// `count` instances, reported in index order. `progress` is called after each.
inline SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t count,
                             const std::function<void(const InstanceResult&)>& progress = {}) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error(ErrorCode::UnknownSuite, "unknown suite \"" + suite + "\"");
  }
  SuiteReport report{suite, seed, {}};
  for (std::size_t i = 0; i < count; ++i) {
    report.results.push_back(run_instance(suite, seed, i));
    if (progress) progress(report.results.back());
  }
  return report;
}

}  // namespace ricd::suites
