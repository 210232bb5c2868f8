#pragma once

// JSON forms of instances, functions, models and traces. Rationals are written
// as strings ("p/q" or "p"); on input, strings and JSON integers are accepted.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ricd/descent.hpp"
#include "ricd/diffusion.hpp"
#include "ricd/epigraph.hpp"

namespace ricd::json_io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("expected a rational (string or integer), got " + j.dump());
}

inline Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline QVector vector_from(const Json& j) {
  if (!j.is_array()) fail("expected an array of rationals, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from(x));
  return QVector(std::move(c));
}

inline std::size_t index_from(const Json& j) {
  if (!j.is_number_unsigned()) fail("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

inline Json to_json(const Polyhedron& p) {
  Json ineq = Json::array(), eq = Json::array();
  for (std::size_t i = 0; i < p.num_inequalities(); ++i) {
    ineq.push_back({{"a", to_json(p.ineq_lhs()[i])}, {"b", to_json(p.ineq_rhs()[i])}});
  }
  for (std::size_t i = 0; i < p.num_equalities(); ++i) {
    eq.push_back({{"a", to_json(p.eq_lhs()[i])}, {"b", to_json(p.eq_rhs()[i])}});
  }
  return {{"dim", p.ambient_dim()}, {"ineq", ineq}, {"eq", eq}};
}

inline Polyhedron polyhedron_from(const Json& j) {
  const std::size_t n = index_from(field(j, "dim"));
  if (n == 0) fail("polyhedron dimension must be positive");
  Polyhedron p(n);
  auto rows = [&](const char* key, bool equality) {
    if (!j.contains(key)) return;
    for (const auto& row : j.at(key)) {
      QVector a = vector_from(field(row, "a"));
      if (a.size() != n) fail(std::string("row length differs from dim in \"") + key + "\"");
      if (equality) {
        p.add_equality(std::move(a), rational_from(field(row, "b")));
      } else {
        p.add_inequality(std::move(a), rational_from(field(row, "b")));
      }
    }
  };
  rows("ineq", false);
  rows("eq", true);
  return p;
}

inline Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return basis;
}

inline Subspace subspace_from(const Json& j, std::size_t n) {
  if (!j.is_array()) fail("a direction is an array of basis vectors");
  Matrix basis;
  for (const auto& v : j) {
    basis.push_back(vector_from(v));
    if (basis.back().size() != n) fail("direction vector length differs from dim");
  }
  return Subspace::span(n, basis);
}

inline Json to_json(const PiecewiseAffine& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back({{"g", to_json(p.g)}, {"h", to_json(p.h)}});
  return {{"pieces", pieces}};
}

inline PiecewiseAffine piecewise_from(const Json& j) {
  std::vector<AffinePiece> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back({vector_from(field(p, "g")), rational_from(field(p, "h"))});
  if (pieces.empty()) fail("\"pieces\" is empty");
  try {
    return PiecewiseAffine(std::move(pieces));
  } catch (const Error& e) {
    fail(e.what());
  }
}

inline const char* strategy_name(RiStrategy s) {
  return s == RiStrategy::VertexBarycenter ? "barycenter" : "slack_average";
}

inline RiStrategy strategy_from(const std::string& s) {
  if (s == "barycenter") return RiStrategy::VertexBarycenter;
  if (s == "slack_average") return RiStrategy::SlackAverage;
  fail("unknown strategy \"" + s + "\"");
}

inline const char* picker_name(Picker p) { return p == Picker::LexMinVertex ? "lex_min_vertex" : "stay_if_optimal"; }

inline Picker picker_from(const std::string& s) {
  if (s == "lex_min_vertex") return Picker::LexMinVertex;
  if (s == "stay_if_optimal") return Picker::StayIfOptimal;
  fail("unknown picker \"" + s + "\"");
}

/// Everything needed for solve / classify / run.
struct Instance {
  Polyhedron polyhedron;
  LinearObjective objective;
  std::vector<Subspace> directions;
  std::vector<std::size_t> schedule;  // empty: cyclic
  QVector start;
  StepRule rule;
  std::size_t max_rounds = 100;

  Problem problem() const { return Problem(polyhedron, objective, DirectionSet(directions)); }
  Schedule sched() const {
    return schedule.empty() ? Schedule::cyclic(directions.size()) : Schedule(schedule, directions.size());
  }
};

inline Json to_json(const Instance& inst) {
  Json dirs = Json::array();
  for (const auto& d : inst.directions) dirs.push_back(to_json(d));
  Json out = {{"polyhedron", to_json(inst.polyhedron)}, {"objective", to_json(inst.objective.c)}, {"directions", dirs}};
  if (!inst.schedule.empty()) out["schedule"] = inst.schedule;
  if (inst.start.size() > 0) out["start"] = to_json(inst.start);
  out["rule"] = inst.rule.rule == UpdateRule::RelativeInterior ? "ri" : "plain";
  if (inst.rule.rule == UpdateRule::Plain) out["picker"] = picker_name(inst.rule.picker);
  out["strategy"] = strategy_name(inst.rule.strategy);
  out["max_rounds"] = inst.max_rounds;
  return out;
}

inline Instance instance_from(const Json& j) {
  try {
    Instance inst;
    inst.polyhedron = polyhedron_from(field(j, "polyhedron"));
    const std::size_t n = inst.polyhedron.ambient_dim();
    inst.objective = LinearObjective{vector_from(field(j, "objective"))};
    if (inst.objective.c.size() != n) fail("objective length differs from dim");
    if (j.contains("directions")) {
      for (const auto& d : j.at("directions")) inst.directions.push_back(subspace_from(d, n));
    } else {
      for (std::size_t i = 0; i < n; ++i) inst.directions.push_back(Subspace::coordinate(n, {i}));
    }
    if (inst.directions.empty()) fail("\"directions\" is empty");
    if (j.contains("schedule")) {
      for (const auto& s : j.at("schedule")) inst.schedule.push_back(index_from(s));
      inst.sched();  // validates
    }
    if (j.contains("start")) {
      inst.start = vector_from(j.at("start"));
      if (inst.start.size() != n) fail("start length differs from dim");
    }
    const std::string rule = j.value("rule", "ri");
    if (rule == "ri") {
      inst.rule.rule = UpdateRule::RelativeInterior;
    } else if (rule == "plain") {
      inst.rule.rule = UpdateRule::Plain;
    } else {
      fail("unknown rule \"" + rule + "\"");
    }
    inst.rule.picker = picker_from(j.value("picker", "lex_min_vertex"));
    inst.rule.strategy = strategy_from(j.value("strategy", "slack_average"));
    if (j.contains("max_rounds")) inst.max_rounds = index_from(j.at("max_rounds"));
    return inst;
  } catch (const Json::exception& e) {
    fail(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
}

inline Json to_json(const PairwiseModel& m) {
  Json unary = Json::array(), edges = Json::array();
  for (const auto& u : m.unary) unary.push_back(to_json(QVector(u)));
  for (const auto& e : m.edges) {
    Json costs = Json::array();
    for (const auto& row : e.costs) costs.push_back(to_json(QVector(row)));
    edges.push_back({{"uv", {e.u, e.v}}, {"costs", costs}});
  }
  return {{"nodes", m.num_nodes()}, {"labels", m.labels}, {"unary", unary}, {"edges", edges}};
}

inline PairwiseModel model_from(const Json& j) {
  try {
    PairwiseModel m;
    const std::size_t nodes = index_from(field(j, "nodes"));
    for (const auto& l : field(j, "labels")) m.labels.push_back(index_from(l));
    if (m.labels.size() != nodes) fail("\"labels\" must have one entry per node");
    for (const auto& u : field(j, "unary")) {
      const QVector v = vector_from(u);
      m.unary.emplace_back(v.begin(), v.end());
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        const Json& uv = field(e, "uv");
        if (!uv.is_array() || uv.size() != 2) fail("\"uv\" must be a pair of node indices");
        PairwiseEdge edge{index_from(uv[0]), index_from(uv[1]), {}};
        for (const auto& row : field(e, "costs")) {
          const QVector v = vector_from(row);
          edge.costs.emplace_back(v.begin(), v.end());
        }
        m.edges.push_back(std::move(edge));
      }
    }
    m.validate();
    return m;
  } catch (const Json::exception& e) {
    fail(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
}

inline Json to_json(const FaceDescriptor& f) { return {{"tight_set", f.tight_set}, {"dim", f.dim}}; }

inline Json to_json(const Classification& c) {
  Json out = {{"is_local", c.is_local},
              {"is_interior_local", c.is_interior_local},
              {"is_pre_interior_local", c.is_pre_interior_local},
              {"face", to_json(c.face)}};
  out["violating_direction"] = c.violating_direction ? Json(*c.violating_direction) : Json(nullptr);
  out["certified_point"] = c.certified_point ? to_json(*c.certified_point) : Json(nullptr);
  out["witness"] = c.witness;
  return out;
}

inline Json to_json(const IterationRecord& r) {
  return {{"step_index", r.step_index},
          {"direction_index", r.direction_index},
          {"point_before", to_json(r.point_before)},
          {"point_after", to_json(r.point_after)},
          {"objective_after", to_json(r.objective_after)},
          {"minimizer_face_dim", r.minimizer_face_dim},
          {"was_ri_selection", r.was_ri_selection}};
}

inline Json to_json(const Trace& t, const Classification& final_class) {
  Json records = Json::array();
  for (const auto& r : t.records) records.push_back(to_json(r));
  return {{"schema", kSchemaVersion},
          {"prng", Prng::kAlgorithm},
          {"status", run_status_name(t.status)},
          {"rounds", t.rounds},
          {"domain_dim", t.domain_dim},
          {"records", records},
          {"final_point", to_json(t.final_point)},
          {"final_objective", to_json(t.final_objective)},
          {"classification", to_json(final_class)}};
}

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(origin + ": " + e.what());
  }
}

inline Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

inline void save(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace ricd::json_io
