// ricd: solve, classify and run descent instances; verify property suites;
// epigraph and diffusion front ends. JSON goes to stdout (or --out),
// diagnostics to stderr.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 domain error (point outside
// X, unbounded direction, model too large, LP not optimal), 3 unknown suite,
// 4 run not certified / property violations.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "ricd/ricd.hpp"

namespace {

using namespace ricd;
using json_io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUnknownSuite = 3;
constexpr int kExitViolation = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kExitInput;
    case ErrorCode::UnknownSuite: return kExitUnknownSuite;
    case ErrorCode::InvalidArgument: return kExitInput;
    default: return kExitDomain;
  }
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    json_io::save(out_path, j);
  }
}

QVector parse_point(const std::string& text) {
  std::vector<Rational> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    c.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return QVector(std::move(c));
}

struct CommonOptions {
  std::string instance;
  std::string out;
};

int cmd_solve(const CommonOptions& opt) {
  const auto inst = json_io::instance_from(json_io::load(opt.instance));
  const LpOutcome r = solve(inst.polyhedron, inst.objective);
  Json j = {{"schema", json_io::kSchemaVersion}, {"status", lp_status_name(r.status)}};
  if (r.status == LpStatus::Optimal) {
    j["value"] = json_io::to_json(r.value);
    j["point"] = json_io::to_json(r.point);
    const Polyhedron face = optimal_face(inst.polyhedron, inst.objective);
    j["optimal_face_dim"] = dimension(face);
    j["optimal_face_ri_point"] = json_io::to_json(relative_interior_point(face, RiStrategy::SlackAverage));
    Json duals = Json::array();
    for (const auto& d : r.ineq_duals) duals.push_back(json_io::to_json(d));
    j["inequality_duals"] = duals;
  }
  emit(j, opt.out);
  return r.status == LpStatus::Optimal ? kExitOk : kExitDomain;
}

int cmd_classify(const CommonOptions& opt, const std::string& point) {
  const auto inst = json_io::instance_from(json_io::load(opt.instance));
  const QVector x = point.empty() ? inst.start : parse_point(point);
  if (x.size() != inst.polyhedron.ambient_dim()) throw Error(ErrorCode::ParseError, "point has the wrong length");
  const Classification c = classify(inst.problem(), x, inst.sched(), inst.rule.strategy);
  Json j = {{"schema", json_io::kSchemaVersion}, {"point", json_io::to_json(x)}};
  j["classification"] = json_io::to_json(c);
  emit(j, opt.out);
  return kExitOk;
}

int cmd_run(const CommonOptions& opt, const std::string& start, long max_rounds) {
  const Json doc = json_io::load(opt.instance);
  auto inst = json_io::instance_from(doc);
  if (!start.empty()) inst.start = parse_point(start);
  if (inst.start.size() != inst.polyhedron.ambient_dim()) throw Error(ErrorCode::ParseError, "no valid start point");
  if (max_rounds >= 0) inst.max_rounds = static_cast<std::size_t>(max_rounds);
  const Problem prob = inst.problem();
  const Trace t = run(prob, inst.start, inst.sched(), inst.rule, StopRule{inst.max_rounds, 0});
  const Classification c = classify(prob, t.final_point, inst.sched(), inst.rule.strategy);
  Json j = json_io::to_json(t, c);
  j["instance"] = json_io::to_json(inst);
  // Optional convergence report: distance to a union of bounded targets after
  // every round.
  if (doc.contains("targets")) {
    std::vector<Polyhedron> targets;
    for (const auto& p : doc.at("targets")) targets.push_back(json_io::polyhedron_from(p));
    Json dist = Json::array();
    dist.push_back(distance_to_union(targets, inst.start));
    const std::size_t per_round = inst.sched().order().size();
    for (std::size_t k = per_round; k <= t.records.size(); k += per_round) {
      dist.push_back(distance_to_union(targets, t.records[k - 1].point_after));
    }
    j["distance_per_round"] = dist;
  }
  emit(j, opt.out);
  std::cerr << "status " << run_status_name(t.status) << " after " << t.rounds << " rounds, f = "
            << to_string(t.final_objective) << '\n';
  return t.status == RunStatus::Certified ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t count, const std::string& out_dir) {
  const auto report = suites::run_suite(suite, seed, count, [](const suites::InstanceResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.index << (r.detail.empty() ? "" : "  " + r.detail) << '\n';
  });
  std::cout << suite << ": " << (count - report.failures()) << "/" << count << " passed (seed " << seed << ", prng "
            << Prng::kAlgorithm << ")\n";
  if (report.failures() == 0) return kExitOk;
  std::filesystem::create_directories(out_dir);
  for (const auto& r : report.results) {
    if (r.passed) continue;
    const std::string path =
        (std::filesystem::path(out_dir) / (suite + "_seed" + std::to_string(seed) + "_" + std::to_string(r.index) + ".json"))
            .string();
    json_io::save(path, r.reproducer);
    std::cerr << "reproducer written to " << path << '\n';
  }
  return kExitViolation;
}

int cmd_epigraph(const CommonOptions& opt, const std::string& point) {
  const Json doc = json_io::load(opt.instance);
  const Polyhedron x = json_io::polyhedron_from(json_io::field(doc, "polyhedron"));
  const PiecewiseAffine f = json_io::piecewise_from(json_io::field(doc, "function"));
  if (f.dim() != x.ambient_dim()) throw Error(ErrorCode::ParseError, "function dimension differs from polyhedron");
  std::vector<Subspace> dirs;
  if (doc.contains("directions")) {
    for (const auto& d : doc.at("directions")) dirs.push_back(json_io::subspace_from(d, x.ambient_dim()));
  } else {
    dirs = coordinate_directions(x.ambient_dim());
  }
  const EpigraphProblem e = lift(x, f);
  const LpOutcome r = solve(e.lifted, e.objective);
  Json j = {{"schema", json_io::kSchemaVersion}, {"status", lp_status_name(r.status)}};
  if (r.status != LpStatus::Optimal) {
    emit(j, opt.out);
    return kExitDomain;
  }
  j["minimum"] = json_io::to_json(r.value);
  j["minimizer"] = json_io::to_json(project_down(r.point));
  const Polyhedron face = optimal_face(e.lifted, e.objective);
  j["minimizer_set_ri_point"] = json_io::to_json(project_down(relative_interior_point(face, RiStrategy::SlackAverage)));
  if (!point.empty() || doc.contains("point")) {
    const QVector y = point.empty() ? json_io::vector_from(doc.at("point")) : parse_point(point);
    if (!x.contains(y)) throw Error(ErrorCode::PointNotInPolyhedron, "point " + to_string(y));
    const DirectionSet ds(dirs);
    const Problem lifted = lifted_problem(x, f, ds);
    j["point"] = json_io::to_json(y);
    j["lifted_point"] = json_io::to_json(lift_point(y, f));
    j["is_local"] = is_local_min(lifted, lift_point(y, f));
    j["is_interior_local"] = is_interior_local_min(lifted, lift_point(y, f));
    j["is_pre_interior_local"] =
        is_pre_interior_local_min(lifted, lift_point(y, f), Schedule::cyclic(ds.size()), RiStrategy::SlackAverage);
  }
  emit(j, opt.out);
  return kExitOk;
}

int cmd_diffusion(const CommonOptions& opt, std::size_t sweeps, bool one_sided) {
  const PairwiseModel m = json_io::model_from(json_io::load(opt.instance));
  check_model_size(m);
  const DiffusionRule rule = one_sided ? DiffusionRule::OneSided : DiffusionRule::Averaging;
  Reparametrization phi = zero_reparametrization(m);
  Json steps = Json::array();
  bool all_ri = true;
  for (std::size_t s = 0; s < sweeps; ++s) {
    for (const auto& p : all_pivots(m)) {
      const bool ri = verify_ri_property(m, phi, p, rule);
      all_ri = all_ri && ri;
      phi = diffusion_step(m, phi, p, rule);
      steps.push_back({{"sweep", s}, {"edge", p.edge}, {"node", p.node(m)}, {"bound", json_io::to_json(dual_bound(m, phi))},
                       {"ri_selection", ri}});
    }
  }
  Json j = {{"schema", json_io::kSchemaVersion},
            {"rule", one_sided ? "one_sided" : "averaging"},
            {"initial_bound", json_io::to_json(dual_bound(m, zero_reparametrization(m)))},
            {"final_bound", json_io::to_json(dual_bound(m, phi))},
            {"primal_minimum", json_io::to_json(primal_minimum(m))},
            {"all_ri", all_ri},
            {"steps", steps},
            {"phi", json_io::to_json(phi)}};
  emit(j, opt.out);
  return all_ri ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative-interior coordinate descent on polyhedra, with exact arithmetic"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string point, start, suite, out_dir = "counterexamples";
  long max_rounds = -1;
  std::uint64_t seed = 1;
  std::size_t count = 100, sweeps = 5;
  bool one_sided = false;

  auto* solve_cmd = app.add_subcommand("solve", "minimize the instance objective over its polyhedron");
  auto* classify_cmd = app.add_subcommand("classify", "local / interior / pre-interior tests at a point");
  auto* run_cmd = app.add_subcommand("run", "run the descent and write a trace");
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite on seeded random instances");
  auto* epigraph_cmd = app.add_subcommand("epigraph", "minimize a max-of-affine function through its epigraph");
  auto* diffusion_cmd = app.add_subcommand("diffusion", "max-sum diffusion sweeps with the relative-interior check");

  for (auto* cmd : {solve_cmd, classify_cmd, run_cmd, epigraph_cmd, diffusion_cmd}) {
    cmd->add_option("instance", common.instance, "JSON input file")->required();
    cmd->add_option("-o,--out", common.out, "write JSON here instead of stdout");
  }
  classify_cmd->add_option("-p,--point", point, "comma-separated rationals (default: the instance start)");
  epigraph_cmd->add_option("-p,--point", point, "point to classify on the lifted problem");
  run_cmd->add_option("-s,--start", start, "override the start point");
  run_cmd->add_option("-r,--max-rounds", max_rounds, "override max_rounds");
  verify_cmd->add_option("suite", suite, "dominance | faces | ricap | iterations | captured | cycle | epigraph | diffusion | lp")
      ->required();
  verify_cmd->add_option("--seed", seed, "suite seed");
  verify_cmd->add_option("--count", count, "number of instances");
  verify_cmd->add_option("--out-dir", out_dir, "where reproducers of failing instances go");
  diffusion_cmd->add_option("--sweeps", sweeps, "full sweeps over all pivots");
  diffusion_cmd->add_flag("--one-sided", one_sided, "use the one-sided update instead of averaging");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(common);
    if (*classify_cmd) return cmd_classify(common, point);
    if (*run_cmd) return cmd_run(common, start, max_rounds);
    if (*verify_cmd) return cmd_verify(suite, seed, count, out_dir);
    if (*epigraph_cmd) return cmd_epigraph(common, point);
    if (*diffusion_cmd) return cmd_diffusion(common, sweeps, one_sided);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
