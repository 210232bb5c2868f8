// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "ricd/ricd.hpp"

namespace {

using namespace ricd;

Problem worked_problem() {
  Polyhedron x(2);
  x.add_inequality(QVector{0, -1}, 0);
  x.add_inequality(QVector{1, 0}, 3);
  x.add_inequality(QVector{1, 1}, 4);
  x.add_inequality(QVector{-4, -1}, -4);
  return Problem(x, LinearObjective{QVector{-1, 0}},
                 DirectionSet(std::vector<Subspace>{Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})}));
}

const Schedule kCyclic = Schedule::cyclic(2);

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [" << what << "]";
    }
  }
};

bool report(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.expect(secs < budget_s, "over time budget");
  std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << std::fixed
            << std::setprecision(2) << secs << " s, budget " << budget_s << " s)" << out.detail.str() << std::endl;
  return out.passed;
}

// Euclidean distance from x to the segment [a, b], in doubles.
double segment_distance(const QVector& x, const QVector& a, const QVector& b) {
  const double dx = b[0].convert_to<double>() - a[0].convert_to<double>();
  const double dy = b[1].convert_to<double>() - a[1].convert_to<double>();
  const double px = x[0].convert_to<double>() - a[0].convert_to<double>();
  const double py = x[1].convert_to<double>() - a[1].convert_to<double>();
  const double len2 = dx * dx + dy * dy;
  const double t = len2 == 0 ? 0 : std::clamp((px * dx + py * dy) / len2, 0.0, 1.0);
  return std::hypot(px - t * dx, py - t * dy);
}

void worked_example(Outcome& out) {
  const Problem prob = worked_problem();
  struct Probe {
    QVector x;
    bool local, interior, pre;
  };
  const std::vector<Probe> probes = {
      {{3, Rational(1, 2)}, true, true, true}, {{3, 0}, true, false, true}, {{3, 1}, true, false, true},
      {{0, 4}, true, true, true},              {{1, 3}, true, false, false},
  };
  for (const RiStrategy s : {RiStrategy::VertexBarycenter, RiStrategy::SlackAverage}) {
    for (const auto& p : probes) {
      const Classification c = classify(prob, p.x, kCyclic, s);
      const std::string at = to_string(p.x) + " " + json_io::strategy_name(s);
      out.expect(c.is_local == p.local, "local at " + at);
      out.expect(c.is_interior_local == p.interior, "interior at " + at);
      out.expect(c.is_pre_interior_local == p.pre, "pre-interior at " + at);
    }
    out.expect(!classify(prob, QVector{2, Rational(1, 2)}, kCyclic, s).is_local, "local at (2, 1/2)");
  }
}

void escape(Outcome& out) {
  const Problem prob = worked_problem();
  const Trace ri = run(prob, QVector{1, 3}, kCyclic, StepRule::relative_interior(RiStrategy::VertexBarycenter), StopRule{});
  out.expect(ri.records.size() >= 6 && ri.records[5].objective_after < -1, "no decrease within 3 rounds");
  out.expect(ri.status == RunStatus::Certified, "RI run not certified");
  out.expect(ri.final_objective == -3, "RI run ends at f = " + to_string(ri.final_objective));
  out.expect(is_interior_local_min(prob, ri.final_point), "endpoint not an interior local minimum");

  // The adversarial picker keeps returning the current point while it is
  // optimal for the block, so nothing moves.
  const Trace plain = run(prob, QVector{1, 3}, kCyclic, StepRule::plain(Picker::StayIfOptimal), StopRule{20, 0});
  out.expect(plain.rounds == 20, "plain run stopped early");
  for (const auto& r : plain.records) out.expect(r.objective_after == -1, "plain run moved off f = -1");
}

void convergence(Outcome& out) {
  const Problem prob = worked_problem();
  const Trace t = run(prob, QVector{1, 3}, kCyclic, StepRule::relative_interior(RiStrategy::VertexBarycenter), StopRule{50, 0});
  Polyhedron top(2);
  top.add_equality(QVector{1, 0}, 0);
  top.add_equality(QVector{0, 1}, 4);
  Polyhedron edge(2);
  edge.add_equality(QVector{1, 0}, 3);
  edge.add_inequality(QVector{0, -1}, 0);
  edge.add_inequality(QVector{0, 1}, 1);
  bool reached = false;
  for (std::size_t k = 1; k < t.records.size(); k += 2) {
    const QVector& x = t.records[k].point_after;
    const double oracle = std::min(segment_distance(x, QVector{0, 4}, QVector{0, 4}), segment_distance(x, QVector{3, 0}, QVector{3, 1}));
    out.expect(std::abs(oracle - distance_to_union({top, edge}, x)) < 1e-9, "distance disagrees with oracle");
    if (oracle < 1e-4) reached = true;
  }
  out.expect(reached, "distance stayed above 1e-4 for 50 rounds");
}

void suites_criterion(Outcome& out, const std::vector<std::string>& names, std::size_t count) {
  for (const auto& name : names) {
    const auto r = suites::run_suite(name, 1, count);
    if (r.failures() > 0) {
      std::ostringstream what;
      what << name << ": " << r.failures() << " violations";
      out.expect(false, what.str());
    }
    out.expect(r.results.size() == count, name + ": wrong instance count");
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "worked example classification", 1, worked_example);
  ok &= report(2, "escape vs stall on the worked example", 1, escape);
  ok &= report(3, "convergence to the minima union", 1, convergence);
  ok &= report(4, "property suites, 100 instances each", 300, [](Outcome& o) {
    suites_criterion(o, {"dominance", "faces", "ricap", "iterations", "captured", "cycle"}, 100);
  });
  ok &= report(5, "simplex vs vertex enumeration, 200 polytopes", 300,
               [](Outcome& o) { suites_criterion(o, {"lp"}, 200); });
  ok &= report(6, "epigraph equivalences, 50 instances", 300,
               [](Outcome& o) { suites_criterion(o, {"epigraph"}, 50); });
  ok &= report(7, "diffusion relative-interior selection, 20 models", 120,
               [](Outcome& o) { suites_criterion(o, {"diffusion"}, 20); });
  return ok ? 0 : 1;
}
