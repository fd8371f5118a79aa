// Acceptance gate: one check per shipped guarantee, each printing a single
// [PASS]/[FAIL] line with its measured numbers. Exit status 0 only when
// every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "parkinglot/chain.hpp"
#include "parkinglot/config.hpp"
#include "parkinglot/dhat.hpp"
#include "parkinglot/experiments.hpp"
#include "parkinglot/geometry.hpp"
#include "parkinglot/oracle.hpp"
#include "parkinglot/rng.hpp"
#include "parkinglot/spaces.hpp"
#include "parkinglot/weights.hpp"
#include "support/packing_oracle.hpp"

using namespace parkinglot;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

PointX sample_window(Rng& rng) {
  return {rng.uniform(-3 * kPi, 3 * kPi), rng.uniform(1.0, 10.0)};
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::path("acceptance_out") / tag;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentResult run_into(const std::string& name, const fs::path& dir,
                          ExperimentConfig cfg = {}) {
  cfg.out_dir = dir.string();
  return run_experiment(name, cfg);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void metric_validity() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  bool symmetric = true;
  double tri_worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const PointX a = sample_window(rng), b = sample_window(rng),
                 c = sample_window(rng);
    if (dist(a, b) != dist(b, a)) symmetric = false;
    tri_worst = std::max(tri_worst, dist(a, c) - dist(a, b) - dist(b, c));
  }
  double branch_worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double r1 = rng.uniform(1.0, 10.0), r2 = rng.uniform(1.0, 10.0);
    const double split = tangent_half_angle(r1) + tangent_half_angle(r2);
    const PointX p{0.0, r1}, q{split, r2};
    branch_worst = std::max(
        branch_worst, std::abs(chord_distance(p, q) - tangent_arc_distance(p, q)));
  }
  const double el = seconds_since(t0);
  const bool ok =
      symmetric && tri_worst <= 1e-9 && branch_worst <= 1e-9 && el < 10.0;
  report(1, "metric validity on random triples", ok,
         "symmetry " + std::string(symmetric ? "exact" : "BROKEN") +
             ", triangle slack " + fmt(tri_worst) + ", branch gap " +
             fmt(branch_worst) + ", " + fmt(el) + " s");
}

void oracle_agreement() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult r = run_into("oracle", fresh_dir("oracle"));
  const double el = seconds_since(t0);
  report(2, "grid oracle agreement on 200 pairs", r.passed && el < 120.0,
         r.summary + ", " + fmt(el) + " s");
}

void projection_correctness() {
  Rng rng(103);
  const Geodesic spiral = Geodesic::spiral_line();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PointX x{rng.uniform(-30.0, 30.0), std::exp(rng.uniform(0.0, 7.0))};
    worst = std::max(worst, std::abs(project(x, spiral) - x.theta));
  }
  bool minimizes = true;
  for (int i = 0; i < 100; ++i) {
    const PointX x{rng.uniform(-10.0, 10.0), rng.uniform(1.0, 10.0)};
    const double t0 = project(x, spiral);
    const double best = dist(x, spiral.eval(t0));
    for (int k = 0; k <= 1000; ++k) {
      const double t = t0 - 8.0 + 16.0 * k / 1000.0;
      if (best > dist(x, spiral.eval(t)) + 1e-9) minimizes = false;
    }
  }
  report(3, "numeric projection matches the boundary closed form",
         worst <= 1e-6 && minimizes,
         "worst parameter error " + fmt(worst) +
             (minimizes ? ", profile minimized" : ", NOT minimal"));
}

void fig2_refutation() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult r50 = run_into("fig2", fresh_dir("fig2_50"));
  ExperimentConfig big;
  big.fig2_k = 200;
  const ExperimentResult r200 = run_into("fig2", fresh_dir("fig2_200"), big);
  const double el = seconds_since(t0);
  report(4, "radial strip pair crossed by 50 and 200 curtain chains",
         r50.passed && r200.passed && el < 60.0,
         "K=50 " + std::string(r50.passed ? "ok" : "FAIL") + ", K=200 " +
             (r200.passed ? "ok" : "FAIL") + ", " + fmt(el) + " s");
}

void packing_equivalence() {
  bool ok = true;
  std::string detail;
  for (double gap = 0.5; gap <= 6.0 + 1e-12; gap += 0.5) {
    const int closed =
        max_same_dual_chain(Geodesic::spiral_line(), {0, 1}, {gap, 1})
            .cardinality();
    const int brute = max_unit_interval_packing(gap);
    if (closed != brute) {
      ok = false;
      detail += " gap " + fmt(gap) + ": " + std::to_string(closed) + " vs " +
                std::to_string(brute) + ";";
    }
  }
  report(5, "chain cardinality equals exhaustive interval packing", ok,
         ok ? "all gaps 0.5 .. 6.0 agree" : detail);
}

void quasipoint_boundedness() {
  const ExperimentResult r = run_into("quasipoint", fresh_dir("quasipoint"));
  report(6, "straightened attach family is bounded in the model", r.passed,
         r.summary);
}

void quasiline_growth() {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult r = run_into("quasiline", fresh_dir("quasiline"));
  const double el = seconds_since(t0);
  report(7, "boundary-line lower bound crosses the cap on schedule",
         r.passed && el < 60.0, r.summary + ", " + fmt(el) + " s");
}

void qi_crossover() {
  const ExperimentResult r = run_into("qi", fresh_dir("qi"));
  report(8, "shear distortion table has its crossover row", r.passed,
         r.summary);
}

void wz_contrast() {
  const ExperimentResult r = run_into("wz", fresh_dir("wz"));
  report(9, "glued spaces separate across the model bound", r.passed,
         r.summary);
}

void contraction() {
  Rng rng(110);
  const Geodesic spiral = Geodesic::spiral_line();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(1.5, 20.0);
    const PointX center{rng.uniform(-10.0, 10.0), r};
    const double radius = rng.uniform(0.0, 0.9 * (r - 1.0));
    worst = std::max(worst,
                     contraction_probe(spiral, center, radius, 400, rng.raw()));
  }
  report(10, "balls project to at most half the boundary circumference",
         worst <= kPi + 1e-6, "largest projected diameter " + fmt(worst));
}

void determinism() {
  bool ok = true;
  std::string detail;
  for (const std::string& name : experiment_names()) {
    const ExperimentResult ra = run_into(name, fresh_dir(name + "_a"));
    const ExperimentResult rb = run_into(name, fresh_dir(name + "_b"));
    bool same = ra.files.size() == rb.files.size();
    for (size_t i = 0; same && i < ra.files.size(); ++i)
      same = slurp(ra.files[i]) == slurp(rb.files[i]);
    if (!same) {
      ok = false;
      detail += " " + name;
    }
  }
  report(11, "experiment reruns emit byte-identical tables", ok,
         ok ? "all six experiments reproduce" : ("diverged:" + detail));
}

}  // namespace

int main() {
  metric_validity();
  oracle_agreement();
  projection_correctness();
  fig2_refutation();
  packing_equivalence();
  quasipoint_boundedness();
  quasiline_growth();
  qi_crossover();
  wz_contrast();
  contraction();
  determinism();
  if (g_failures == 0) {
    std::printf("all 11 acceptance criteria hold\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
