#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "parkinglot/config.hpp"
#include "parkinglot/experiments.hpp"

using namespace parkinglot;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Csv read_csv(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  Csv out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      out.header = cells;
      first = false;
    } else {
      out.rows.push_back(cells);
    }
  }
  return out;
}

int column(const Csv& c, const std::string& name) {
  for (size_t i = 0; i < c.header.size(); ++i)
    if (c.header[i] == name) return static_cast<int>(i);
  FAIL("missing column ", name);
  return -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::path("exp_test_out") / tag;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentResult run_into(const std::string& name, const fs::path& dir,
                          ExperimentConfig cfg = {}) {
  cfg.out_dir = dir.string();
  return run_experiment(name, cfg);
}

}  // namespace

TEST_CASE("the strip-pair refutation builds its fifty-curtain chain") {
  const fs::path dir = fresh_dir("fig2");
  const ExperimentResult r = run_into("fig2", dir);
  CHECK(r.passed);

  const Csv chain = read_csv(dir / "fig2_chain.csv");
  CHECK(chain.rows.size() == 50);
  const int tag = column(chain, "tag");
  const int m1 = column(chain, "meets_h1"), m2 = column(chain, "meets_h2");
  for (const auto& row : chain.rows) {
    CHECK(row[tag] == "certified");
    CHECK(row[m1] == "1");
    CHECK(row[m2] == "1");
  }

  const Csv rep = read_csv(dir / "fig2_report.csv");
  REQUIRE(rep.rows.size() == 1);
  CHECK(std::stoi(rep.rows[0][column(rep, "max_chain")]) >= 50);
}

TEST_CASE("attach points of the straightened family stay close in the model") {
  const fs::path dir = fresh_dir("quasipoint");
  const ExperimentResult r = run_into("quasipoint", dir);
  CHECK(r.passed);

  const Csv t = read_csv(dir / "quasipoint.csv");
  const int iu = column(t, "i"), ju = column(t, "j");
  const int du = column(t, "dist"), up = column(t, "upper");
  CHECK(t.rows.size() == 40 * 41 / 2);
  bool found_divergent = false;
  for (const auto& row : t.rows) {
    CHECK(std::stod(row[up]) <= 18.0 + 1e-9);
    if (std::stoi(row[iu]) == 0 && std::stoi(row[ju]) >= 21) {
      CHECK(std::stod(row[du]) > 1e6);
      found_divergent = true;
    }
  }
  CHECK(found_divergent);
}

TEST_CASE("boundary-line lower bounds grow past the radial cap at the predicted angle") {
  const fs::path dir = fresh_dir("quasiline");
  const ExperimentResult r = run_into("quasiline", dir);
  CHECK(r.passed);

  const Csv t = read_csv(dir / "quasiline.csv");
  const int th = column(t, "theta"), lo = column(t, "lower");
  double prev = -1.0, crossing = -1.0;
  for (const auto& row : t.rows) {
    const double v = std::stod(row[lo]);
    CHECK(v >= prev - 1e-12);
    if (crossing < 0 && v > 18.0) crossing = std::stod(row[th]);
    prev = v;
  }
  REQUIRE(crossing > 0);

  const Csv rep = read_csv(dir / "quasiline_refuter.csv");
  REQUIRE(rep.rows.size() == 1);
  const int lhat_col = column(rep, "l_hat");
  const int lhat = std::stoi(rep.rows[0][lhat_col]);
  CHECK(lhat >= 1);
  // crossing within one pole spacing of 1 + 18 / sum of weights past l_hat
  const double s0 = std::ldexp(1.0, 1 - lhat);  // geometric half weights
  const double predicted = 1.0 + 18.0 / s0;
  CHECK(std::abs(crossing - predicted) <= 1.0 + 1e-6);
}

TEST_CASE("one glued family stays bounded while the other spreads") {
  const fs::path dir = fresh_dir("wz");
  const ExperimentResult r = run_into("wz", dir);
  CHECK(r.passed);

  const Csv t = read_csv(dir / "wz_contrast.csv");
  const int space = column(t, "space"), up = column(t, "upper"),
            lo = column(t, "lower");
  bool w_exceeds = false;
  for (const auto& row : t.rows) {
    if (row[space] == "Z") CHECK(std::stod(row[up]) <= 18.0 + 1e-9);
    if (row[space] == "W" && std::stod(row[lo]) > 18.0) w_exceeds = true;
  }
  CHECK(w_exceeds);

  const Csv fit = read_csv(dir / "wz_qifit.csv");
  REQUIRE(fit.rows.size() == 1);
  CHECK(std::stod(fit.rows[0][column(fit, "max_violation")]) == 0.0);
  CHECK(std::stoi(fit.rows[0][column(fit, "pairs")]) == 10000);
}

TEST_CASE("a reduced oracle sweep agrees with the distance formula") {
  const fs::path dir = fresh_dir("oracle");
  ExperimentConfig cfg;
  cfg.oracle_pairs = 20;
  const ExperimentResult r = run_into("oracle", dir, cfg);
  CHECK(r.passed);

  const Csv t = read_csv(dir / "oracle.csv");
  CHECK(t.rows.size() == 20);
  const int ok = column(t, "ok");
  for (const auto& row : t.rows) CHECK(row[ok] == "1");
}

TEST_CASE("the shear distortion table contains its crossover row") {
  const fs::path dir = fresh_dir("qi");
  const ExperimentResult r = run_into("qi", dir);
  CHECK(r.passed);

  const Csv t = read_csv(dir / "qi_distortion.csv");
  const int lo = column(t, "src_lower"), up = column(t, "img_upper");
  const int cross = column(t, "crossover");
  bool seen = false;
  for (const auto& row : t.rows) {
    CHECK(std::stod(row[up]) <= 18.0 + 1e-9);
    if (row[cross] == "1") {
      seen = true;
      CHECK(std::stod(row[lo]) > 18.0);
    }
  }
  CHECK(seen);

  const Csv fit = read_csv(dir / "qi_fit.csv");
  const int mv = column(fit, "max_violation");
  for (const auto& row : fit.rows) CHECK(std::stod(row[mv]) == 0.0);
}

TEST_CASE("experiment reruns are byte-identical") {
  for (const std::string name : {"fig2", "quasiline", "quasipoint"}) {
    const fs::path a = fresh_dir(name + "_a"), b = fresh_dir(name + "_b");
    const ExperimentResult ra = run_into(name, a), rb = run_into(name, b);
    REQUIRE(ra.files.size() == rb.files.size());
    for (size_t i = 0; i < ra.files.size(); ++i)
      CHECK(slurp(ra.files[i]) == slurp(rb.files[i]));
  }
}

TEST_CASE("unknown experiment names are rejected") {
  CHECK_THROWS_AS(run_into("nonsense", fresh_dir("nonsense")),
                  std::domain_error);
}

TEST_CASE("configs round-trip through their text form") {
  ExperimentConfig c;
  c.rho = 0.25;
  c.fig2_k = 77;
  c.seed = 424242;
  c.out_dir = "elsewhere";
  const ExperimentConfig back = parse_config(serialize_config(c));
  CHECK(back.rho == c.rho);
  CHECK(back.fig2_k == c.fig2_k);
  CHECK(back.seed == c.seed);
  CHECK(back.out_dir == c.out_dir);
}

TEST_CASE("config parsing reports the offending line") {
  try {
    parse_config("rho=0.5\nnot_a_key=3\n");
    FAIL("expected a parse error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("rho=1.5\n"), std::domain_error);
  CHECK_THROWS_AS(parse_config("lmax=abc\n"), std::domain_error);
  // comments and blank lines pass through
  const ExperimentConfig c = parse_config("# comment\n\nrho=0.75\n");
  CHECK(c.rho == 0.75);
}
