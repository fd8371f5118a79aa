#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parkinglot/geometry.hpp"
#include "parkinglot/oracle.hpp"
#include "parkinglot/rng.hpp"

using namespace parkinglot;

namespace {

constexpr double kPi = std::numbers::pi;

double agreement_tol(double d, double resolution) {
  return std::max(0.02 * d, 5.0 * resolution);
}

}  // namespace

TEST_CASE("graph distance matches the radial ray exactly") {
  const double o = oracle_dist({0, 2}, {0, 5}, 0.05);
  CHECK(o >= 3.0 - 1e-9);
  CHECK(o <= 3.0 + agreement_tol(3.0, 0.05));
}

TEST_CASE("graph distance follows the boundary arc") {
  const double o = oracle_dist({0, 1}, {kPi, 1}, 0.05);
  CHECK(o >= kPi - 1e-9);
  CHECK(o <= kPi + agreement_tol(kPi, 0.05));
}

TEST_CASE("graph distance reproduces the half-turn wrap value") {
  const double d = dist({0, 2}, {kPi, 2});
  const double o = oracle_dist({0, 2}, {kPi, 2}, 0.01);
  CHECK(std::abs(o - d) <= agreement_tol(d, 0.01));
}

TEST_CASE("graph distance reproduces a short chord hop") {
  const double d = dist({-0.1, 3}, {0.1, 3});
  const double o = oracle_dist({-0.1, 3}, {0.1, 3}, 0.01);
  CHECK(std::abs(o - d) <= agreement_tol(d, 0.01));
}

TEST_CASE("pairs wound more than a half turn get no flat shortcut") {
  // regression: the direct endpoint edge must respect the winding, not the
  // mod-2pi plane positions
  const PointX p{-4.55147377181, 3.5372028457};
  const PointX q{2.7065745602, 8.58720525194};
  const double d = dist(p, q);
  const double o = oracle_dist(p, q, 0.01);
  CHECK(o >= d - 1e-9);
  CHECK(std::abs(o - d) <= agreement_tol(d, 0.01));
}

TEST_CASE("graph paths never beat the exact distance on random pairs") {
  Rng rng(21);
  for (int i = 0; i < 25; ++i) {
    const PointX p{rng.uniform(-3 * kPi, 3 * kPi), rng.uniform(1.0, 10.0)};
    const PointX q{rng.uniform(-3 * kPi, 3 * kPi), rng.uniform(1.0, 10.0)};
    const double d = dist(p, q);
    const double o = oracle_dist(p, q, 0.01);
    CHECK(o >= d - 1e-9);
    CHECK(std::abs(o - d) <= agreement_tol(d, 0.01));
  }
}

TEST_CASE("oracle rejects bad resolutions and out-of-window points") {
  CHECK_THROWS_AS(oracle_dist({0, 2}, {1, 2}, 0.0), std::domain_error);
  const OracleWindow w{-1.0, 1.0, 5.0};
  CHECK_THROWS_AS(oracle_dist({0, 2}, {3, 2}, 0.05, w), std::domain_error);
  CHECK_THROWS_AS(oracle_dist({0, 2}, {0.5, 8}, 0.05, w), std::domain_error);
  CHECK_THROWS_AS(oracle_dist({0, 2}, {1, 2}, 1e-6), std::domain_error);
}
