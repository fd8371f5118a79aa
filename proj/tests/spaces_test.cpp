#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "parkinglot/rng.hpp"
#include "parkinglot/spaces.hpp"

using namespace parkinglot;

namespace {

// dyadic samples keep the shear arithmetic exact: theta on a 2^-20 grid,
// radius an exact power of two
PointX dyadic_sample(Rng& rng) {
  const int span = 20 << 20;
  const double theta =
      std::ldexp(static_cast<double>(rng.uniform_int(-span, span)), -20);
  const double rad = std::ldexp(1.0, rng.uniform_int(0, 40));
  return {theta, rad};
}

GluedPoint sample_glued(Rng& rng, int max_index) {
  if (rng.below(2) == 0)
    return GluedPoint::base_point(
        {rng.uniform(-10.0, 10.0), std::exp(rng.uniform(0.0, 8.0))});
  return GluedPoint::ray_point(1 + static_cast<int>(rng.below(max_index)),
                               rng.uniform(0.0, 20.0));
}

}  // namespace

TEST_CASE("shear fixes the boundary and straightens the attach points") {
  CHECK(phi({0, 1}) == PointX{0, 1});
  CHECK(phi({3, 2}) == PointX{2, 2});
  for (int i = 1; i <= 40; ++i) {
    const PointX img = phi({static_cast<double>(i), std::ldexp(1.0, i)});
    CHECK(img.theta == 0.0);
    CHECK(img.rad == std::ldexp(1.0, i));
  }
}

TEST_CASE("shear round trips exactly on dyadic samples") {
  Rng rng(61);
  for (int i = 0; i < 10000; ++i) {
    const PointX p = dyadic_sample(rng);
    const PointX back = phi_inverse(phi(p));
    CHECK(back.theta == p.theta);
    CHECK(back.rad == p.rad);
  }
}

TEST_CASE("shear round trips to rounding error on arbitrary samples") {
  Rng rng(62);
  for (int i = 0; i < 10000; ++i) {
    const PointX p{rng.uniform(-20.0, 20.0), std::exp(rng.uniform(0.0, 14.0))};
    const PointX back = phi_inverse(phi(p));
    CHECK(std::abs(back.theta - p.theta) <=
          1e-12 * (1.0 + std::abs(p.theta) + std::log2(p.rad)));
    CHECK(back.rad == p.rad);
  }
}

TEST_CASE("ray points measure arclength along their own ray") {
  CHECK(dist_w(GluedPoint::ray_point(2, 1.5), GluedPoint::ray_point(2, 4.0)) ==
        doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("base-to-ray distance concatenates through the attach point") {
  Rng rng(63);
  for (int i = 1; i <= 8; ++i) {
    const PointX p{rng.uniform(-5.0, 5.0), rng.uniform(1.0, 40.0)};
    const double s = rng.uniform(0.0, 7.0);
    CHECK(dist_w(GluedPoint::base_point(p), GluedPoint::ray_point(i, s)) ==
          doctest::Approx(dist(p, attach_w(i)) + s).epsilon(1e-12));
    CHECK(dist_z(GluedPoint::base_point(p), GluedPoint::ray_point(i, s)) ==
          doctest::Approx(dist(p, attach_z(i)) + s).epsilon(1e-12));
  }
}

TEST_CASE("distinct rays connect through both attach points") {
  CHECK(dist_z(GluedPoint::ray_point(1, 1), GluedPoint::ray_point(2, 1)) ==
        doctest::Approx(4).epsilon(1e-12));
}

TEST_CASE("a ray origin coincides with its attach point") {
  for (int i = 1; i <= 10; ++i) {
    CHECK(dist_w(GluedPoint::ray_point(i, 0),
                 GluedPoint::base_point(attach_w(i))) == 0.0);
    CHECK(dist_z(GluedPoint::ray_point(i, 0),
                 GluedPoint::base_point(attach_z(i))) == 0.0);
  }
}

TEST_CASE("glued points validate their ray index and arclength") {
  CHECK_THROWS_AS(GluedPoint::ray_point(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(GluedPoint::ray_point(-3, 1.0), std::domain_error);
  CHECK_THROWS_AS(GluedPoint::ray_point(51, 1.0), std::domain_error);
  CHECK_THROWS_AS(GluedPoint::ray_point(2, -0.5), std::domain_error);
  CHECK_THROWS_AS(attach_w(0), std::domain_error);
  CHECK_THROWS_AS(attach_z(51), std::domain_error);
}

TEST_CASE("glued distances are symmetric metrics on samples") {
  Rng rng(64);
  for (int i = 0; i < 1500; ++i) {
    const GluedPoint a = sample_glued(rng, 12), b = sample_glued(rng, 12),
                     c = sample_glued(rng, 12);
    for (auto d : {dist_w, dist_z}) {
      CHECK(d(a, b) == d(b, a));
      CHECK(d(a, c) <= d(a, b) + d(b, c) + 1e-9);
      CHECK(d(a, a) == 0.0);
    }
  }
}

TEST_CASE("the glued shear moves bases and fixes rays") {
  for (int i = 1; i <= 12; ++i) {
    const PointZ img = phibar(GluedPoint::base_point(attach_w(i)));
    CHECK_FALSE(img.on_ray);
    CHECK(img.base.theta == 0.0);
    CHECK(img.base.rad == std::ldexp(1.0, i));
  }
  const PointZ r = phibar(GluedPoint::ray_point(5, 2.25));
  CHECK(r.on_ray);
  CHECK(r.index == 5);
  CHECK(r.s == 2.25);
  const PointZ b = phibar(GluedPoint::base_point({0, 1}));
  CHECK_FALSE(b.on_ray);
  CHECK(b.base == PointX{0, 1});
}

TEST_CASE("the glued shear is invertible on samples") {
  Rng rng(65);
  for (int i = 0; i < 2000; ++i) {
    const GluedPoint p = sample_glued(rng, 12);
    const PointZ img = phibar(p);
    if (p.on_ray) {
      CHECK(img.on_ray);
      CHECK(img.index == p.index);
      CHECK(img.s == p.s);
    } else {
      CHECK_FALSE(img.on_ray);
      const PointX back = phi_inverse(img.base);
      CHECK(back.rad == p.base.rad);
      CHECK(std::abs(back.theta - p.base.theta) <=
            1e-12 * (1.0 + std::abs(p.base.theta) + std::log2(p.base.rad)));
    }
  }
}

TEST_CASE("the identity map fits with no distortion") {
  const QIFit fit = qi_fit_map([](const PointX& p) { return p; },
                               WindowX{-20, 20, 1, 1048576}, 2000, 77);
  CHECK(fit.lambda == 1.0);
  CHECK(fit.eps == 0.0);
  CHECK(fit.max_violation == 0.0);
  CHECK(fit.sample_pairs == 2000);
}

TEST_CASE("the shear fits finite constants with no violations") {
  const QIFit fit =
      qi_fit_map([](const PointX& p) { return phi(p); },
                 WindowX{-20, 20, 1, 1048576}, 10000, 20260815);
  CHECK(fit.lambda < 20.0);
  CHECK(fit.max_violation == 0.0);
}

TEST_CASE("radius squaring shows growing distortion with window size") {
  auto square = [](const PointX& p) {
    return PointX{p.theta, p.rad * p.rad};
  };
  const QIFit small_fit =
      qi_fit_map(square, WindowX{-5, 5, 1, 4}, 2000, 99);
  const QIFit big_fit =
      qi_fit_map(square, WindowX{-5, 5, 1, 16}, 2000, 99);
  CHECK(big_fit.lambda > small_fit.lambda);
}

TEST_CASE("fits are deterministic in the seed") {
  auto f = [](const PointX& p) { return phi(p); };
  const QIFit a = qi_fit_map(f, WindowX{-20, 20, 1, 1024}, 3000, 5);
  const QIFit b = qi_fit_map(f, WindowX{-20, 20, 1, 1024}, 3000, 5);
  CHECK(a.lambda == b.lambda);
  CHECK(a.eps == b.eps);
  CHECK(a.max_violation == b.max_violation);
}

TEST_CASE("the glued shear fits without violations across both spaces") {
  const QIFit fit = qi_fit_phibar(4000, 123, 12);
  CHECK(fit.max_violation == 0.0);
  CHECK(fit.lambda < 20.0);
  CHECK(fit.sample_pairs == 4000);
}

TEST_CASE("sampling rejects a nonpositive pair count") {
  CHECK_THROWS_AS(qi_fit_map([](const PointX& p) { return p; },
                             WindowX{-1, 1, 1, 2}, 0, 1),
                  std::domain_error);
}
