#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parkinglot/geometry.hpp"
#include "parkinglot/rng.hpp"

namespace parkinglot {

// Point of a glued-ray space: either a point of the base space X or a point
// at arclength s >= 0 along the ray attached at index i >= 1. RayPoint(i, 0)
// coincides with the attach point.
struct GluedPoint {
  bool on_ray = false;
  PointX base{0.0, 1.0};  // meaningful when !on_ray
  int index = 0;          // meaningful when on_ray
  double s = 0.0;

  static GluedPoint base_point(const PointX& p);
  static GluedPoint ray_point(int index, double s);

  std::string describe() const;  // base:theta:r or ray:i:s
};

// W glues a ray at a_i = (i, 2^i); Z glues a ray at b_i = (0, 2^i).
using PointW = GluedPoint;
using PointZ = GluedPoint;

PointX attach_w(int i);
PointX attach_z(int i);

double dist_w(const PointW& p, const PointW& q);
double dist_z(const PointZ& p, const PointZ& q);

// Logarithmic shear (theta, r) -> (theta - log2 r, r), a self-map of X,
// and its inverse.
PointX phi(const PointX& p);
PointX phi_inverse(const PointX& p);

// phi on base points, identity on the glued rays; well defined because
// phi(a_i) = b_i.
PointZ phibar(const PointW& p);

// Best quasi-isometry constants on a sample: minimal (lambda, eps) on the
// grid lambda in {1.0, 1.1, ..., 20.0}, eps in {0, 0.5, ..., 50} with
// (1/lambda) d(p,q) - eps <= d(fp, fq) <= lambda d(p,q) + eps on every pair,
// lexicographic order. When no grid point fits, the grid corner is reported
// and max_violation is positive.
struct QIFit {
  double lambda = 1.0;
  double eps = 0.0;
  int sample_pairs = 0;
  double max_violation = 0.0;
};

struct QISample {
  double d_src = 0.0;
  double d_img = 0.0;
};

QIFit qi_fit_samples(const std::vector<QISample>& samples);

struct WindowX {
  double theta_lo = -20.0;
  double theta_hi = 20.0;
  double r_lo = 1.0;
  double r_hi = 1048576.0;  // 2^20
};

// Log-uniform in radius, uniform in angle.
PointX sample_point(const WindowX& w, Rng& rng);

QIFit qi_fit_map(const std::function<PointX(const PointX&)>& f,
                 const WindowX& window, int pairs, uint64_t seed);

// Samples mixed base/ray pairs of W and fits constants for phibar: W -> Z.
QIFit qi_fit_phibar(int pairs, uint64_t seed, int max_index = 12);

}  // namespace parkinglot
