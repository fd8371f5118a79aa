#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "parkinglot/errors.hpp"
#include "parkinglot/point.hpp"

namespace parkinglot {

// Half-angle subtended by the tangent lines from radius r to the unit
// circle: arccos(1/r), in [0, pi/2).
double tangent_half_angle(double rad);

// The two branch formulas behind dist(). Exposed separately so the branch
// boundary |dtheta| == phi1 + phi2 can be checked for continuity.
//
// chord_distance is the straight-line length in a local chart; it is the
// geodesic distance exactly when |dtheta| <= phi1 + phi2.
// tangent_arc_distance is tangent + unit-circle arc + tangent:
//   sqrt(r1^2-1) + sqrt(r2^2-1) + (|dtheta| - phi1 - phi2),
// the geodesic distance in the complementary regime.
double chord_distance(const PointX& p, const PointX& q);
double tangent_arc_distance(const PointX& p, const PointX& q);

// Geodesic distance on X.
double dist(const PointX& p, const PointX& q);

struct GeodesicClass {
  enum class Tag { Chord, TangentArcTangent };
  Tag tag = Tag::Chord;
  // TangentArcTangent data; zero for chords.
  double tangent_len1 = 0.0;
  double tangent_len2 = 0.0;
  double arc_len = 0.0;
  double tangency_angle1 = 0.0;  // winding coordinate of first touch point
  double tangency_angle2 = 0.0;
};

struct Interval {
  double lo;
  double hi;  // +infinity for rays, [-inf, +inf] for lines
};

// Unit-speed geodesic. eval(t) satisfies dist(eval(s), eval(t)) == |s - t|
// for s, t in the domain.
class Geodesic {
 public:
  enum class Kind { Segment, RadialRay, SpiralLine, SpiralRay };

  // Segment from p to q, p != q. Domain [0, length].
  static Geodesic segment(const PointX& p, const PointX& q);
  // t -> (theta0, 1 + t). Domain [0, inf).
  static Geodesic radial_ray(double theta0);
  // t -> (t, 1). Domain (-inf, inf).
  static Geodesic spiral_line();
  // t -> (base.theta + direction * t, 1); base must lie on the spiral.
  // Domain [0, inf).
  static Geodesic spiral_ray(const PointX& base, int direction);

  Kind kind() const { return kind_; }
  Interval domain() const;
  double length() const;  // finite for segments only
  PointX eval(double t) const;

  const GeodesicClass& classification() const;  // segments only
  const PointX& seg_p() const { return p_; }
  const PointX& seg_q() const { return q_; }
  double ray_theta0() const { return theta0_; }
  const PointX& ray_base() const { return p_; }
  int ray_direction() const { return direction_; }

  // Structural identity; used to recognize curtains with a common dual.
  bool operator==(const Geodesic& other) const;

  std::string describe() const;

 private:
  Geodesic() = default;

  Kind kind_ = Kind::SpiralLine;
  PointX p_, q_;          // segment endpoints / spiral-ray base
  double theta0_ = 0.0;   // radial ray
  int direction_ = +1;    // spiral ray
  double length_ = 0.0;   // segment
  GeodesicClass cls_;
  // chord chart cache: endpoints in the chart centered at chart_center_
  double chart_center_ = 0.0;
  double ax_ = 0.0, ay_ = 0.0, bx_ = 0.0, by_ = 0.0;
};

// Geodesic segment between distinct points.
Geodesic geodesic_between(const PointX& p, const PointX& q);

// Closed-form projection parameter onto g where one is known:
// spiral line, spiral ray, radial ray. Returns nullopt for segments.
std::optional<double> projection_closed_form(const Geodesic& g,
                                             const PointX& x);

// Parameter of a closest point of g to x, found by ternary search on the
// convex map t -> dist(x, g(t)); unbounded domains are bracketed first by
// doubling from the nearest-endpoint guess. Guarantees
// dist(x, g(t*)) <= dist(x, g(t)) + tol for all t.
double project(const PointX& x, const Geodesic& g, double tol = 1e-9);

// Angle at the common basepoint g1(0) == g2(0), computed as the limit of
// comparison angles 2*arcsin(dist(g1(t), g2(t)) / (2t)) for t -> 0 along
// t = t0 * 2^-k, with a monotonicity check and Richardson extrapolation.
// Result is clamped to [0, pi].
double alexandrov_angle(const Geodesic& g1, const Geodesic& g2);

// Samples the closed ball B(center, radius), projects every sample onto g
// and returns the parameter diameter of the projected set (a sampled lower
// bound for the true projection diameter). Requires the ball to be
// disjoint from g.
double contraction_probe(const Geodesic& g, const PointX& center,
                         double radius, int samples,
                         uint64_t seed = 0x9e3779b97f4a7c15ull);

}  // namespace parkinglot
