#include "parkinglot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "parkinglot/rng.hpp"

namespace parkinglot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double tangent_half_angle(double rad) {
  if (rad < 1.0) throw std::domain_error("tangent_half_angle: rad < 1");
  // clamp guards acos against rounding when rad ~ 1
  return std::acos(std::min(1.0, 1.0 / rad));
}

double chord_distance(const PointX& p, const PointX& q) {
  validate(p);
  validate(q);
  const double dtheta = std::abs(p.theta - q.theta);
  // r1^2 + r2^2 - 2 r1 r2 cos(dtheta) rewritten without cancellation:
  const double dr = p.rad - q.rad;
  const double s = std::sin(0.5 * dtheta);
  return std::sqrt(dr * dr + 4.0 * p.rad * q.rad * s * s);
}

double tangent_arc_distance(const PointX& p, const PointX& q) {
  validate(p);
  validate(q);
  const double dtheta = std::abs(p.theta - q.theta);
  const double phi1 = tangent_half_angle(p.rad);
  const double phi2 = tangent_half_angle(q.rad);
  const double t1 = std::sqrt(std::max(0.0, p.rad * p.rad - 1.0));
  const double t2 = std::sqrt(std::max(0.0, q.rad * q.rad - 1.0));
  // grouped so the value is bit-for-bit symmetric in p and q
  return t1 + t2 + (dtheta - (phi1 + phi2));
}

double dist(const PointX& p, const PointX& q) {
  validate(p);
  validate(q);
  const double dtheta = std::abs(p.theta - q.theta);
  const double phi1 = tangent_half_angle(p.rad);
  const double phi2 = tangent_half_angle(q.rad);
  if (dtheta <= phi1 + phi2) return chord_distance(p, q);
  return tangent_arc_distance(p, q);
}

// ---------------------------------------------------------------------------
// Geodesic

Geodesic Geodesic::segment(const PointX& p, const PointX& q) {
  validate(p);
  validate(q);
  if (p == q)
    throw std::domain_error("Geodesic::segment: endpoints coincide");
  Geodesic g;
  g.kind_ = Kind::Segment;
  g.p_ = p;
  g.q_ = q;

  const double dtheta = std::abs(p.theta - q.theta);
  const double phi1 = tangent_half_angle(p.rad);
  const double phi2 = tangent_half_angle(q.rad);
  if (dtheta <= phi1 + phi2) {
    g.cls_.tag = GeodesicClass::Tag::Chord;
    g.length_ = chord_distance(p, q);
    // chart centered between the winding coordinates; the angular span of a
    // chord is < pi, so both offsets stay strictly inside (-pi/2, pi/2)
    g.chart_center_ = 0.5 * (p.theta + q.theta);
    g.ax_ = p.rad * std::cos(p.theta - g.chart_center_);
    g.ay_ = p.rad * std::sin(p.theta - g.chart_center_);
    g.bx_ = q.rad * std::cos(q.theta - g.chart_center_);
    g.by_ = q.rad * std::sin(q.theta - g.chart_center_);
  } else {
    const double sgn = (q.theta >= p.theta) ? 1.0 : -1.0;
    g.cls_.tag = GeodesicClass::Tag::TangentArcTangent;
    g.cls_.tangent_len1 = std::sqrt(std::max(0.0, p.rad * p.rad - 1.0));
    g.cls_.tangent_len2 = std::sqrt(std::max(0.0, q.rad * q.rad - 1.0));
    g.cls_.arc_len = dtheta - phi1 - phi2;
    g.cls_.tangency_angle1 = p.theta + sgn * phi1;
    g.cls_.tangency_angle2 = q.theta - sgn * phi2;
    g.length_ = g.cls_.tangent_len1 + g.cls_.arc_len + g.cls_.tangent_len2;
    g.chart_center_ = sgn;  // reuse as direction sign for eval
  }
  return g;
}

Geodesic Geodesic::radial_ray(double theta0) {
  if (!std::isfinite(theta0))
    throw std::domain_error("Geodesic::radial_ray: theta0 not finite");
  Geodesic g;
  g.kind_ = Kind::RadialRay;
  g.theta0_ = theta0;
  g.p_ = PointX(theta0, 1.0);
  return g;
}

Geodesic Geodesic::spiral_line() {
  Geodesic g;
  g.kind_ = Kind::SpiralLine;
  return g;
}

Geodesic Geodesic::spiral_ray(const PointX& base, int direction) {
  validate(base);
  if (base.rad != 1.0)
    throw std::domain_error("Geodesic::spiral_ray: base must lie on the spiral (rad == 1)");
  if (direction != 1 && direction != -1)
    throw std::domain_error("Geodesic::spiral_ray: direction must be +1 or -1");
  Geodesic g;
  g.kind_ = Kind::SpiralRay;
  g.p_ = base;
  g.direction_ = direction;
  return g;
}

Interval Geodesic::domain() const {
  switch (kind_) {
    case Kind::Segment: return {0.0, length_};
    case Kind::RadialRay: return {0.0, kInf};
    case Kind::SpiralLine: return {-kInf, kInf};
    case Kind::SpiralRay: return {0.0, kInf};
  }
  return {0.0, 0.0};
}

double Geodesic::length() const {
  if (kind_ != Kind::Segment)
    throw std::domain_error("Geodesic::length: only segments have finite length");
  return length_;
}

const GeodesicClass& Geodesic::classification() const {
  if (kind_ != Kind::Segment)
    throw std::domain_error("Geodesic::classification: segments only");
  return cls_;
}

PointX Geodesic::eval(double t) const {
  const Interval dom = domain();
  // forgive tiny numeric drift outside the domain, reject real violations
  constexpr double slack = 1e-9;
  if (t < dom.lo - slack || t > dom.hi + slack)
    throw std::domain_error("Geodesic::eval: parameter outside domain");
  t = std::clamp(t, dom.lo, dom.hi);

  switch (kind_) {
    case Kind::RadialRay:
      return PointX(theta0_, 1.0 + t);
    case Kind::SpiralLine:
      return PointX(t, 1.0);
    case Kind::SpiralRay:
      return PointX(p_.theta + direction_ * t, 1.0);
    case Kind::Segment:
      break;
  }

  if (cls_.tag == GeodesicClass::Tag::Chord) {
    const double s = t / length_;
    const double x = ax_ + s * (bx_ - ax_);
    const double y = ay_ + s * (by_ - ay_);
    return PointX(chart_center_ + std::atan2(y, x), std::hypot(x, y));
  }

  // tangent segment, unit-circle arc, tangent segment; each tangent is
  // parameterized by its distance u from the touch point, which sits at
  // angular offset atan(u) and radius sqrt(1 + u^2)
  const double sgn = chart_center_;
  const double s1 = cls_.tangent_len1;
  const double arc = cls_.arc_len;
  if (t <= s1) {
    const double u = s1 - t;
    return PointX(cls_.tangency_angle1 - sgn * std::atan(u),
                  std::sqrt(1.0 + u * u));
  }
  if (t <= s1 + arc) {
    return PointX(cls_.tangency_angle1 + sgn * (t - s1), 1.0);
  }
  const double u = t - s1 - arc;
  return PointX(cls_.tangency_angle2 + sgn * std::atan(u),
                std::sqrt(1.0 + u * u));
}

bool Geodesic::operator==(const Geodesic& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Segment:
      return p_ == other.p_ && q_ == other.q_;
    case Kind::RadialRay:
      return theta0_ == other.theta0_;
    case Kind::SpiralLine:
      return true;
    case Kind::SpiralRay:
      return p_ == other.p_ && direction_ == other.direction_;
  }
  return false;
}

std::string Geodesic::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::SpiralLine:
      os << "spiral";
      break;
    case Kind::RadialRay:
      os << "radial:" << fmt(theta0_);
      break;
    case Kind::SpiralRay:
      os << "spiralray:" << fmt(p_.theta) << ":"
         << (direction_ > 0 ? "+1" : "-1");
      break;
    case Kind::Segment:
      os << "seg:" << fmt(p_.theta) << "," << fmt(p_.rad) << ":"
         << fmt(q_.theta) << "," << fmt(q_.rad);
      break;
  }
  return os.str();
}

Geodesic geodesic_between(const PointX& p, const PointX& q) {
  return Geodesic::segment(p, q);
}

// ---------------------------------------------------------------------------
// Projection

std::optional<double> projection_closed_form(const Geodesic& g,
                                             const PointX& x) {
  switch (g.kind()) {
    case Geodesic::Kind::SpiralLine:
      // dist((theta, r), (t, 1)) is minimized at t == theta in both branch
      // regimes, so the spiral projection reads off the winding coordinate
      return x.theta;
    case Geodesic::Kind::SpiralRay: {
      const double rel = g.ray_direction() * (x.theta - g.ray_base().theta);
      return std::max(0.0, rel);
    }
    case Geodesic::Kind::RadialRay: {
      // foot of the half-flat chart; for |dtheta| >= pi/2 the distance along
      // the ray is increasing, so the endpoint wins and the max() covers it
      const double dtheta = x.theta - g.ray_theta0();
      return std::max(0.0, x.rad * std::cos(dtheta) - 1.0);
    }
    case Geodesic::Kind::Segment:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Bracket a minimum of the convex function f over [dom.lo, dom.hi]
// (either side may be infinite) by doubling steps away from the finite
// endpoint, or from 0 for a full line.
struct Bracket {
  double lo, hi;
};

template <typename F>
Bracket bracket_minimum(F&& f, const Interval& dom) {
  const bool lo_fin = std::isfinite(dom.lo);
  const bool hi_fin = std::isfinite(dom.hi);
  if (lo_fin && hi_fin) return {dom.lo, dom.hi};

  auto march = [&](double origin, double dir) -> Bracket {
    double prev2 = origin;
    double prev = origin;
    double fprev = f(origin);
    double step = 1.0;
    for (int k = 0; k < 80; ++k) {
      const double t = origin + dir * step;
      const double ft = f(t);
      if (ft >= fprev) {
        const double a = std::min(prev2, t);
        const double b = std::max(prev2, t);
        return {a, b};
      }
      prev2 = prev;
      prev = t;
      fprev = ft;
      step *= 2.0;
    }
    throw ConvergenceError("project: bracketing failed to find a turning point");
  };

  if (lo_fin) return march(dom.lo, +1.0);
  if (hi_fin) return march(dom.hi, -1.0);

  // full line: pick the cheaper downhill direction from 0
  const double f0 = f(0.0);
  const double fr = f(1.0);
  const double fl = f(-1.0);
  if (f0 <= fr && f0 <= fl) return {-1.0, 1.0};
  return march(0.0, fr < fl ? +1.0 : -1.0);
}

}  // namespace

double project(const PointX& x, const Geodesic& g, double tol) {
  validate(x);
  if (!(tol > 0.0)) throw std::domain_error("project: tol must be positive");
  auto f = [&](double t) { return dist(x, g.eval(t)); };

  Bracket br = bracket_minimum(f, g.domain());
  double lo = br.lo, hi = br.hi;
  int iter = 0;
  // dist(x, g(t)) is 1-Lipschitz in t, so a parameter interval of width tol
  // pins the value to within tol as well
  while (hi - lo > tol) {
    if (++iter > 600)
      throw ConvergenceError("project: ternary search exceeded iteration cap");
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Alexandrov angle

double alexandrov_angle(const Geodesic& g1, const Geodesic& g2) {
  const PointX b1 = g1.eval(0.0);
  const PointX b2 = g2.eval(0.0);
  if (dist(b1, b2) > 1e-12)
    throw std::domain_error("alexandrov_angle: geodesics must share g(0)");

  double t0 = 0.25;
  t0 = std::min(t0, 0.5 * (std::isfinite(g1.domain().hi) ? g1.domain().hi : t0 * 2));
  t0 = std::min(t0, 0.5 * (std::isfinite(g2.domain().hi) ? g2.domain().hi : t0 * 2));
  if (!(t0 > 0.0))
    throw std::domain_error("alexandrov_angle: degenerate domain");

  const double pi = std::numbers::pi;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double cur = std::numeric_limits<double>::quiet_NaN();
  constexpr int kSteps = 15;
  for (int k = 0; k <= kSteps; ++k) {
    const double t = t0 * std::pow(0.5, k);
    const double d = dist(g1.eval(t), g2.eval(t));
    const double ratio = std::clamp(d / (2.0 * t), 0.0, 1.0);
    const double a = 2.0 * std::asin(ratio);
    // comparison angles are nonincreasing as t shrinks; a rising sequence
    // beyond noise means the limit is not being approached
    if (k > 0 && a > cur + 1e-6)
      throw ConvergenceError("alexandrov_angle: comparison angles not monotone");
    prev = cur;
    cur = a;
  }
  if (std::abs(cur - prev) > 1e-3)
    throw ConvergenceError("alexandrov_angle: comparison angles did not settle");
  // one Richardson step: error is first order in t and t halves per step
  const double extrapolated = 2.0 * cur - prev;
  return std::clamp(extrapolated, 0.0, pi);
}

// ---------------------------------------------------------------------------
// Contraction probe

double contraction_probe(const Geodesic& g, const PointX& center,
                         double radius, int samples, uint64_t seed) {
  validate(center);
  if (samples <= 0)
    throw std::domain_error("contraction_probe: samples must be positive");
  if (!(radius >= 0.0))
    throw std::domain_error("contraction_probe: radius must be >= 0");

  const double tc = project(center, g);
  const double dc = dist(center, g.eval(tc));
  if (dc <= radius)
    throw PreconditionError("contraction_probe: ball is not disjoint from the geodesic");

  if (radius == 0.0) return 0.0;

  double tmin = tc, tmax = tc;
  {
    const double t = project(center, g);
    tmin = tmax = t;
  }

  Rng rng(seed);
  const double r_lo = std::max(1.0, center.rad - radius);
  const double r_hi = center.rad + radius;
  int accepted = 0;
  long attempts = 0;
  const long cap = 1000L * samples;
  while (accepted < samples) {
    if (++attempts > cap)
      throw ConvergenceError("contraction_probe: ball sampling stalled");
    const PointX cand(center.theta + rng.uniform(-radius, radius),
                      rng.uniform(r_lo, r_hi));
    if (dist(cand, center) > radius) continue;
    ++accepted;
    const double t = project(cand, g);
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  return tmax - tmin;
}

}  // namespace parkinglot
