#include "parkinglot/curtain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "parkinglot/rng.hpp"

namespace parkinglot {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Curtain::Curtain(Geodesic dual, double pole_center)
    : dual_(std::move(dual)), s_(pole_center) {
  if (!std::isfinite(s_))
    throw std::domain_error("Curtain: pole center must be finite");
  const Interval dom = dual_.domain();
  if (!(dom.lo < s_ - 0.5 && s_ + 0.5 < dom.hi))
    throw std::domain_error(
        "Curtain: pole [s-1/2, s+1/2] must lie in the interior of the dual domain");
  switch (dual_.kind()) {
    case Geodesic::Kind::SpiralLine: form_ = CurtainForm::Fan; break;
    case Geodesic::Kind::RadialRay: form_ = CurtainForm::Strip; break;
    default: form_ = CurtainForm::Generic; break;
  }
}

Curtain Curtain::fan(double s) { return Curtain(Geodesic::spiral_line(), s); }

Curtain Curtain::strip(double theta0, double s) {
  return Curtain(Geodesic::radial_ray(theta0), s);
}

std::string Curtain::describe() const {
  std::ostringstream os;
  switch (form_) {
    case CurtainForm::Fan:
      os << "fan:" << fmt(s_);
      break;
    case CurtainForm::Strip:
      os << "strip:" << fmt(dual_.ray_theta0()) << ":" << fmt(s_);
      break;
    case CurtainForm::Generic:
      os << dual_.describe() << ":" << fmt(s_);
      break;
  }
  return os.str();
}

double curtain_projection_param(const Curtain& h, const PointX& x,
                                bool allow_fast_path) {
  if (allow_fast_path) {
    switch (h.form()) {
      case CurtainForm::Fan:
        return x.theta;
      case CurtainForm::Strip: {
        const double dtheta = x.theta - h.dual().ray_theta0();
        if (std::abs(dtheta) <= 0.5 * kPi)
          return std::max(0.0, x.rad * std::cos(dtheta) - 1.0);
        break;  // outside the chart: fall through to numeric projection
      }
      case CurtainForm::Generic:
        if (auto t = projection_closed_form(h.dual(), x)) return *t;
        break;
    }
  }
  return project(x, h.dual());
}

Side member(const Curtain& h, const PointX& x, bool allow_fast_path) {
  const double t = curtain_projection_param(h, x, allow_fast_path);
  if (t < h.pole_lo()) return Side::Minus;
  if (t > h.pole_hi()) return Side::Plus;
  return Side::OnCurtain;
}

bool separates(const Curtain& h, const PointX& x, const PointX& y) {
  const Side sx = member(h, x);
  const Side sy = member(h, y);
  return (sx == Side::Minus && sy == Side::Plus) ||
         (sx == Side::Plus && sy == Side::Minus);
}

namespace {

// Closed-form candidate common points for fan/strip combinations. Returns
// candidates to verify with member(); sets definitely_empty when the
// closed-form geometry proves there is no common point at all.
struct MeetCandidates {
  std::vector<PointX> points;
  bool definitely_empty = false;
};

MeetCandidates closed_form_meet_candidates(const Curtain& a,
                                           const Curtain& b) {
  MeetCandidates out;
  const CurtainForm fa = a.form(), fb = b.form();

  if (a.dual() == b.dual()) {
    const double lo = std::max(a.pole_lo(), b.pole_lo());
    const double hi = std::min(a.pole_hi(), b.pole_hi());
    if (lo <= hi) {
      out.points.push_back(a.dual().eval(0.5 * (lo + hi)));
    } else if (fa == CurtainForm::Fan || fa == CurtainForm::Strip) {
      // same-dual fans or strips tile by projection parameter, so disjoint
      // poles give disjoint curtains outright
      out.definitely_empty = true;
    }
    return out;
  }

  if (fa == CurtainForm::Fan && fb == CurtainForm::Fan) return out;  // same dual

  auto fan_strip = [&](const Curtain& fan, const Curtain& strip) {
    // a strip curtain lives strictly inside its open chart |theta-t0| < pi/2
    // (outside it the projection parameter collapses to 0, below the pole),
    // and a fan curtain is exactly theta in its pole; so the pair meets iff
    // the fan pole cuts the open chart, and then any theta in the cut lifts
    // radially onto the strip
    const double t0 = strip.dual().ray_theta0();
    const double lo = std::max(fan.pole_lo(), t0 - 0.5 * kPi);
    const double hi = std::min(fan.pole_hi(), t0 + 0.5 * kPi);
    if (!(lo < hi)) {
      out.definitely_empty = true;
      return;
    }
    for (double th : {0.5 * (lo + hi), lo + 1e-7 * (hi - lo),
                      hi - 1e-7 * (hi - lo)}) {
      const double c = std::cos(th - t0);
      if (c <= 0.0) continue;
      const double r = (1.0 + strip.pole_center()) / c;
      if (r >= 1.0) out.points.emplace_back(th, r);
    }
  };

  auto strip_strip = [&](const Curtain& u, const Curtain& v) {
    const double ta = u.dual().ray_theta0();
    const double tb = v.dual().ray_theta0();
    const double d = tb - ta;
    const double sd = std::sin(d);
    if (std::abs(sd) < 1e-9) return;
    for (double ua : {1.0 + u.pole_center(), 1.0 + u.pole_lo() + 1e-9,
                      1.0 + u.pole_hi() - 1e-9})
      for (double ub : {1.0 + v.pole_center(), 1.0 + v.pole_lo() + 1e-9,
                        1.0 + v.pole_hi() - 1e-9}) {
        const double y = (ub - ua * std::cos(d)) / sd;
        const double r = std::hypot(ua, y);
        if (r < 1.0) continue;
        const double th = ta + std::atan2(y, ua);
        if (std::abs(th - ta) >= 0.5 * kPi - 1e-9) continue;
        if (std::abs(th - tb) >= 0.5 * kPi - 1e-9) continue;
        out.points.emplace_back(th, r);
      }
  };

  if (fa == CurtainForm::Fan && fb == CurtainForm::Strip) fan_strip(a, b);
  else if (fa == CurtainForm::Strip && fb == CurtainForm::Fan) fan_strip(b, a);
  else if (fa == CurtainForm::Strip && fb == CurtainForm::Strip) strip_strip(a, b);

  return out;
}

double pole_gap(const Curtain& h, const PointX& x) {
  const double t = curtain_projection_param(h, x);
  if (t < h.pole_lo()) return h.pole_lo() - t;
  if (t > h.pole_hi()) return t - h.pole_hi();
  return 0.0;
}

// Budgeted random search for a point on both curtains, biased toward the
// geodesic between the two pole points. The budget counts objective
// evaluations (one projection per curtain each).
std::optional<PointX> search_common_point(const Curtain& h1, const Curtain& h2,
                                          int budget) {
  if (budget <= 0) return std::nullopt;

  auto violation = [&](const PointX& x) {
    return pole_gap(h1, x) + pole_gap(h2, x);
  };

  const PointX p1 = h1.pole_point();
  const PointX p2 = h2.pole_point();

  PointX best = p1;
  double best_v = violation(p1);
  int used = 1;
  if (best_v == 0.0) return best;
  if (used < budget) {
    const double v2 = violation(p2);
    ++used;
    if (v2 < best_v) { best_v = v2; best = p2; }
    if (best_v == 0.0) return best;
  }

  std::optional<Geodesic> spine;
  if (!(p1 == p2)) spine = geodesic_between(p1, p2);

  Rng rng(0x70a1e5u);
  const double scales[] = {0.05, 0.25, 1.0};
  int since_refine = 0;
  while (used < budget) {
    PointX cand = best;
    if (spine && rng.unit() < 0.5) {
      const double t = rng.uniform(0.0, spine->length());
      cand = spine->eval(t);
    }
    const double s = scales[rng.below(3)];
    double th = cand.theta + rng.uniform(-s, s);
    double r = std::max(1.0, cand.rad + rng.uniform(-s, s));
    PointX x(th, r);
    const double v = violation(x);
    ++used;
    if (v < best_v) {
      best_v = v;
      best = x;
      since_refine = 0;
    }
    if (best_v == 0.0) return best;

    // local pattern descent around the incumbent every few failures
    if (++since_refine >= 24) {
      since_refine = 0;
      double step = 0.25;
      while (step > 1e-7 && used + 4 <= budget) {
        bool improved = false;
        const double moves[4][2] = {
            {step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const auto& m : moves) {
          PointX y(best.theta + m[0], std::max(1.0, best.rad + m[1]));
          const double vy = violation(y);
          ++used;
          if (vy < best_v) {
            best_v = vy;
            best = y;
            improved = true;
          }
          if (best_v == 0.0) return best;
        }
        if (!improved) step *= 0.5;
      }
    }
  }
  return std::nullopt;
}

bool on_both(const Curtain& h1, const Curtain& h2, const PointX& x) {
  return member(h1, x) == Side::OnCurtain && member(h2, x) == Side::OnCurtain;
}

}  // namespace

DisjointnessResult disjoint(const Curtain& h1, const Curtain& h2, int budget) {
  if (budget < 0) throw std::domain_error("disjoint: budget must be >= 0");

  if (h1.dual() == h2.dual()) {
    // closed pole intervals on a common dual: disjoint iff they do not touch
    if (std::abs(h1.pole_center() - h2.pole_center()) > 1.0)
      return {DisjointnessResult::Kind::CertifiedDisjoint, std::nullopt, 0};
    const double lo = std::max(h1.pole_lo(), h2.pole_lo());
    const double hi = std::min(h1.pole_hi(), h2.pole_hi());
    return {DisjointnessResult::Kind::RefutedWithWitness,
            h1.dual().eval(0.5 * (lo + hi)), 0};
  }

  const auto cand = closed_form_meet_candidates(h1, h2);
  for (const auto& x : cand.points)
    if (on_both(h1, h2, x))
      return {DisjointnessResult::Kind::RefutedWithWitness, x, 0};
  if (cand.definitely_empty)
    return {DisjointnessResult::Kind::CertifiedDisjoint, std::nullopt, 0};

  if (auto w = search_common_point(h1, h2, budget))
    return {DisjointnessResult::Kind::RefutedWithWitness, *w, budget};
  return {DisjointnessResult::Kind::Unknown, std::nullopt, budget};
}

MeetResult meets(const Curtain& h1, const Curtain& h2, int budget) {
  if (budget < 0) throw std::domain_error("meets: budget must be >= 0");

  const auto cand = closed_form_meet_candidates(h1, h2);
  for (const auto& x : cand.points)
    if (on_both(h1, h2, x)) return {true, x};
  if (cand.definitely_empty) return {false, std::nullopt};

  if (auto w = search_common_point(h1, h2, budget)) return {true, *w};
  return {false, std::nullopt};
}

}  // namespace parkinglot
