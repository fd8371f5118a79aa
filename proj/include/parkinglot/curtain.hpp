#pragma once

#include <optional>
#include <string>

#include "parkinglot/geometry.hpp"

namespace parkinglot {

enum class Side { Minus, OnCurtain, Plus };

enum class CurtainForm { Generic, Fan, Strip };

// A curtain is the preimage, under closest-point projection onto its dual
// geodesic, of the closed unit pole interval [s - 1/2, s + 1/2]. The pole
// must sit strictly inside the dual's domain.
class Curtain {
 public:
  Curtain(Geodesic dual, double pole_center);

  static Curtain fan(double s);                    // dual: spiral line
  static Curtain strip(double theta0, double s);   // dual: radial ray

  const Geodesic& dual() const { return dual_; }
  double pole_center() const { return s_; }
  double pole_lo() const { return s_ - 0.5; }
  double pole_hi() const { return s_ + 0.5; }
  CurtainForm form() const { return form_; }
  // a point of the curtain itself: the dual evaluated at the pole center
  PointX pole_point() const { return dual_.eval(s_); }

  bool operator==(const Curtain& other) const {
    return dual_ == other.dual_ && s_ == other.s_;
  }

  std::string describe() const;

 private:
  Geodesic dual_;
  double s_;
  CurtainForm form_;
};

// Projection parameter of x on the curtain's dual. Fan and strip curtains
// use their closed forms (the strip chart only for |dtheta| <= pi/2, as the
// half-flat picture requires); everything else projects numerically.
double curtain_projection_param(const Curtain& h, const PointX& x,
                                bool allow_fast_path = true);

// Which side of the curtain x lies on. The pole interval is closed, so a
// projection landing exactly on a boundary reports OnCurtain.
Side member(const Curtain& h, const PointX& x, bool allow_fast_path = true);

// True when x and y lie strictly on opposite open sides of h.
bool separates(const Curtain& h, const PointX& x, const PointX& y);

struct DisjointnessResult {
  enum class Kind { CertifiedDisjoint, RefutedWithWitness, Unknown };
  Kind kind;
  std::optional<PointX> witness;  // point on both curtains when refuted
  int budget_used = 0;
};

// Disjointness check. Certified answers are produced only in closed-form
// reach: curtains with a common dual (fans included) compare pole
// intervals. Everything else is a budgeted search for a common point,
// which can refute but never certify.
DisjointnessResult disjoint(const Curtain& h1, const Curtain& h2, int budget);

struct MeetResult {
  bool found = false;
  std::optional<PointX> witness;
};

// Budgeted search for a point lying on both curtains.
MeetResult meets(const Curtain& h1, const Curtain& h2, int budget);

}  // namespace parkinglot
