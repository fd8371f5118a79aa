#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace parkinglot {

// Point of the space X in spiral-polar coordinates.
//
// theta is an unbounded real winding coordinate; it is never reduced mod
// 2*pi, so points one full turn apart are distinct. rad >= 1 is the
// distance from the central obstacle axis; rad == 1 is "the spiral", the
// boundary line of the space.
struct PointX {
  double theta = 0.0;
  double rad = 1.0;

  PointX() = default;
  PointX(double theta_, double rad_) : theta(theta_), rad(rad_) {
    if (!std::isfinite(theta) || !std::isfinite(rad))
      throw std::domain_error("PointX: coordinates must be finite");
    if (rad < 1.0)
      throw std::domain_error("PointX: rad must be >= 1, got " +
                              std::to_string(rad_));
  }

  bool operator==(const PointX&) const = default;
};

inline void validate(const PointX& p) {
  if (!std::isfinite(p.theta) || !std::isfinite(p.rad) || p.rad < 1.0)
    throw std::domain_error("PointX: invalid coordinates");
}

}  // namespace parkinglot
