#pragma once

#include <optional>

#include "parkinglot/point.hpp"

namespace parkinglot {

struct OracleWindow {
  double theta_min;
  double theta_max;
  double r_max;  // radial range is always [1, r_max]
};

// Shortest-path length through an explicit graph discretizing the window:
// uniform angular steps of about `resolution` radians, log-spaced radial
// levels (so cells stay nearly square at every radius), a 32-direction
// neighborhood of straight chords that are checked against the unit disk,
// arc edges along the r == 1 row, and tangent-line shortcut edges from each
// node down to the circle. p and q enter the graph as exact extra nodes, so
// the result is the length of a genuine path in the space: it is never
// below the true distance and is within O(resolution) above it.
//
// This routine shares no logic with dist(): no branch classification, no
// tangent-arc formula. It exists to validate them.
double oracle_dist(const PointX& p, const PointX& q, double resolution,
                   std::optional<OracleWindow> window = std::nullopt);

}  // namespace parkinglot
