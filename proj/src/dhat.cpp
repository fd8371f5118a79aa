#include "parkinglot/dhat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parkinglot {

FanChainProvider::FanChainProvider(int assumed_separation)
    : assumed_separation_(assumed_separation) {
  if (assumed_separation < 1)
    throw std::domain_error("FanChainProvider: separation estimate must be >= 1");
}

ChainBoundProvider::ChainBound FanChainProvider::bound(const PointX& x,
                                                       const PointX& y) const {
  return {fan_chain_cardinality(std::abs(x.theta - y.theta)),
          assumed_separation_};
}

DhatEstimate dhat_bounds(const PointX& x, const PointX& y, const WeightSeq& w,
                         const ChainBoundProvider& chains) {
  if (x == y) return {0.0, 0.0, 0.0, std::nullopt};

  const double d = dist(x, y);
  const bool radial = x.theta == y.theta;
  const int n = w.lmax();

  double upper = 0.0;
  for (int l = 1; l <= n; ++l) {
    double u = 1.0 + d;
    if (radial) u = std::min(u, 4.0 * l + 10.0);
    upper += w.lambda(l) * u;
  }
  double tail = (1.0 + d) * w.sum_lambda(n + 1);
  if (radial)
    tail = std::min(tail, 4.0 * w.sum_l_lambda(n + 1) +
                              10.0 * w.sum_lambda(n + 1));
  upper += tail;

  // d_L >= 1 for distinct points at every L: unconditional floor
  double lower = w.sum_lambda(1);
  std::optional<int> tag;
  const auto cb = chains.bound(x, y);
  if (cb.cardinality >= 1) {
    const double cond = (1.0 + cb.cardinality) * w.sum_lambda(cb.assumed_separation);
    if (cond > lower) {
      lower = cond;
      tag = cb.assumed_separation;
    }
  }
  // a conditional lower above the unconditional upper means the separation
  // assumption is impossible for this pair; keep the interval consistent
  lower = std::min(lower, upper);
  return {lower, upper, tail, tag};
}

DhatEstimate dhat_diam_bounds(const std::vector<PointX>& points,
                              const WeightSeq& w,
                              const ChainBoundProvider& chains) {
  if (points.empty())
    throw std::domain_error("dhat_diam_bounds: point list must be nonempty");

  DhatEstimate best{0.0, 0.0, 0.0, std::nullopt};
  bool one_ray = true;
  for (const auto& p : points) one_ray = one_ray && p.theta == points[0].theta;

  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      const auto e = dhat_bounds(points[i], points[j], w, chains);
      if (e.lower > best.lower) {
        best.lower = e.lower;
        best.assumed_separation = e.assumed_separation;
      }
      if (e.upper > best.upper) {
        best.upper = e.upper;
        best.tail_bound = e.tail_bound;
      }
    }

  if (one_ray) {
    // every pair sits on a single radial ray: the full-series diameter bound
    // sum lambda_L (4L+10) applies independently of Lmax
    const double cap = 4.0 * w.sum_l_lambda(1) + 10.0 * w.sum_lambda(1);
    best.upper = std::min(best.upper, cap);
  }
  return best;
}

}  // namespace parkinglot
