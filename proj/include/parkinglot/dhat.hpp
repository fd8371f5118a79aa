#pragma once

#include <optional>
#include <vector>

#include "parkinglot/chain.hpp"
#include "parkinglot/weights.hpp"

namespace parkinglot {

// Certified interval for the curtain-model distance sum lambda_L d_L(x,y).
// assumed_separation is None for unconditional bounds; otherwise the lower
// bound relies on the recorded empirical separation estimate L0 and is a
// true bound only if the chains used really are L-chains for L >= L0.
struct DhatEstimate {
  double lower = 0.0;
  double upper = 0.0;
  double tail_bound = 0.0;
  std::optional<int> assumed_separation;
};

// Supplies, per point pair, the best verified separating chain cardinality
// together with the separation estimate it is conditional on.
class ChainBoundProvider {
 public:
  struct ChainBound {
    int cardinality = 0;
    int assumed_separation = 1;
  };

  virtual ~ChainBoundProvider() = default;
  virtual ChainBound bound(const PointX& x, const PointX& y) const = 0;
};

// Chains of curtains dual to the spiral, in closed form: cardinality
// ceil(|dtheta|) - 1 for gaps above 1. The conditionality tag is the
// recorded empirical estimate for unit-spaced fan pairs.
class FanChainProvider : public ChainBoundProvider {
 public:
  explicit FanChainProvider(int assumed_separation = 1);
  ChainBound bound(const PointX& x, const PointX& y) const override;

 private:
  int assumed_separation_;
};

// Two-sided estimate of the curtain-model distance.
// upper: sum over L <= Lmax of lambda_L * dl_upper(x,y,L), plus a closed-form
// tail; when x,y share a radial ray the tail also uses the 4L+10 branch, so
// the total never exceeds sum lambda_L (4L+10).
// lower: the better of the unconditional sum lambda_L * 1 (distinct points)
// and the conditional (1+k) * sum_{L>=L0} lambda_L from the provider chain.
DhatEstimate dhat_bounds(const PointX& x, const PointX& y, const WeightSeq& w,
                         const ChainBoundProvider& chains);

// Diameter bounds for a finite point family: max over pairs, with the
// radial-ray specialization capping the upper bound at the closed-form
// sum lambda_L (4L+10) when every point shares one radial ray.
DhatEstimate dhat_diam_bounds(const std::vector<PointX>& points,
                              const WeightSeq& w,
                              const ChainBoundProvider& chains);

}  // namespace parkinglot
