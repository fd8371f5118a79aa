#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parkinglot/curtain.hpp"

namespace parkinglot {

// Verification status attached to a chain. Certified means a closed-form
// argument covers every pairwise requirement; Sampled means a budgeted search
// found no violation; Refuted carries a concrete witness point.
struct Certification {
  enum class Kind { Certified, Sampled, Refuted };
  Kind kind = Kind::Certified;
  int budget = 0;
  std::optional<PointX> witness;
};

// Ordered list of curtains intended to be pairwise disjoint with each member
// separating its neighbours.
struct Chain {
  std::vector<Curtain> curtains;
  Certification certification;

  int cardinality() const { return static_cast<int>(curtains.size()); }
};

// Cardinality of the maximal chain of unit poles with pairwise-disjoint
// closed intervals fitting strictly between projection parameters at gap D:
// ceil(D) - 1 for D > 1, else 0. Values within 1e-9 of an integer are
// snapped to it first so float noise cannot tip the ceiling.
int fan_chain_cardinality(double gap);

// Builds the maximal certified chain of curtains dual to g separating x from
// y: pole centers evenly spaced at slightly more than unit distance, strictly
// between the two projection parameters. Empty chain when the parameter gap
// is <= 1.
Chain max_same_dual_chain(const Geodesic& g, const PointX& x, const PointX& y);

// Re-derives a certification for the chain: closed-form monotone pole check
// when all duals coincide, otherwise budgeted sampling for disjointness and
// neighbour separation.
Certification verify_chain(const Chain& c, int budget);

// A deterministic, finite list of candidate curtains for separation search.
class CandidateFamily {
 public:
  static CandidateFamily fans(double theta_lo, double theta_hi, double spacing);
  static CandidateFamily same_dual_strips(double theta0, double pole_lo,
                                          double pole_hi, double spacing);
  // Fans at spacing 1/4, strips dual to radial rays at angular grid
  // (pi/2)/64 with poles at spacing 1/4, and segment-dual curtains over a
  // 32-point chord grid, all restricted to the given window.
  static CandidateFamily default_family(double theta_lo, double theta_hi,
                                        double pole_max = 12.0);

  CandidateFamily& append(const CandidateFamily& other);

  const std::vector<Curtain>& curtains() const { return curtains_; }
  int size() const { return static_cast<int>(curtains_.size()); }

 private:
  std::vector<Curtain> curtains_;
};

// Result of a budgeted attempt to refute L-separation of a disjoint pair:
// the largest verified chain found whose every member meets both curtains.
// A value k proves the pair is not L-separated for any L < k; it never
// proves separation.
struct SeparationReport {
  Curtain h1;
  Curtain h2;
  int max_meeting_chain_found = 0;
  int budget = 0;
  Chain witness_chain;
};

SeparationReport separation_refuter(const Curtain& h1, const Curtain& h2,
                                    const CandidateFamily& family, int budget);

// Conditional lower bound for the L-metric. The bound counts only fan
// chains (curtains dual to the spiral), the one family whose pairwise
// separation survived refutation search; it is a true lower bound for
// d_L only when L >= assumed_separation, and that tag travels with the
// value.
struct DLLowerBound {
  int value = 0;
  int assumed_separation = 1;
  int query_l = 1;

  bool valid_for(int l) const { return l >= assumed_separation; }
  bool valid() const { return valid_for(query_l); }
};

DLLowerBound dl_lower(const PointX& x, const PointX& y, int l,
                      int assumed_separation);

// Upper bound for the L-metric: 0 at equal points, else 1 + dist, improved
// to 4L+10 when both points lie on a common radial ray.
double dl_upper(const PointX& x, const PointX& y, int l);

}  // namespace parkinglot
