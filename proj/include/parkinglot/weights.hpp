#pragma once

#include <vector>

namespace parkinglot {

// Summable weight sequence lambda_L over L >= 1, either purely geometric
// (lambda_L = rho^L) or an explicit head followed by a geometric tail
// anchored at the last listed weight. All weights must lie in (0,1); the
// sums sum lambda_L, sum L lambda_L, sum L^2 lambda_L are computed in
// closed form.
class WeightSeq {
 public:
  static WeightSeq geometric(double rho, int lmax);
  static WeightSeq explicit_list(std::vector<double> head, double tail_rho,
                                 int lmax);

  double lambda(int l) const;
  int lmax() const { return lmax_; }

  // Tail sums from index `from` (inclusive) to infinity, closed form.
  double sum_lambda(int from) const;
  double sum_l_lambda(int from) const;
  double sum_l2_lambda(int from) const;

 private:
  WeightSeq() = default;

  std::vector<double> head_;  // lambda_1 .. lambda_m; empty for pure geometric
  double rho_ = 0.5;
  int lmax_ = 30;
};

struct WeightDiagnostics {
  double sum0 = 0.0;   // sum lambda_L
  double sum1 = 0.0;   // sum L lambda_L
  double sum2 = 0.0;   // sum L^2 lambda_L
  bool ordered = false;  // sum0 < sum1 < sum2
};

// Validates the sequence and returns the three closed-form sums; throws a
// domain error naming the offending index when some lambda_L is outside
// (0,1).
WeightDiagnostics check_weights(const WeightSeq& w);

}  // namespace parkinglot
