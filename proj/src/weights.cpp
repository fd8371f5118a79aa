#include "parkinglot/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parkinglot {

namespace {

// Closed-form geometric tail sums over L >= m, valid for rho in (0,1), m >= 1:
// sum rho^L, sum L rho^L, sum L^2 rho^L.
double geo0(double rho, int m) { return std::pow(rho, m) / (1.0 - rho); }

double geo1(double rho, int m) {
  const double q = 1.0 - rho;
  return std::pow(rho, m) * (m - (m - 1) * rho) / (q * q);
}

double geo2(double rho, int m) {
  const double q = 1.0 - rho;
  const double num =
      m * static_cast<double>(m) - (2.0 * m * m - 2.0 * m - 1.0) * rho +
      (m - 1.0) * (m - 1.0) * rho * rho;
  return std::pow(rho, m) * num / (q * q * q);
}

void require_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("WeightSeq: ratio must lie in (0,1)");
}

}  // namespace

WeightSeq WeightSeq::geometric(double rho, int lmax) {
  require_rho(rho);
  if (lmax < 1) throw std::domain_error("WeightSeq: lmax must be >= 1");
  WeightSeq w;
  w.rho_ = rho;
  w.lmax_ = lmax;
  return w;
}

WeightSeq WeightSeq::explicit_list(std::vector<double> head, double tail_rho,
                                   int lmax) {
  require_rho(tail_rho);
  if (head.empty())
    throw std::domain_error("WeightSeq: explicit list must be nonempty");
  if (lmax < 1) throw std::domain_error("WeightSeq: lmax must be >= 1");
  for (double v : head)
    if (!std::isfinite(v))
      throw std::domain_error("WeightSeq: weights must be finite");
  WeightSeq w;
  w.head_ = std::move(head);
  w.rho_ = tail_rho;
  w.lmax_ = lmax;
  return w;
}

double WeightSeq::lambda(int l) const {
  if (l < 1) throw std::domain_error("WeightSeq: index must be >= 1");
  const int m = static_cast<int>(head_.size());
  if (l <= m) return head_[static_cast<size_t>(l) - 1];
  if (m == 0) return std::pow(rho_, l);
  return head_.back() * std::pow(rho_, l - m);
}

double WeightSeq::sum_lambda(int from) const {
  if (from < 1) throw std::domain_error("WeightSeq: index must be >= 1");
  const int m = static_cast<int>(head_.size());
  if (m == 0) return geo0(rho_, from);
  double s = 0.0;
  for (int l = from; l <= m; ++l) s += head_[static_cast<size_t>(l) - 1];
  const int j0 = std::max(from - m, 1);
  return s + head_.back() * geo0(rho_, j0);
}

double WeightSeq::sum_l_lambda(int from) const {
  if (from < 1) throw std::domain_error("WeightSeq: index must be >= 1");
  const int m = static_cast<int>(head_.size());
  if (m == 0) return geo1(rho_, from);
  double s = 0.0;
  for (int l = from; l <= m; ++l) s += l * head_[static_cast<size_t>(l) - 1];
  const int j0 = std::max(from - m, 1);
  return s + head_.back() * (m * geo0(rho_, j0) + geo1(rho_, j0));
}

double WeightSeq::sum_l2_lambda(int from) const {
  if (from < 1) throw std::domain_error("WeightSeq: index must be >= 1");
  const int m = static_cast<int>(head_.size());
  if (m == 0) return geo2(rho_, from);
  double s = 0.0;
  for (int l = from; l <= m; ++l)
    s += static_cast<double>(l) * l * head_[static_cast<size_t>(l) - 1];
  const int j0 = std::max(from - m, 1);
  return s + head_.back() * (static_cast<double>(m) * m * geo0(rho_, j0) +
                             2.0 * m * geo1(rho_, j0) + geo2(rho_, j0));
}

WeightDiagnostics check_weights(const WeightSeq& w) {
  // explicit heads can hold arbitrary finite values until validated here
  for (int l = 1; l <= w.lmax(); ++l) {
    const double v = w.lambda(l);
    if (!(v > 0.0 && v < 1.0))
      throw std::domain_error("check_weights: lambda_" + std::to_string(l) +
                              " = " + std::to_string(v) + " outside (0,1)");
  }
  WeightDiagnostics d;
  d.sum0 = w.sum_lambda(1);
  d.sum1 = w.sum_l_lambda(1);
  d.sum2 = w.sum_l2_lambda(1);
  d.ordered = d.sum0 < d.sum1 && d.sum1 < d.sum2;
  return d;
}

}  // namespace parkinglot
