#include "parkinglot/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace parkinglot {

namespace {

constexpr int kMaxAttachIndex = 50;  // keeps 2^i and its squares in range

void require_index(int i) {
  if (i < 1 || i > kMaxAttachIndex)
    throw std::domain_error("glued ray index must be in [1, 50]");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double glued_dist(const GluedPoint& p, const GluedPoint& q,
                  PointX (*attach)(int)) {
  if (!p.on_ray && !q.on_ray) return dist(p.base, q.base);
  if (p.on_ray && q.on_ray) {
    if (p.index == q.index) return std::abs(p.s - q.s);
    return p.s + q.s + dist(attach(p.index), attach(q.index));
  }
  const GluedPoint& b = p.on_ray ? q : p;
  const GluedPoint& r = p.on_ray ? p : q;
  return dist(b.base, attach(r.index)) + r.s;
}

}  // namespace

GluedPoint GluedPoint::base_point(const PointX& p) {
  GluedPoint g;
  g.on_ray = false;
  g.base = p;
  return g;
}

GluedPoint GluedPoint::ray_point(int index, double s) {
  require_index(index);
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::domain_error("ray arclength must be finite and >= 0");
  GluedPoint g;
  g.on_ray = true;
  g.index = index;
  g.s = s;
  return g;
}

std::string GluedPoint::describe() const {
  if (on_ray) return "ray:" + std::to_string(index) + ":" + fmt(s);
  return "base:" + fmt(base.theta) + ":" + fmt(base.rad);
}

PointX attach_w(int i) {
  require_index(i);
  return PointX(static_cast<double>(i), std::ldexp(1.0, i));
}

PointX attach_z(int i) {
  require_index(i);
  return PointX(0.0, std::ldexp(1.0, i));
}

double dist_w(const PointW& p, const PointW& q) {
  return glued_dist(p, q, attach_w);
}

double dist_z(const PointZ& p, const PointZ& q) {
  return glued_dist(p, q, attach_z);
}

PointX phi(const PointX& p) {
  return PointX(p.theta - std::log2(p.rad), p.rad);
}

PointX phi_inverse(const PointX& p) {
  return PointX(p.theta + std::log2(p.rad), p.rad);
}

PointZ phibar(const PointW& p) {
  if (p.on_ray) return p;
  return GluedPoint::base_point(phi(p.base));
}

QIFit qi_fit_samples(const std::vector<QISample>& samples) {
  QIFit fit;
  fit.sample_pairs = static_cast<int>(samples.size());

  auto needed_eps = [&](double lambda) {
    double need = 0.0;
    for (const auto& s : samples) {
      need = std::max(need, s.d_img - lambda * s.d_src);
      need = std::max(need, s.d_src / lambda - s.d_img);
    }
    return std::max(0.0, need);
  };

  for (int li = 0; li <= 190; ++li) {
    const double lambda = 1.0 + 0.1 * li;
    const double need = needed_eps(lambda);
    if (need <= 50.0) {
      fit.lambda = lambda;
      fit.eps = 0.5 * std::ceil(need / 0.5);
      fit.max_violation = std::max(0.0, need - fit.eps);
      return fit;
    }
  }
  fit.lambda = 20.0;
  fit.eps = 50.0;
  fit.max_violation = needed_eps(20.0) - 50.0;
  return fit;
}

PointX sample_point(const WindowX& w, Rng& rng) {
  const double theta = rng.uniform(w.theta_lo, w.theta_hi);
  const double lr = rng.uniform(std::log(w.r_lo), std::log(w.r_hi));
  return PointX(theta, std::exp(lr));
}

QIFit qi_fit_map(const std::function<PointX(const PointX&)>& f,
                 const WindowX& window, int pairs, uint64_t seed) {
  if (pairs <= 0) throw std::domain_error("qi_fit: pairs must be > 0");
  Rng rng(seed);
  std::vector<QISample> samples;
  samples.reserve(static_cast<size_t>(pairs));
  for (int i = 0; i < pairs; ++i) {
    const PointX p = sample_point(window, rng);
    const PointX q = sample_point(window, rng);
    samples.push_back({dist(p, q), dist(f(p), f(q))});
  }
  return qi_fit_samples(samples);
}

QIFit qi_fit_phibar(int pairs, uint64_t seed, int max_index) {
  if (pairs <= 0) throw std::domain_error("qi_fit: pairs must be > 0");
  require_index(max_index);
  Rng rng(seed);
  WindowX window;
  window.theta_lo = -20.0;
  window.theta_hi = 20.0;
  window.r_lo = 1.0;
  window.r_hi = std::ldexp(1.0, 20);

  auto sample_w = [&]() {
    if (rng.unit() < 0.35) {
      const int i = rng.uniform_int(1, max_index);
      return GluedPoint::ray_point(i, rng.uniform(0.0, 30.0));
    }
    return GluedPoint::base_point(sample_point(window, rng));
  };

  std::vector<QISample> samples;
  samples.reserve(static_cast<size_t>(pairs));
  for (int i = 0; i < pairs; ++i) {
    const GluedPoint p = sample_w();
    const GluedPoint q = sample_w();
    samples.push_back({dist_w(p, q), dist_z(phibar(p), phibar(q))});
  }
  return qi_fit_samples(samples);
}

}  // namespace parkinglot
