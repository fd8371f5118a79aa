#include "parkinglot/chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "parkinglot/errors.hpp"
#include "parkinglot/rng.hpp"

namespace parkinglot {

namespace {

constexpr double kPi = std::numbers::pi;

double snap_near_integer(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-9 ? r : v;
}

double closed_form_or_numeric_param(const Geodesic& g, const PointX& x) {
  if (auto t = projection_closed_form(g, x)) return *t;
  return project(x, g);
}

}  // namespace

int fan_chain_cardinality(double gap) {
  if (!std::isfinite(gap) || gap < 0.0)
    throw std::domain_error("fan_chain_cardinality: gap must be finite and >= 0");
  const double d = snap_near_integer(gap);
  if (d <= 1.0) return 0;
  return static_cast<int>(std::ceil(d)) - 1;
}

Chain max_same_dual_chain(const Geodesic& g, const PointX& x, const PointX& y) {
  const double tx = closed_form_or_numeric_param(g, x);
  const double ty = closed_form_or_numeric_param(g, y);
  const double lo = std::min(tx, ty);
  const double hi = std::max(tx, ty);
  const double d = snap_near_integer(hi - lo);

  Chain chain;
  chain.certification = {Certification::Kind::Certified, 0, std::nullopt};
  if (d <= 1.0) return chain;

  int n = static_cast<int>(std::ceil(d)) - 1;
  while (n >= 1) {
    // Centers must fit in the open interval (lo + 1/2, hi - 1/2) with
    // consecutive gaps strictly above 1 so the closed poles are disjoint.
    double eps = 0.0;
    if (n >= 2) {
      const double slack = (d - 1.0) - (n - 1);
      eps = std::min(1e-6, 0.5 * slack / (n - 1));
      if (!(eps > 0.0)) { --n; continue; }
    }
    const double spacing = 1.0 + eps;
    const double mid = 0.5 * (lo + hi);
    std::vector<Curtain> curtains;
    curtains.reserve(static_cast<size_t>(n));
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      const double c = mid + (k - 0.5 * (n - 1)) * spacing;
      if (!(lo + 0.5 < c && c < hi - 0.5)) { ok = false; break; }
      curtains.emplace_back(g, c);
    }
    if (ok && n >= 2) {
      for (int k = 0; k + 1 < n; ++k)
        if (!(curtains[k + 1].pole_center() - curtains[k].pole_center() > 1.0)) {
          ok = false;
          break;
        }
    }
    // knife-edge guard: the outermost curtains must actually separate x,y
    // after rounding
    if (ok && !(separates(curtains.front(), x, y) &&
                separates(curtains.back(), x, y)))
      ok = false;
    if (ok) {
      chain.curtains = std::move(curtains);
      return chain;
    }
    --n;
  }
  return chain;
}

namespace {

bool all_same_dual(const std::vector<Curtain>& cs) {
  for (size_t i = 1; i < cs.size(); ++i)
    if (!(cs[i].dual() == cs[0].dual())) return false;
  return true;
}

Certification verify_same_dual(const std::vector<Curtain>& cs) {
  std::vector<double> c(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) c[i] = cs[i].pole_center();
  const bool increasing = c[1] > c[0];
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    const double a = increasing ? c[i] : c[i + 1];
    const double b = increasing ? c[i + 1] : c[i];
    if (b - a > 1.0) continue;
    if (std::abs(b - a) <= 1.0) {
      // closed poles intersect: witness at the middle of the overlap
      const double m = 0.5 * (a + b);
      return {Certification::Kind::Refuted, 0, cs[0].dual().eval(m)};
    }
    // ordering flipped without overlap: the later curtain sits on the wrong
    // side of the earlier one, so it cannot separate its neighbours
    return {Certification::Kind::Refuted, 0, cs[0].dual().eval(c[i + 1])};
  }
  return {Certification::Kind::Certified, 0, std::nullopt};
}

// Points guaranteed to lie on the curtain, used for sampled separation
// checks. Pole points always qualify; fan and strip forms admit cheap fiber
// samples at varying radius.
std::vector<PointX> curtain_samples(const Curtain& h, int count, Rng& rng) {
  std::vector<PointX> out;
  out.push_back(h.pole_point());
  for (int i = 0; i < count; ++i) {
    const double u = rng.uniform(h.pole_lo() + 1e-9, h.pole_hi() - 1e-9);
    switch (h.form()) {
      case CurtainForm::Fan:
        out.emplace_back(u, 1.0 + rng.uniform(0.0, 8.0));
        break;
      case CurtainForm::Strip: {
        const double t0 = h.dual().ray_theta0();
        const double th = t0 + rng.uniform(-1.2, 1.2);
        out.emplace_back(th, (1.0 + u) / std::cos(th - t0));
        break;
      }
      case CurtainForm::Generic:
        out.push_back(h.dual().eval(u));
        break;
    }
  }
  return out;
}

Certification verify_sampled(const std::vector<Curtain>& cs, int budget) {
  const int n = static_cast<int>(cs.size());
  const int pairs = n - 1;
  const int per_pair = std::max(0, budget / std::max(1, pairs * 2));
  for (int i = 0; i + 1 < n; ++i) {
    const auto dj = disjoint(cs[i], cs[i + 1], per_pair);
    if (dj.kind == DisjointnessResult::Kind::RefutedWithWitness)
      return {Certification::Kind::Refuted, budget, dj.witness};
  }
  Rng rng(0xc4a1d5u);
  const int fiber = std::max(2, per_pair / 8);
  for (int i = 1; i + 1 < n; ++i) {
    const auto left = curtain_samples(cs[i - 1], fiber, rng);
    const auto right = curtain_samples(cs[i + 1], fiber, rng);
    Side want_left = member(cs[i], left.front());
    Side want_right = member(cs[i], right.front());
    if (want_left == want_right || want_left == Side::OnCurtain ||
        want_right == Side::OnCurtain)
      return {Certification::Kind::Refuted, budget,
              want_left == Side::OnCurtain ? left.front() : right.front()};
    for (const auto& p : left)
      if (member(cs[i], p) != want_left)
        return {Certification::Kind::Refuted, budget, p};
    for (const auto& p : right)
      if (member(cs[i], p) != want_right)
        return {Certification::Kind::Refuted, budget, p};
  }
  return {Certification::Kind::Sampled, budget, std::nullopt};
}

}  // namespace

Certification verify_chain(const Chain& c, int budget) {
  if (budget < 0) throw std::domain_error("verify_chain: budget must be >= 0");
  if (c.curtains.size() <= 1)
    return {Certification::Kind::Certified, 0, std::nullopt};
  if (all_same_dual(c.curtains)) return verify_same_dual(c.curtains);
  return verify_sampled(c.curtains, budget);
}

CandidateFamily CandidateFamily::fans(double theta_lo, double theta_hi,
                                      double spacing) {
  CandidateFamily f;
  for (double s = theta_lo; s <= theta_hi + 1e-12; s += spacing)
    f.curtains_.push_back(Curtain::fan(s));
  return f;
}

CandidateFamily CandidateFamily::same_dual_strips(double theta0, double pole_lo,
                                                  double pole_hi,
                                                  double spacing) {
  CandidateFamily f;
  for (double s = pole_lo; s <= pole_hi + 1e-12; s += spacing)
    if (s > 0.5) f.curtains_.push_back(Curtain::strip(theta0, s));
  return f;
}

CandidateFamily CandidateFamily::default_family(double theta_lo,
                                                double theta_hi,
                                                double pole_max) {
  CandidateFamily f;
  for (double s = theta_lo; s <= theta_hi + 1e-12; s += 0.25)
    f.curtains_.push_back(Curtain::fan(s));
  const double ray_step = (kPi / 2.0) / 64.0;
  for (double t0 = theta_lo; t0 <= theta_hi + 1e-12; t0 += ray_step)
    for (double s = 0.75; s <= pole_max + 1e-12; s += 0.25)
      f.curtains_.push_back(Curtain::strip(t0, s));
  // chord-dual curtains: endpoints on a theta grid at rotating radii, pole
  // at the chord midpoint
  const double radii[] = {1.5, 2.5, 4.0, 7.0};
  const double span = theta_hi - theta_lo;
  int ri = 0;
  for (int i = 0; i < 32; ++i) {
    const double th = theta_lo + span * (i + 0.5) / 32.0;
    const double r1 = radii[ri % 4];
    const double r2 = radii[(ri + 1) % 4];
    ++ri;
    const PointX p(th - 0.4, r1);
    const PointX q(th + 0.4, r2);
    const Geodesic g = geodesic_between(p, q);
    if (g.length() > 1.2)
      f.curtains_.emplace_back(g, 0.5 * g.length());
  }
  return f;
}

CandidateFamily& CandidateFamily::append(const CandidateFamily& other) {
  curtains_.insert(curtains_.end(), other.curtains_.begin(),
                   other.curtains_.end());
  return *this;
}

SeparationReport separation_refuter(const Curtain& h1, const Curtain& h2,
                                    const CandidateFamily& family, int budget) {
  if (budget < 0)
    throw std::domain_error("separation_refuter: budget must be >= 0");
  const auto dj = disjoint(h1, h2, 64);
  if (dj.kind == DisjointnessResult::Kind::RefutedWithWitness)
    throw PreconditionError(
        "separation_refuter: curtains are not disjoint (witness found)");

  // candidates meeting both curtains, grouped by dual geodesic
  std::map<std::string, std::vector<Curtain>> groups;
  int tested = 0;
  const int meet_budget = 200;
  for (const auto& c : family.curtains()) {
    if (tested >= budget) break;
    ++tested;
    if (!meets(c, h1, meet_budget).found) continue;
    if (!meets(c, h2, meet_budget).found) continue;
    groups[c.dual().describe()].push_back(c);
  }

  // greedy longest sub-chain per dual: sorted poles, consecutive gap > 1
  std::vector<Curtain> best;
  for (auto& [key, cs] : groups) {
    std::sort(cs.begin(), cs.end(), [](const Curtain& a, const Curtain& b) {
      return a.pole_center() < b.pole_center();
    });
    std::vector<Curtain> picked;
    for (const auto& c : cs) {
      if (picked.empty() ||
          c.pole_center() - picked.back().pole_center() > 1.0 + 1e-9)
        picked.push_back(c);
    }
    const bool better =
        picked.size() > best.size() ||
        (picked.size() == best.size() && !picked.empty() && !best.empty() &&
         picked.front().pole_center() < best.front().pole_center());
    if (better) best = std::move(picked);
  }

  SeparationReport rep{h1, h2, static_cast<int>(best.size()), budget, {}};
  rep.witness_chain.curtains = std::move(best);
  rep.witness_chain.certification = verify_chain(rep.witness_chain, 256);
  return rep;
}

DLLowerBound dl_lower(const PointX& x, const PointX& y, int l,
                      int assumed_separation) {
  if (l < 1) throw std::domain_error("dl_lower: L must be >= 1");
  if (assumed_separation < 1)
    throw std::domain_error("dl_lower: assumed separation must be >= 1");
  DLLowerBound b;
  b.assumed_separation = assumed_separation;
  b.query_l = l;
  if (x == y) {
    b.value = 0;
    return b;
  }
  b.value = 1 + fan_chain_cardinality(std::abs(x.theta - y.theta));
  return b;
}

double dl_upper(const PointX& x, const PointX& y, int l) {
  if (l < 1) throw std::domain_error("dl_upper: L must be >= 1");
  if (x == y) return 0.0;
  double u = 1.0 + dist(x, y);
  if (x.theta == y.theta) u = std::min(u, 4.0 * l + 10.0);
  return u;
}

}  // namespace parkinglot
