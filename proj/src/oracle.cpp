#include "parkinglot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "parkinglot/errors.hpp"

namespace parkinglot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// Straight chord between two polar points, stable against cancellation.
double chord(double t1, double r1, double t2, double r2) {
  const double dr = r1 - r2;
  const double s = std::sin(0.5 * (t1 - t2));
  return std::sqrt(dr * dr + 4.0 * r1 * r2 * s * s);
}

// Least norm along the straight segment between the two polar points;
// used to reject edges that would cut through the open unit disk.
double min_norm_on_segment(double t1, double r1, double t2, double r2) {
  const double mid = 0.5 * (t1 + t2);
  const double ax = r1 * std::cos(t1 - mid), ay = r1 * std::sin(t1 - mid);
  const double bx = r2 * std::cos(t2 - mid), by = r2 * std::sin(t2 - mid);
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double u = 0.0;
  if (len2 > 0.0) u = std::clamp(-(ax * dx + ay * dy) / len2, 0.0, 1.0);
  return std::hypot(ax + u * dx, ay + u * dy);
}

struct EdgeRule {
  // weight of the edge between two polar points, or nullopt if it is not a
  // valid path piece (chord dips into the open disk)
  static std::optional<double> weight(double t1, double r1, double t2,
                                      double r2) {
    if (r1 == 1.0 && r2 == 1.0) return std::abs(t1 - t2);  // circle arc
    // a straight segment clear of the disk subtends less than pi at the
    // origin, so in the cover it can only join points with |dtheta| < pi;
    // without this, far-wound pairs would get phantom mod-2pi shortcuts
    if (std::abs(t1 - t2) >= kPi) return std::nullopt;
    if (min_norm_on_segment(t1, r1, t2, r2) < 1.0 - 1e-12) return std::nullopt;
    return chord(t1, r1, t2, r2);
  }
};

// directions (di, dk) with max coordinate 3 and coprime entries
constexpr int kOffsets[][2] = {
    {1, 0},  {-1, 0},  {0, 1},  {0, -1},  {1, 1},   {1, -1},  {-1, 1},
    {-1, -1}, {1, 2},  {1, -2}, {-1, 2},  {-1, -2}, {2, 1},   {2, -1},
    {-2, 1}, {-2, -1}, {1, 3},  {1, -3},  {-1, 3},  {-1, -3}, {3, 1},
    {3, -1}, {-3, 1},  {-3, -1}, {2, 3},  {2, -3},  {-2, 3},  {-2, -3},
    {3, 2},  {3, -2},  {-3, 2},  {-3, -2}};

}  // namespace

double oracle_dist(const PointX& p, const PointX& q, double resolution,
                   std::optional<OracleWindow> window) {
  validate(p);
  validate(q);
  if (!(resolution > 0.0) || resolution > 0.5)
    throw std::domain_error("oracle_dist: resolution must be in (0, 0.5]");
  if (p == q) return 0.0;

  OracleWindow win = window.value_or(OracleWindow{
      std::min(p.theta, q.theta) - 4.0 * resolution,
      std::max(p.theta, q.theta) + 4.0 * resolution,
      std::max({p.rad, q.rad, 1.0}) * std::exp(4.0 * resolution)});
  if (p.theta < win.theta_min || p.theta > win.theta_max ||
      q.theta < win.theta_min || q.theta > win.theta_max ||
      p.rad > win.r_max || q.rad > win.r_max)
    throw std::domain_error("oracle_dist: point outside oracle window");

  const double span = win.theta_max - win.theta_min;
  const int ntheta = std::max(8, static_cast<int>(std::ceil(span / resolution)) + 1);
  const double ht = span / (ntheta - 1);
  const double delta = resolution;  // log step between radial levels
  const int nlevel =
      std::max(4, static_cast<int>(std::ceil(std::log(win.r_max) / delta)) + 1);
  if (static_cast<long>(ntheta) * nlevel > 40'000'000L)
    throw std::domain_error("oracle_dist: window too large for resolution");

  std::vector<double> level(nlevel);
  for (int k = 0; k < nlevel; ++k) level[k] = std::exp(k * delta);

  const int n_grid = ntheta * nlevel;
  const int P = n_grid, Q = n_grid + 1;
  auto node_theta = [&](int id) {
    if (id == P) return p.theta;
    if (id == Q) return q.theta;
    return win.theta_min + (id % ntheta) * ht;
  };
  auto node_rad = [&](int id) {
    if (id == P) return p.rad;
    if (id == Q) return q.rad;
    return level[id / ntheta];
  };

  auto grid_id = [&](int i, int k) { return k * ntheta + i; };
  auto theta_index = [&](double t) {
    return static_cast<int>(std::floor((t - win.theta_min) / ht));
  };
  auto level_index = [&](double r) {
    return static_cast<int>(std::floor(std::log(std::max(1.0, r)) / delta));
  };

  // near-neighborhood of an off-grid point
  auto endpoint_box = [&](const PointX& x, auto&& emit) {
    const int i0 = theta_index(x.theta), k0 = level_index(x.rad);
    for (int k = std::max(0, k0 - 3); k <= std::min(nlevel - 1, k0 + 4); ++k)
      for (int i = std::max(0, i0 - 3); i <= std::min(ntheta - 1, i0 + 4); ++i)
        emit(grid_id(i, k));
  };

  // tangent shortcut targets on the circle row for a point at radius r > 1;
  // the touch angles are theta +- arccos(1/r) and the grid angle is snapped
  // toward the point so the chord still clears the disk
  auto tangent_targets = [&](double theta, double r, auto&& emit) {
    if (r <= 1.0 + 1e-12) return;
    const double phi = std::acos(1.0 / r);
    const double plus = theta + phi;
    const double minus = theta - phi;
    const int jp = static_cast<int>(std::floor((plus - win.theta_min) / ht));
    if (jp >= 0 && jp < ntheta) emit(grid_id(jp, 0));
    const int jm = static_cast<int>(std::ceil((minus - win.theta_min) / ht));
    if (jm >= 0 && jm < ntheta) emit(grid_id(jm, 0));
  };

  // incoming edges of Q, consulted while relaxing ordinary nodes
  std::unordered_map<int, double> q_edges;
  auto link_q = [&](int id) {
    if (id == Q) return;
    auto w = EdgeRule::weight(node_theta(id), node_rad(id), q.theta, q.rad);
    if (w) {
      auto it = q_edges.find(id);
      if (it == q_edges.end() || *w < it->second) q_edges[id] = *w;
    }
  };
  endpoint_box(q, link_q);
  tangent_targets(q.theta, q.rad, link_q);
  link_q(P);

  const int n_nodes = n_grid + 2;
  std::vector<double> best(n_nodes, kInf);
  std::vector<uint8_t> done(n_nodes, 0);
  using Item = std::pair<double, int>;  // (priority, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

  auto heuristic = [&](int id) {
    // both are path-length lower bounds: the plane chord because the cover
    // projects 1-Lipschitz onto the plane, and hypot(dtheta, dr) because
    // r >= 1 makes arc length dominate sqrt(dr^2 + dtheta^2)
    const double dt = node_theta(id) - q.theta;
    const double dr = node_rad(id) - q.rad;
    return std::max(chord(node_theta(id), node_rad(id), q.theta, q.rad),
                    std::hypot(dt, dr));
  };

  best[P] = 0.0;
  heap.push({heuristic(P), P});

  auto relax = [&](int from, int to, double w) {
    const double cand = best[from] + w;
    if (cand < best[to]) {
      best[to] = cand;
      heap.push({cand + heuristic(to), to});
    }
  };

  auto relax_pair = [&](int from, int to) {
    auto w = EdgeRule::weight(node_theta(from), node_rad(from), node_theta(to),
                              node_rad(to));
    if (w) relax(from, to, *w);
  };

  while (!heap.empty()) {
    const auto [prio, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = 1;
    if (v == Q) return best[Q];

    if (v == P) {
      endpoint_box(p, [&](int id) { relax_pair(P, id); });
      tangent_targets(p.theta, p.rad, [&](int id) { relax_pair(P, id); });
      if (auto it = q_edges.find(P); it != q_edges.end())
        relax(P, Q, it->second);
      continue;
    }

    const int i = v % ntheta, k = v / ntheta;
    for (const auto& off : kOffsets) {
      const int ii = i + off[0], kk = k + off[1];
      if (ii < 0 || ii >= ntheta || kk < 0 || kk >= nlevel) continue;
      relax_pair(v, grid_id(ii, kk));
    }
    tangent_targets(node_theta(v), node_rad(v),
                    [&](int id) { relax_pair(v, id); });
    if (auto it = q_edges.find(v); it != q_edges.end())
      relax(v, Q, it->second);
  }

  throw ConvergenceError("oracle_dist: target unreachable in discretized window");
}

}  // namespace parkinglot
