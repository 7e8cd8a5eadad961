#include "typedtopo/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "typedtopo/errors.hpp"

namespace typedtopo {

Radius Radius::decimal(double r) {
  Radius out;
  out.value = r;
  out.value_sq = r * r;
  out.sqrt_form = false;
  return out;
}

Radius Radius::sqrt_of(double r_squared) {
  Radius out;
  out.value = std::sqrt(r_squared);
  out.value_sq = r_squared;
  out.sqrt_form = true;
  return out;
}

namespace {

constexpr int kMaxScale = 6;

bool scales_to_int(double v, double scale, std::int64_t& out) {
  double scaled = v * scale;
  if (std::abs(scaled) > 4.0e15) return false;
  double r = std::round(scaled);
  if (std::abs(scaled - r) > 1e-6 * std::max(1.0, std::abs(scaled))) return false;
  out = static_cast<std::int64_t>(r);
  return true;
}

}  // namespace

GeomGrid GeomGrid::infer(const std::vector<Coord2>& pts, const std::vector<Radius>& radii) {
  GeomGrid g;
  g.pts_ = pts;
  for (int s = 0; s <= kMaxScale; ++s) {
    double scale = std::pow(10.0, s);
    bool ok = true;
    std::vector<std::int64_t> sx(pts.size()), sy(pts.size());
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      ok = scales_to_int(pts[i].x, scale, sx[i]) && scales_to_int(pts[i].y, scale, sy[i]);
    for (const Radius& r : radii) {
      if (!ok) break;
      std::int64_t tmp;
      // sqrt-form radii only need r^2 on the doubled scale
      ok = r.sqrt_form ? scales_to_int(r.value_sq, scale * scale, tmp)
                       : scales_to_int(r.value, scale, tmp);
    }
    if (ok) {
      g.exact_ = true;
      g.scale_ = s;
      g.sx_ = std::move(sx);
      g.sy_ = std::move(sy);
      return g;
    }
  }
  g.exact_ = false;
  return g;
}

namespace {

inline __int128 sq_dist_scaled(const std::vector<std::int64_t>& sx,
                               const std::vector<std::int64_t>& sy, std::size_t a,
                               std::size_t b) {
  __int128 dx = sx[a] - sx[b];
  __int128 dy = sy[a] - sy[b];
  return dx * dx + dy * dy;
}

inline __int128 r2_scaled(const Radius& r, int scale_pow10) {
  double scale = std::pow(10.0, scale_pow10);
  double v = r.value_sq * scale * scale;
  return static_cast<__int128>(std::llround(v));
}

inline double sq_dist(const Coord2& a, const Coord2& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

bool GeomGrid::within_closed(std::size_t a, std::size_t b, const Radius& r) const {
  if (exact_) return sq_dist_scaled(sx_, sy_, a, b) <= r2_scaled(r, scale_);
  return sq_dist(pts_[a], pts_[b]) <= r.value_sq;
}

bool GeomGrid::within_open(std::size_t a, std::size_t b, const Radius& r) const {
  if (exact_) return sq_dist_scaled(sx_, sy_, a, b) < r2_scaled(r, scale_);
  return sq_dist(pts_[a], pts_[b]) < r.value_sq;
}

bool GeomGrid::x_leq(std::size_t a, std::size_t b) const {
  if (exact_) return sx_[a] <= sx_[b];
  return pts_[a].x <= pts_[b].x;
}

bool GeomGrid::y_geq(std::size_t a, std::size_t b) const {
  if (exact_) return sy_[a] >= sy_[b];
  return pts_[a].y >= pts_[b].y;
}

bool GeomGrid::same_coord(std::size_t a, std::size_t b) const {
  if (exact_) return sx_[a] == sx_[b] && sy_[a] == sy_[b];
  return pts_[a].x == pts_[b].x && pts_[a].y == pts_[b].y;
}

double min_pairwise_gamma(const std::vector<Coord2>& pts) {
  if (pts.size() < 2) throw DataError("min_pairwise_gamma: need at least 2 points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d2 = sq_dist(pts[i], pts[j]);
      if (d2 == 0.0) throw DataError("min_pairwise_gamma: duplicate coordinates");
      best = std::min(best, d2);
    }
  return std::sqrt(best);
}

BoundaryEpsilon boundary_epsilon(const std::vector<Coord2>& pts, double r) {
  if (pts.size() < 2) throw PreconditionError("boundary_epsilon: need at least 2 points");
  if (!(r > 0)) throw PreconditionError("boundary_epsilon: r must be positive");
  double inf = std::numeric_limits<double>::infinity();
  double r1 = inf, r2 = inf;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      double d = std::sqrt(sq_dist(pts[i], pts[j]));
      if (d > r) r1 = std::min(r1, d - r);
      double dx = pts[j].x - pts[i].x;
      if (dx > 0) r2 = std::min(r2, dx);
    }
  if (r1 == inf && r2 == inf)
    throw PreconditionError("boundary_epsilon: epsilon undefined (degenerate)");
  return {std::min(r1, r2), r1, r2};
}

std::string format_coord(double v) {
  if (v == std::round(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(std::llround(v)));
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace typedtopo
