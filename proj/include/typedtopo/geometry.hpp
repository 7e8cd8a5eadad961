#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace typedtopo {

// Plane coordinates. Values must be finite.
struct Coord2 {
  double x = 0.0;
  double y = 0.0;
};

// A neighborhood radius. Either a plain decimal value, or the square root of a
// decimal value (so that r*r is exact even when r itself is irrational).
struct Radius {
  double value = 0.0;     // r
  double value_sq = 0.0;  // r*r
  bool sqrt_form = false; // value_sq was given exactly, value derived from it

  static Radius decimal(double r);
  static Radius sqrt_of(double r_squared);
};

// Exact comparison support for coordinates that are decimals with a common
// small scale. When inference fails the predicates fall back to doubles;
// squared distances are used throughout, never square roots.
class GeomGrid {
 public:
  static GeomGrid infer(const std::vector<Coord2>& pts, const std::vector<Radius>& radii);

  bool exact() const { return exact_; }
  int scale_pow10() const { return scale_; }

  // dist(a,b)^2 <= r^2  /  dist(a,b)^2 < r^2
  bool within_closed(std::size_t a, std::size_t b, const Radius& r) const;
  bool within_open(std::size_t a, std::size_t b, const Radius& r) const;

  // exact coordinate comparisons (x-axis); fall back to doubles when inexact
  bool x_leq(std::size_t a, std::size_t b) const;  // pts[a].x <= pts[b].x
  bool y_geq(std::size_t a, std::size_t b) const;  // pts[a].y >= pts[b].y
  bool same_coord(std::size_t a, std::size_t b) const;

  const std::vector<Coord2>& points() const { return pts_; }

 private:
  std::vector<Coord2> pts_;
  bool exact_ = false;
  int scale_ = 0;
  std::vector<std::int64_t> sx_, sy_;  // scaled integer coordinates when exact
};

// Minimum pairwise Euclidean distance. Throws DataError on fewer than two
// points or on duplicate coordinates.
double min_pairwise_gamma(const std::vector<Coord2>& pts);

struct BoundaryEpsilon {
  double epsilon;
  double r1;  // min over {d(x,y) - r : d(x,y) > r}, +inf if the set is empty
  double r2;  // min over {c - a : a < c}, +inf if the set is empty
};

// The positive margin that makes the closed half-disk neighborhoods
// expressible through strict inequalities. Throws PreconditionError when both
// minima range over empty sets (all pairwise distances <= r and all points on
// one vertical line).
BoundaryEpsilon boundary_epsilon(const std::vector<Coord2>& pts, double r);

// Canonical decimal rendering: integers print without a fraction part.
std::string format_coord(double v);

}  // namespace typedtopo
