#include "typedtopo/reference.hpp"

namespace typedtopo {
namespace reference {

PointSet cl1(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  PointSet out = a;
  for (PointIndex x = 0; x < space.point_count(); ++x)
    if (intersects(space.umin(x, p), a)) out.push_back(x);
  normalize(out);
  return out;
}

PointSet tr(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  PointSet cur = a;
  while (true) {
    PointSet next = reference::cl1(space, cur, p);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<PointSet> metric_neighborhoods(const std::vector<Coord2>& coords,
                                           const GeomGrid& grid, const Radius& r) {
  const std::size_t n = coords.size();
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (y == x || grid.within_open(x, y, r)) rows[x].push_back(static_cast<PointIndex>(y));
  return rows;
}

std::vector<PointSet> directed_neighborhoods(const std::vector<Coord2>& coords,
                                             const GeomGrid& grid, Shape shape,
                                             const Radius& r) {
  const std::size_t n = coords.size();
  std::vector<PointSet> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) {
        rows[x].push_back(static_cast<PointIndex>(y));
        continue;
      }
      if (!grid.within_closed(x, y, r)) continue;
      bool in = false;
      switch (shape) {
        case Shape::Left: in = grid.x_leq(y, x); break;
        case Shape::Right: in = grid.x_leq(x, y); break;
        case Shape::UpLeft: in = grid.x_leq(y, x) && grid.y_geq(y, x); break;
        case Shape::UpRight: in = grid.x_leq(x, y) && grid.y_geq(y, x); break;
        default: break;
      }
      if (in) rows[x].push_back(static_cast<PointIndex>(y));
    }
  return rows;
}

bool connected_bruteforce(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  const std::size_t n = a.size();
  if (n <= 1) return true;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    PointSet left_union, right_union;
    for (std::size_t i = 0; i < n; ++i) {
      const PointSet& u = space.umin(a[i], p);
      if (mask & (1u << i))
        left_union = set_union(left_union, u);
      else
        right_union = set_union(right_union, u);
    }
    if (!intersects(left_union, right_union)) return false;
  }
  return true;
}

std::vector<char> dbscan_core(const std::vector<Coord2>& coords, const GeomGrid& grid,
                              const Radius& eps, int min_pts) {
  const std::size_t n = coords.size();
  std::vector<char> core(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    int count = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (y == x || grid.within_open(x, y, eps)) ++count;
    core[x] = count >= min_pts;
  }
  return core;
}

PointSet dbscan_reachable(const std::vector<Coord2>& coords, const GeomGrid& grid,
                          const Radius& eps, int min_pts, PointIndex seed) {
  const std::size_t n = coords.size();
  std::vector<char> core = dbscan_core(coords, grid, eps, min_pts);
  PointSet reached{seed};
  bool grown = true;
  while (grown) {
    grown = false;
    for (PointIndex x : PointSet(reached)) {
      if (!core[x]) continue;  // expansion only through core points
      for (std::size_t y = 0; y < n; ++y)
        if ((y == x || grid.within_open(x, y, eps)) && !contains(reached, y)) {
          reached.push_back(static_cast<PointIndex>(y));
          normalize(reached);
          grown = true;
        }
    }
  }
  return reached;
}

}  // namespace reference
}  // namespace typedtopo
