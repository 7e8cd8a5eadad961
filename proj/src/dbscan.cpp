#include "typedtopo/dbscan.hpp"

#include <map>
#include <numeric>

#include "typedtopo/errors.hpp"

namespace typedtopo {

namespace {

DbscanResult run_dbscan(const std::vector<PointSet>& neighbors, double eps, int min_pts) {
  const std::size_t n = neighbors.size();
  DbscanResult out;
  out.eps = eps;
  out.min_pts = min_pts;
  out.labels.assign(n, kNoise);
  out.roles.assign(n, PointRole::Noise);

  std::vector<char> core(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    core[i] = neighbors[i].size() >= static_cast<std::size_t>(min_pts);

  // components of the core-core adjacency graph
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (!core[seed] || comp[seed] >= 0) continue;
    int c = next++;
    std::vector<PointIndex> stack{static_cast<PointIndex>(seed)};
    comp[seed] = c;
    while (!stack.empty()) {
      PointIndex v = stack.back();
      stack.pop_back();
      for (PointIndex w : neighbors[v])
        if (core[w] && comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
  }
  out.cluster_count = next;
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) {
      out.roles[i] = PointRole::Core;
      out.labels[i] = comp[i];
    } else {
      // border: attach to the cluster of the smallest-id core neighbor
      for (PointIndex w : neighbors[i])
        if (core[w]) {
          out.roles[i] = PointRole::Border;
          out.labels[i] = comp[w];
          break;
        }
    }
  }
  // renumber clusters by smallest contained point
  std::vector<int> first(next, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (out.labels[i] >= 0 && first[out.labels[i]] < 0)
      first[out.labels[i]] = static_cast<int>(i);
  std::vector<int> order(next);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> renum(next);
  for (int r = 0; r < next; ++r) renum[order[r]] = r;
  for (auto& l : out.labels)
    if (l >= 0) l = renum[l];
  return out;
}

std::vector<PointSet> eps_neighbors(const std::vector<Coord2>& pts, const GeomGrid& grid,
                                    const Radius& eps) {
  const std::size_t n = pts.size();
  std::vector<PointSet> neighbors(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    PointSet row;
    for (std::size_t j = 0; j < n; ++j)
      if (j == static_cast<std::size_t>(i) || grid.within_open(i, j, eps))
        row.push_back(static_cast<PointIndex>(j));
    neighbors[i] = std::move(row);
  }
  return neighbors;
}

}  // namespace

DbscanResult dbscan_classify(const std::vector<std::pair<std::string, Coord2>>& points,
                             double eps, int min_pts) {
  if (!(eps > 0)) throw PreconditionError("dbscan: eps must be positive");
  if (min_pts < 1) throw PreconditionError("dbscan: min_pts must be at least 1");
  std::vector<std::pair<std::string, Coord2>> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Coord2> coords;
  for (const auto& [id, c] : sorted) coords.push_back(c);
  Radius r = Radius::decimal(eps);
  GeomGrid grid = GeomGrid::infer(coords, {r});
  return run_dbscan(eps_neighbors(coords, grid, r), eps, min_pts);
}

DbscanResult dbscan_classify(const TypedSpace& space, const Radius& eps, int min_pts) {
  if (!space.has_coords()) throw PreconditionError("dbscan: space has no coordinates");
  if (min_pts < 1) throw PreconditionError("dbscan: min_pts must be at least 1");
  const GeomGrid& grid = *space.grid();
  return run_dbscan(eps_neighbors(space.coords(), grid, eps), eps.value, min_pts);
}

CompareReport compare_with_tr(const TypedSpace& space, TypeIndex p, int min_pts) {
  const TypeLabel& tl = space.poset().label(p);
  if (tl.shape != Shape::Disk || !tl.radius)
    throw PreconditionError("compare_with_tr: type is not a metric radius");

  CompareReport report;
  report.type = p;
  report.min_pts = min_pts;

  DbscanResult free_run = dbscan_classify(space, *tl.radius, 1);
  DbscanResult std_run = dbscan_classify(space, *tl.radius, min_pts);

  auto cluster_of = [&](const DbscanResult& run, PointIndex x) {
    PointSet out;
    if (run.labels[x] == kNoise) {
      out.push_back(x);
      return out;
    }
    for (PointIndex y = 0; y < space.point_count(); ++y)
      if (run.labels[y] == run.labels[x]) out.push_back(y);
    return out;
  };

  for (PointIndex x = 0; x < space.point_count(); ++x) {
    PointSet closure = tr(space, x, p).members;
    ClusterDiff free_diff{x, cluster_of(free_run, x), closure, false, false};
    free_diff.equal = free_diff.dbscan_cluster == closure;
    free_diff.dbscan_subset = is_subset(free_diff.dbscan_cluster, closure);
    if (!free_diff.equal) report.free_mode_equal = false;
    report.free_mode.push_back(free_diff);

    ClusterDiff std_diff{x, cluster_of(std_run, x), closure, false, false};
    std_diff.equal = std_diff.dbscan_cluster == closure;
    std_diff.dbscan_subset = is_subset(std_diff.dbscan_cluster, closure);
    if (!std_diff.dbscan_subset) report.standard_contained = false;
    report.standard_mode.push_back(std_diff);
  }
  return report;
}

}  // namespace typedtopo
