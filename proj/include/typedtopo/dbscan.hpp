#pragma once

#include "typedtopo/closure.hpp"
#include "typedtopo/space.hpp"

namespace typedtopo {

constexpr int kNoise = -1;

enum class PointRole { Core, Border, Noise };

struct DbscanResult {
  std::vector<int> labels;          // cluster id per point, kNoise for noise
  std::vector<PointRole> roles;
  double eps = 0;
  int min_pts = 0;
  int cluster_count = 0;
};

// Classic density clustering: cores have at least min_pts neighbors within
// eps (self included, open ball), clusters expand through cores only, border
// points attach to the cluster of their smallest-id core neighbor. Cluster
// ids are numbered by smallest contained point.
DbscanResult dbscan_classify(const std::vector<std::pair<std::string, Coord2>>& points,
                             double eps, int min_pts);
DbscanResult dbscan_classify(const TypedSpace& metric_space, const Radius& eps, int min_pts);

struct ClusterDiff {
  PointIndex origin;
  PointSet dbscan_cluster;
  PointSet closure_cluster;  // tr of the origin
  bool equal = false;
  bool dbscan_subset = false;
};

struct CompareReport {
  TypeIndex type;
  int min_pts;
  // minPts = 1: the density cluster of every point must equal its closure
  std::vector<ClusterDiff> free_mode;
  bool free_mode_equal = true;
  // stated minPts: border non-expansion can leave proper subsets
  std::vector<ClusterDiff> standard_mode;
  bool standard_contained = true;
};

// Both comparisons between density clusters and transitive closures on a
// metric-disk space.
CompareReport compare_with_tr(const TypedSpace& space, TypeIndex p, int min_pts);

}  // namespace typedtopo
