#include "doctest.h"

#include "fixtures.hpp"
#include "typedtopo/connectivity.hpp"
#include "typedtopo/dbscan.hpp"
#include "typedtopo/errors.hpp"
#include "typedtopo/reference.hpp"

using namespace typedtopo;

TEST_CASE("square classification") {
  std::vector<std::pair<std::string, Coord2>> pts = {
      {"a", {0, 0}}, {"b", {0, 1}}, {"c", {1, 1}}, {"d", {1, 0}}};
  SUBCASE("all core, one cluster at eps 1.1 minPts 3") {
    DbscanResult r = dbscan_classify(pts, 1.1, 3);
    CHECK(r.cluster_count == 1);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(r.roles[i] == PointRole::Core);
      CHECK(r.labels[i] == 0);
    }
  }
  SUBCASE("all noise at eps 0.5 minPts 2") {
    DbscanResult r = dbscan_classify(pts, 0.5, 2);
    CHECK(r.cluster_count == 0);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(r.roles[i] == PointRole::Noise);
      CHECK(r.labels[i] == kNoise);
    }
  }
}

TEST_CASE("labels agree with the definitional reachability") {
  fixtures::Rng rng(83);
  for (int round = 0; round < 80; ++round) {
    TypedSpace s = fixtures::random_metric_space(rng, 12);
    const Radius& eps = *s.poset().label(0).radius;
    std::uniform_int_distribution<int> minpts(1, 4);
    int mp = minpts(rng);
    DbscanResult r = dbscan_classify(s, eps, mp);
    auto core = reference::dbscan_core(s.coords(), *s.grid(), eps, mp);
    for (PointIndex x = 0; x < s.point_count(); ++x) {
      CHECK((r.roles[x] == PointRole::Core) == static_cast<bool>(core[x]));
      if (!core[x]) continue;
      PointSet reach = reference::dbscan_reachable(s.coords(), *s.grid(), eps, mp, x);
      // the cluster of a core point is exactly its reachable set
      PointSet cluster;
      for (PointIndex y = 0; y < s.point_count(); ++y)
        if (r.labels[y] == r.labels[x]) cluster.push_back(y);
      // border points of other cores may be attached elsewhere; cores must match
      for (PointIndex y : reach)
        if (core[y]) CHECK(r.labels[y] == r.labels[x]);
      for (PointIndex y : cluster) CHECK(contains(reach, y));
    }
    // border and noise roles
    for (PointIndex x = 0; x < s.point_count(); ++x) {
      if (core[x]) continue;
      bool near_core = false;
      for (PointIndex y = 0; y < s.point_count(); ++y)
        if (y != x && core[y] && s.grid()->within_open(x, y, eps)) near_core = true;
      CHECK((r.roles[x] == PointRole::Border) == near_core);
      CHECK((r.labels[x] == kNoise) == !near_core);
    }
  }
}

TEST_CASE("comparison with transitive closures") {
  SUBCASE("square: free mode equal") {
    TypedSpace s = fixtures::x4(1.1);
    CompareReport r = compare_with_tr(s, 0, 3);
    CHECK(r.free_mode_equal);
    CHECK(r.standard_contained);
  }
  SUBCASE("chain: the standard mode is a proper subset") {
    std::vector<std::pair<std::string, Coord2>> pts;
    for (int i = 0; i < 6; ++i)
      pts.push_back({"c" + std::to_string(i), {static_cast<double>(i), 0.0}});
    TypedSpace s = build_metric_space(pts, {Radius::decimal(1.1)});
    CompareReport r = compare_with_tr(s, 0, 4);
    CHECK(r.free_mode_equal);
    CHECK(r.standard_contained);
    bool proper = false;
    for (const auto& d : r.standard_mode)
      if (d.dbscan_subset && !d.equal) proper = true;
    CHECK(proper);  // interior points are not core at minPts 4
  }
  SUBCASE("singleton") {
    TypedSpace s = build_metric_space({{"only", {0, 0}}}, {Radius::decimal(1)});
    CompareReport r = compare_with_tr(s, 0, 2);
    CHECK(r.free_mode_equal);
  }
  SUBCASE("non-metric type rejected") {
    TypedSpace s = fixtures::x48_left();
    CHECK_THROWS_AS(compare_with_tr(s, s.require_type("left-1"), 2), PreconditionError);
  }
}

TEST_CASE("density cluster is type connected in the disk space") {
  fixtures::Rng rng(89);
  for (int round = 0; round < 60; ++round) {
    TypedSpace s = fixtures::random_metric_space(rng, 10);
    DbscanResult r = dbscan_classify(s, *s.poset().label(0).radius, 2);
    for (int c = 0; c < r.cluster_count; ++c) {
      PointSet cluster;
      for (PointIndex x = 0; x < s.point_count(); ++x)
        if (r.labels[x] == c) cluster.push_back(x);
      if (!cluster.empty()) CHECK(is_type_p_connected(s, cluster, 0).connected);
    }
  }
}
