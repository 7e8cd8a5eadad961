#pragma once

#include "typedtopo/connectivity.hpp"

namespace typedtopo {

// Per-track type-p-connected parts C_i^1, C_i^2, ... in smallest-member order.
struct TrackComponents {
  PointIndex origin;
  TypeIndex type;
  std::vector<std::vector<PointSet>> per_track;
};

TrackComponents track_components(const TypedSpace& space, PointIndex x, TypeIndex p);

// A chain of per-track components: levels[0] = {x}, levels[i] a component of
// track i, consecutive levels linked through the direct closure.
struct Branch {
  std::vector<PointSet> levels;
};

struct BranchOptions {
  bool maximal_only = true;  // false: every prefix is returned as well
};

// Depth-first enumeration over the per-track component choices, linkage
// through cl1 of the previous level. Branches are ordered lexicographically
// by the smallest member of each chosen component.
std::vector<Branch> enumerate_branches(const TypedSpace& space, PointIndex x, TypeIndex p,
                                       const BranchOptions& opts = {});

}  // namespace typedtopo
