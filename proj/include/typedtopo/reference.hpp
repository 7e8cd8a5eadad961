#pragma once

// Serial reference implementations. These follow the definitions directly,
// with no reverse index, no worklist and no parallel loops; the unit,
// property and acceptance suites check the production kernels against them,
// and the benchmark compares their speed.

#include "typedtopo/dbscan.hpp"
#include "typedtopo/space.hpp"

namespace typedtopo {
namespace reference {

// Definitional direct closure: A plus every x whose umin meets A.
PointSet cl1(const TypedSpace& space, const PointSet& a, TypeIndex p);

// Iterated cl1 until stable.
PointSet tr(const TypedSpace& space, const PointSet& a, TypeIndex p);

// Serial all-pairs neighborhood construction for the metric builder.
std::vector<PointSet> metric_neighborhoods(const std::vector<Coord2>& coords,
                                           const GeomGrid& grid, const Radius& r);
std::vector<PointSet> directed_neighborhoods(const std::vector<Coord2>& coords,
                                             const GeomGrid& grid, Shape shape,
                                             const Radius& r);

// Literal connectedness: search all bipartitions of A for two neighborhood
// collections with disjoint unions. Exponential; |A| <= ~16.
bool connected_bruteforce(const TypedSpace& space, const PointSet& a, TypeIndex p);

// Density reachability by fixpoint iteration, no core-component shortcut.
PointSet dbscan_reachable(const std::vector<Coord2>& coords, const GeomGrid& grid,
                          const Radius& eps, int min_pts, PointIndex seed);
std::vector<char> dbscan_core(const std::vector<Coord2>& coords, const GeomGrid& grid,
                              const Radius& eps, int min_pts);

}  // namespace reference
}  // namespace typedtopo
