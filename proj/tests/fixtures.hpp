#pragma once

#include <random>

#include "typedtopo/space.hpp"

namespace typedtopo::fixtures {

// unit square corners
TypedSpace x4(double radius);
// unit square plus (2,0)
TypedSpace x5(const Radius& radius);
// the eight points whose radius-1.01 / radius-3.01 typing is not uniform
TypedSpace remark8();
// the 48-point set with left-1/left-2 types, loaded from fixtures/paper/x48.csv
TypedSpace x48_left();
// the same point set with up-left-1/up-left-2 types
TypedSpace x48_upleft();
std::vector<std::pair<std::string, Coord2>> x48_points();

// non-straight cluster: chain x->y1->y2->z plus x->x1->x2->x3->x4 with the
// one-way membership x4 in umin(z); w1, w2 unreachable
TypedSpace f1a();

// two mixed clusters with ports {x, y}: shared tail {z, zp, zp1..zp3},
// y-side {y1, w1..w3, wp1, wp2}, x-side {x1, xp1..xp7}
TypedSpace f1b();

// two relation types p < q on 24 coordinate-named points; the (1,6) line
// carries a q-shortcut that inverts the p-order, so the cluster of (5,6) is
// not (p,q)-straight
TypedSpace f3a();

// two relation types p < q on 33 points; q-ring 3 of (5,6) is
// {(9,10),(10,3)} with p-track counts 4 and 5
TypedSpace f3b();

// small five-point relation space with a two-node surrounding tree
TypedSpace two_cluster();

std::string fixture_path(const std::string& name);

// --- random generators for the property suites -------------------------------

using Rng = std::mt19937_64;

// relation space, 1..3 chained types with neighborhoods unioned upward so the
// poset order always validates
TypedSpace random_relation_space(Rng& rng, int max_points = 12, int max_types = 3);

// distinct integer-grid points with 1..2 disk radii
TypedSpace random_metric_space(Rng& rng, int max_points = 12);

PointSet random_subset(Rng& rng, const TypedSpace& space, bool nonempty = true);

}  // namespace typedtopo::fixtures
