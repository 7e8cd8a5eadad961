#pragma once

#include "typedtopo/space.hpp"

namespace typedtopo {

// Ordered rings of the closure expansion: tracks[0] is the seed, tracks[i]
// the points first reached at step i. All listed tracks are nonempty except
// possibly a singleton seed list.
struct TrackDecomposition {
  PointSet origin;
  TypeIndex type;
  std::vector<PointSet> tracks;

  std::size_t track_count() const { return tracks.size(); }
  PointSet closure() const;                    // union of all tracks
  PointSet level(std::size_t n) const;         // union of tracks 0..n
  // track index of a point, or -1 when outside the closure
  int track_of(PointIndex x) const;
};

struct ClusterSet {
  PointSet members;
  PointSet origin;
  TypeIndex type;
};

// Direct closure: A plus every point whose least p-neighborhood meets A.
PointSet cl1(const TypedSpace& space, const PointSet& a, TypeIndex p);

// n-fold iterate of cl1; n = 0 gives A back.
PointSet cln(const TypedSpace& space, const PointSet& a, TypeIndex p, std::size_t n);

// Transitive p-closure: the least fixed point of cl1 containing A.
ClusterSet tr(const TypedSpace& space, const PointSet& a, TypeIndex p);
ClusterSet tr(const TypedSpace& space, PointIndex x, TypeIndex p);

TrackDecomposition tracks(const TypedSpace& space, const PointSet& a, TypeIndex p);
TrackDecomposition tracks(const TypedSpace& space, PointIndex x, TypeIndex p);

// The smallest i with Track_i empty; equals the number of nonempty tracks.
std::size_t track_count(const TypedSpace& space, PointIndex x, TypeIndex p);

bool is_accumulation_point(const TypedSpace& space, PointIndex x, const PointSet& a,
                           TypeIndex p);

}  // namespace typedtopo
