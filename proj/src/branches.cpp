#include "typedtopo/branches.hpp"

#include "typedtopo/errors.hpp"

namespace typedtopo {

TrackComponents track_components(const TypedSpace& space, PointIndex x, TypeIndex p) {
  TrackDecomposition td = tracks(space, x, p);
  TrackComponents out;
  out.origin = x;
  out.type = p;
  out.per_track.reserve(td.track_count());
  for (const PointSet& track : td.tracks)
    out.per_track.push_back(overlap_components(space, track, p, WitnessScope::WithinSet));
  return out;
}

namespace {

void grow(const TypedSpace& space, const TrackComponents& tc, TypeIndex p,
          std::vector<PointSet>& chain, std::vector<Branch>& out, bool maximal_only) {
  std::size_t next = chain.size();
  bool extended = false;
  if (next < tc.per_track.size()) {
    PointSet reach = cl1(space, chain.back(), p);
    for (const PointSet& comp : tc.per_track[next]) {
      if (!intersects(comp, reach)) continue;
      extended = true;
      chain.push_back(comp);
      grow(space, tc, p, chain, out, maximal_only);
      chain.pop_back();
    }
  }
  if (!extended || !maximal_only) out.push_back(Branch{chain});
}

}  // namespace

std::vector<Branch> enumerate_branches(const TypedSpace& space, PointIndex x, TypeIndex p,
                                       const BranchOptions& opts) {
  TrackComponents tc = track_components(space, x, p);
  std::vector<Branch> out;
  std::vector<PointSet> chain{PointSet{x}};
  grow(space, tc, p, chain, out, opts.maximal_only);
  return out;
}

}  // namespace typedtopo
