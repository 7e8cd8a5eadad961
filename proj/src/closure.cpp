#include "typedtopo/closure.hpp"

#include "typedtopo/errors.hpp"

namespace typedtopo {

PointSet TrackDecomposition::closure() const {
  PointSet out;
  for (const PointSet& t : tracks) out = set_union(out, t);
  return out;
}

PointSet TrackDecomposition::level(std::size_t n) const {
  PointSet out;
  for (std::size_t i = 0; i < tracks.size() && i <= n; ++i) out = set_union(out, tracks[i]);
  return out;
}

int TrackDecomposition::track_of(PointIndex x) const {
  for (std::size_t i = 0; i < tracks.size(); ++i)
    if (contains(tracks[i], x)) return static_cast<int>(i);
  return -1;
}

PointSet cl1(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  PointSet out = a;
  for (PointIndex m : a)
    for (PointIndex x : space.rev(m, p)) out.push_back(x);
  normalize(out);
  return out;
}

PointSet cln(const TypedSpace& space, const PointSet& a, TypeIndex p, std::size_t n) {
  PointSet cur = a;
  for (std::size_t i = 0; i < n; ++i) {
    PointSet next = cl1(space, cur, p);
    if (next.size() == cur.size()) return next;  // stabilized
    cur = std::move(next);
  }
  return cur;
}

TrackDecomposition tracks(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  if (a.empty()) throw PreconditionError("tracks: empty seed set");
  for (PointIndex m : a)
    if (m >= space.point_count()) throw DataError("tracks: unknown point in seed");
  TrackDecomposition td;
  td.origin = a;
  td.type = p;
  std::vector<char> seen(space.point_count(), 0);
  for (PointIndex m : a) seen[m] = 1;
  td.tracks.push_back(a);
  PointSet frontier = a;
  while (!frontier.empty()) {
    PointSet next;
    for (PointIndex m : frontier)
      for (PointIndex x : space.rev(m, p))
        if (!seen[x]) {
          seen[x] = 1;
          next.push_back(x);
        }
    normalize(next);
    if (next.empty()) break;
    frontier = next;
    td.tracks.push_back(std::move(next));
  }
  return td;
}

TrackDecomposition tracks(const TypedSpace& space, PointIndex x, TypeIndex p) {
  return tracks(space, PointSet{x}, p);
}

ClusterSet tr(const TypedSpace& space, const PointSet& a, TypeIndex p) {
  TrackDecomposition td = tracks(space, a, p);
  return {td.closure(), a, p};
}

ClusterSet tr(const TypedSpace& space, PointIndex x, TypeIndex p) {
  return tr(space, PointSet{x}, p);
}

std::size_t track_count(const TypedSpace& space, PointIndex x, TypeIndex p) {
  return tracks(space, x, p).track_count();
}

bool is_accumulation_point(const TypedSpace& space, PointIndex x, const PointSet& a,
                           TypeIndex p) {
  return intersects(space.umin(x, p), a);
}

}  // namespace typedtopo
