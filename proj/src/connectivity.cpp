#include "typedtopo/connectivity.hpp"

#include <map>
#include <numeric>

#include "typedtopo/errors.hpp"

namespace typedtopo {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<PointSet> groups_from(UnionFind& uf, const PointSet& a) {
  std::map<std::size_t, PointSet> by_root;
  for (std::size_t i = 0; i < a.size(); ++i) by_root[uf.find(i)].push_back(a[i]);
  std::vector<PointSet> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const PointSet& l, const PointSet& r) { return l.front() < r.front(); });
  return out;
}

}  // namespace

std::vector<PointSet> overlap_components(const TypedSpace& space, const PointSet& a,
                                         TypeIndex p, WitnessScope scope) {
  UnionFind uf(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      PointSet common = set_intersection(space.umin(a[i], p), space.umin(a[j], p));
      if (scope == WitnessScope::WithinSet) common = set_intersection(common, a);
      if (!common.empty()) uf.unite(i, j);
    }
  return groups_from(uf, a);
}

ConnectivityReport is_type_p_connected(const TypedSpace& space, const PointSet& a,
                                       TypeIndex p) {
  if (a.empty()) throw PreconditionError("is_type_p_connected: empty set");
  std::vector<PointSet> comps = overlap_components(space, a, p);
  ConnectivityReport report;
  if (comps.size() > 1) {
    report.connected = false;
    PointSet rest;
    for (std::size_t i = 1; i < comps.size(); ++i) rest = set_union(rest, comps[i]);
    report.witness = Bipartition{comps.front(), std::move(rest)};
  }
  return report;
}

PointSet component(const TypedSpace& space, PointIndex x, TypeIndex p) {
  if (x >= space.point_count()) throw DataError("component: unknown point");
  std::vector<PointSet> comps = overlap_components(space, space.whole(), p);
  for (const PointSet& c : comps)
    if (contains(c, x)) return c;
  return {x};
}

namespace {

// components of the graph on d with edges tr(z) overlap tr(w)
std::vector<PointSet> tr_overlap_components(const TypedSpace& space, const PointSet& d,
                                            TypeIndex p) {
  std::vector<PointSet> closures(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) closures[i] = tr(space, d[i], p).members;
  UnionFind uf(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (intersects(closures[i], closures[j])) uf.unite(i, j);
  return groups_from(uf, d);
}

}  // namespace

bool is_closure_connected(const TypedSpace& space, const PointSet& d, TypeIndex p) {
  if (d.empty()) throw PreconditionError("is_closure_connected: empty set");
  return tr_overlap_components(space, d, p).size() == 1;
}

std::vector<PointSet> closure_decomposition(const TypedSpace& space, const PointSet& d,
                                            TypeIndex p) {
  if (d.empty()) throw PreconditionError("closure_decomposition: empty set");
  return tr_overlap_components(space, d, p);
}

Port port(const TypedSpace& space, const PointSet& d, TypeIndex p) {
  if (d.empty()) throw PreconditionError("port: empty set");
  std::vector<PointSet> closures(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) closures[i] = tr(space, d[i], p).members;
  auto reaches = [&](std::size_t i, std::size_t j) { return contains(closures[i], d[j]); };

  // mutual-reachability classes
  UnionFind uf(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (reaches(i, j) && reaches(j, i)) uf.unite(i, j);

  // [y] <= [z] iff z in tr(y); minimal classes have no distinct class below
  Port out;
  out.parent = d;
  out.type = p;
  std::map<std::size_t, std::size_t> class_rep;  // root -> smallest member index
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::size_t r = uf.find(i);
    auto it = class_rep.find(r);
    if (it == class_rep.end() || d[i] < d[it->second]) class_rep[r] = i;
  }
  for (auto [root, rep] : class_rep) {
    bool minimal = true;
    for (std::size_t j = 0; j < d.size() && minimal; ++j) {
      if (uf.find(j) == root) continue;
      if (reaches(j, rep) && !reaches(rep, j)) minimal = false;
    }
    if (minimal) out.members.push_back(d[rep]);
  }
  normalize(out.members);
  return out;
}

StraightnessReport is_straight(const TypedSpace& space, PointIndex x, TypeIndex p) {
  if (x >= space.point_count()) throw DataError("is_straight: unknown point");
  TrackDecomposition td = tracks(space, x, p);
  StraightnessReport report;
  for (std::size_t i = 1; i < td.track_count(); ++i) {
    for (PointIndex y : td.tracks[i]) {
      for (PointIndex z : space.umin(y, p)) {
        if (z == y) continue;
        int jz = td.track_of(z);
        if (jz < 0 || static_cast<std::size_t>(jz) <= i) continue;
        if (!contains(space.umin(z, p), y))
          report.violations.push_back({y, z, i, static_cast<std::size_t>(jz)});
      }
      // ring locality of cl1-successors (consequence of straightness)
      for (PointIndex z : space.rev(y, p)) {
        if (z == y) continue;
        int jz = td.track_of(z);
        if (jz < 0) continue;
        long delta = static_cast<long>(jz) - static_cast<long>(i);
        if (delta > 1 || delta < -1)
          report.locality_violations.push_back({y, z, i, static_cast<std::size_t>(jz)});
      }
    }
  }
  report.straight = report.violations.empty();
  return report;
}

}  // namespace typedtopo
