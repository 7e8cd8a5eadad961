#include "typedtopo/surgery.hpp"

#include "typedtopo/errors.hpp"

namespace typedtopo {

void SurgeryLog::append(const SurgeryLog& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

TypedSpace replay(const TypedSpace& space, const SurgeryLog& log) {
  TypedSpace cur = space;
  for (const auto& entry : log.entries) {
    if (const auto* c = std::get_if<CutRecord>(&entry)) {
      cur = cut(cur, c->z, c->y, c->type).first;
    } else if (const auto* s = std::get_if<SurgeryRecord>(&entry)) {
      cur = surgery(cur, s->z, s->y, s->type).first;
    }
    // RemovalRecord: sequence bookkeeping only
  }
  return cur;
}

std::pair<TypedSpace, CutRecord> cut(const TypedSpace& space, PointIndex z, PointIndex y,
                                     TypeIndex p) {
  if (z == y) throw PreconditionError("cut: z and y must differ");
  if (z >= space.point_count() || y >= space.point_count())
    throw DataError("cut: unknown point");
  CutRecord record{z, y, p};
  return {space.with_removed(p, z, PointSet{y}), record};
}

std::pair<TypedSpace, SurgeryRecord> surgery(const TypedSpace& space, PointIndex z,
                                             PointIndex y, TypeIndex p,
                                             const SurgeryOptions& opts) {
  if (z == y) throw PreconditionError("surgery: z and y must differ");
  PointSet tr_y = tr(space, y, p).members;
  PointSet tr_z = tr(space, z, p).members;
  if (contains(tr_y, z) || contains(tr_z, y))
    throw PreconditionError("not surgery-eligible: one point is inside the other's closure");

  SurgeryRecord record;
  record.z = z;
  record.y = y;
  record.type = p;
  record.affected_points = set_intersection(tr_y, tr_z);
  record.removed_targets = set_difference(tr_z, tr_y);

  std::vector<std::pair<PointIndex, PointSet>> edits;
  edits.reserve(record.affected_points.size());
  for (PointIndex w : record.affected_points) edits.emplace_back(w, record.removed_targets);
  TypedSpace out = space.with_removed_batch(p, edits);

  if (opts.audit) {
    PointSet tr_y2 = tr(out, y, p).members;
    PointSet tr_z2 = tr(out, z, p).members;
    if (tr_y2 != tr_y) throw PreconditionError("surgery audit: kept cluster changed");
    if (intersects(tr_y2, tr_z2))
      throw PreconditionError("surgery audit: clusters still intersect");
    if (set_union(tr_y2, tr_z2) != set_union(tr_y, tr_z))
      throw PreconditionError("surgery audit: cluster union not preserved");
  }
  return {std::move(out), std::move(record)};
}

std::pair<TypedSpace, SurgeryLog> separation_surgeries(const TypedSpace& space,
                                                       const std::vector<PointIndex>& seq,
                                                       TypeIndex p,
                                                       const SurgeryOptions& opts) {
  if (seq.empty()) throw PreconditionError("separation_surgeries: empty sequence");
  TypedSpace cur = space;
  SurgeryLog log;
  std::vector<char> alive(seq.size(), 1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (!alive[j] || !alive[i]) continue;
      if (seq[j] == seq[i]) {
        alive[j] = 0;
        log.entries.push_back(RemovalRecord{seq[j]});
        continue;
      }
      PointSet tr_i = tr(cur, seq[i], p).members;
      PointSet tr_j = tr(cur, seq[j], p).members;
      if (contains(tr_i, seq[j]) || contains(tr_j, seq[i])) {
        log.notes.push_back("skipped ineligible surgery (" + cur.id(seq[j]) + ", " +
                            cur.id(seq[i]) + ")");
        continue;
      }
      auto [next, record] = surgery(cur, seq[j], seq[i], p, opts);
      cur = std::move(next);
      log.entries.push_back(std::move(record));
    }
  }
  return {std::move(cur), std::move(log)};
}

std::pair<TypedSpace, std::vector<CutRecord>> straighten(const TypedSpace& space,
                                                         PointIndex x, TypeIndex p) {
  TrackDecomposition td = tracks(space, x, p);
  std::vector<CutRecord> cuts;
  std::vector<std::pair<PointIndex, PointSet>> edits;
  PointSet level;  // CL_i(x), grown incrementally
  for (std::size_t i = 0; i < td.track_count(); ++i) {
    level = set_union(level, td.tracks[i]);
    for (PointIndex y : td.tracks[i]) {
      PointSet check;
      for (PointIndex z : space.umin(y, p)) {
        if (z == y || contains(level, z)) continue;
        if (!contains(space.umin(z, p), y)) check.push_back(z);
      }
      if (!check.empty()) {
        for (PointIndex z : check) cuts.push_back({y, z, p});
        edits.emplace_back(y, check);
      }
    }
  }
  if (edits.empty()) return {space, {}};
  return {space.with_removed_batch(p, edits), std::move(cuts)};
}

const TreeEdge& SurroundingTree::edge_of(PointIndex child) const {
  for (const TreeEdge& e : edges)
    if (e.child == child) return e;
  throw DataError("surrounding tree: no such child node");
}

SurroundingTreeResult surrounding_tree(const TypedSpace& space, const PointSet& d,
                                       PointIndex d0, TypeIndex p,
                                       const SurgeryOptions& opts) {
  if (!contains(d, d0)) throw PreconditionError("surrounding_tree: root must belong to D");
  if (!is_closure_connected(space, d, p))
    throw PreconditionError("surrounding_tree: D is not closure-connected");

  SurroundingTreeResult result;
  result.tree.root = d0;
  result.tree.type = p;
  result.space = space;

  std::vector<char> placed(space.point_count(), 0);
  placed[d0] = 1;
  std::vector<PointIndex> level{d0};
  result.tree.levels.push_back(level);

  while (true) {
    // adopt children against the current space state
    std::vector<std::pair<PointIndex, std::vector<PointIndex>>> children;  // parent -> kids
    std::vector<PointIndex> next_seq;  // with cross-parent duplicates
    std::vector<PointIndex> next_level;
    for (PointIndex parent : level) {
      TrackDecomposition parent_tracks = tracks(result.space, parent, p);
      PointSet parent_tr = parent_tracks.closure();
      std::vector<PointIndex> kids;
      for (PointIndex e : d) {
        if (placed[e]) continue;
        TrackDecomposition child_tracks = tracks(result.space, e, p);
        PointSet child_tr = child_tracks.closure();
        if (!intersects(child_tr, parent_tr)) continue;
        kids.push_back(e);
        next_seq.push_back(e);
        bool first_adoption =
            std::find(next_level.begin(), next_level.end(), e) == next_level.end();
        if (first_adoption) {
          next_level.push_back(e);
          TreeEdge edge;
          edge.child = e;
          edge.parent = parent;
          std::size_t m1 = 0;
          while (m1 < parent_tracks.track_count() &&
                 !intersects(child_tr, parent_tracks.tracks[m1]))
            ++m1;
          edge.meet_parent_track = m1;
          std::size_t m2 = 0;
          while (m2 < child_tracks.track_count() &&
                 !intersects(child_tracks.tracks[m2], parent_tracks.tracks[m1]))
            ++m2;
          edge.meet_child_track = m2;
          result.tree.edges.push_back(edge);
        }
      }
      if (!kids.empty()) children.emplace_back(parent, std::move(kids));
    }
    if (next_level.empty()) break;

    // PS_i: surgeries (child, parent), then separation surgeries on the level
    std::vector<SurgeryRecord> batch;
    for (const auto& [parent, kids] : children) {
      for (PointIndex e : kids) {
        PointSet tr_parent = tr(result.space, parent, p).members;
        PointSet tr_child = tr(result.space, e, p).members;
        if (contains(tr_parent, e) || contains(tr_child, parent)) {
          result.log.notes.push_back("skipped ineligible surgery (" + space.id(e) + ", " +
                                     space.id(parent) + ")");
          continue;
        }
        auto [next, record] = surgery(result.space, e, parent, p, opts);
        result.space = std::move(next);
        batch.push_back(record);
        result.log.entries.push_back(std::move(record));
      }
    }
    auto [after_sep, sep_log] = separation_surgeries(result.space, next_seq, p, opts);
    result.space = std::move(after_sep);
    for (const auto& entry : sep_log.entries)
      if (const auto* s = std::get_if<SurgeryRecord>(&entry)) batch.push_back(*s);
    result.log.append(sep_log);
    result.tree.per_level_surgeries.push_back(std::move(batch));

    for (PointIndex e : next_level) placed[e] = 1;
    result.tree.levels.push_back(next_level);
    level = std::move(next_level);
  }

  for (PointIndex e : d)
    if (!placed[e])
      throw PreconditionError("surrounding_tree: point " + space.id(e) +
                              " was never adopted into the tree");

  if (opts.audit) {
    PointSet before = tr(space, d, p).members;
    PointSet after = tr(result.space, d, p).members;
    if (before != after)
      throw PreconditionError("surrounding_tree audit: tr(D) changed");
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (intersects(tr(result.space, d[i], p).members, tr(result.space, d[j], p).members))
          throw PreconditionError("surrounding_tree audit: clusters of " + space.id(d[i]) +
                                  " and " + space.id(d[j]) + " still intersect");
  }
  return result;
}

}  // namespace typedtopo
