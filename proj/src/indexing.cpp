#include "typedtopo/indexing.hpp"

#include <algorithm>

#include "typedtopo/errors.hpp"

namespace typedtopo {

std::string IndexValue::render() const {
  return std::to_string(major) + "." + std::to_string(minor);
}

IndexMap base_index(const TypedSpace& space, PointIndex x, TypeIndex p) {
  TrackDecomposition td = tracks(space, x, p);
  IndexMap map;
  map.p = p;
  map.q = p;
  map.origin = x;
  for (std::size_t i = 0; i < td.track_count(); ++i)
    for (PointIndex y : td.tracks[i]) map.entries[y] = {static_cast<int>(i), 0};
  return map;
}

UniformityReport is_uniformly_typed(const TypedSpace& space, PointIndex x, TypeIndex p,
                                    TypeIndex q) {
  if (p == q || !space.poset().leq(p, q))
    throw PreconditionError("is_uniformly_typed: types must satisfy p < q");
  TrackDecomposition ptd = tracks(space, x, p);
  TrackDecomposition qtd = tracks(space, x, q);
  UniformityReport report;
  for (std::size_t i = 1; i < ptd.track_count(); ++i)
    for (std::size_t k = 1; k < qtd.track_count(); ++k)
      if (intersects(ptd.tracks[i], qtd.tracks[k]) &&
          !is_subset(ptd.tracks[i], qtd.tracks[k]))
        report.violations.push_back({i, k});
  report.uniform = report.violations.empty();
  return report;
}

namespace {

PointSet level_of(const TrackDecomposition& td, std::size_t n) { return td.level(n); }

// k_t = min{k : k > floor, cluster inside CL_k^q(x)}
std::size_t min_covering_level(const TrackDecomposition& qtd, const PointSet& cluster,
                               std::size_t floor_exclusive, bool has_floor) {
  PointSet level;
  for (std::size_t k = 0; k < qtd.track_count(); ++k) {
    level = set_union(level, qtd.tracks[k]);
    if (has_floor && k <= floor_exclusive) continue;
    if (is_subset(cluster, level)) return k;
  }
  throw PreconditionError("pq stages: cluster not contained in any q-closure level");
}

std::vector<std::size_t> nesting_sequence(const TrackDecomposition& ptd,
                                          const TrackDecomposition& qtd,
                                          std::size_t q_from, std::size_t q_to) {
  // i_j = max{i <= |p-tracks| : CL_i^p inside CL_{q_from + j}^q}, floor 0.
  // CL_i^p grows with i, so scan until the inclusion first fails.
  std::vector<std::size_t> seq;
  const std::size_t m = ptd.track_count();
  PointSet qlevel;
  for (std::size_t k = 0; k <= q_to && k < qtd.track_count(); ++k) {
    qlevel = set_union(qlevel, qtd.tracks[k]);
    if (k <= q_from) continue;
    std::size_t hi = 0;
    PointSet plevel;
    for (std::size_t i = 0; i < m; ++i) {
      plevel = set_union(plevel, ptd.tracks[i]);
      if (!is_subset(plevel, qlevel)) break;
      hi = (i + 1 == m) ? m : i;  // whole cluster inside: cap at |p-tracks|
    }
    seq.push_back(hi);
  }
  return seq;
}

}  // namespace

PqStage pq_decomposition(const TypedSpace& space, PointIndex x, TypeIndex p, TypeIndex q) {
  UniformityReport uni = is_uniformly_typed(space, x, p, q);
  if (!uni.uniform)
    throw PreconditionError("decomposition undefined: space is not uniformly typed at origin");
  TrackDecomposition ptd = tracks(space, x, p);
  TrackDecomposition qtd = tracks(space, x, q);
  PointSet tr_p = ptd.closure();
  PointSet tr_q = qtd.closure();

  PqStage stage;
  stage.stage = 1;
  stage.reference = x;
  stage.k = min_covering_level(qtd, tr_p, 0, false);
  stage.i_seq = nesting_sequence(ptd, qtd, 0, stage.k);
  stage.a = level_of(qtd, stage.k);
  stage.b = set_difference(tr_q, stage.a);
  stage.c = set_difference(stage.a, tr_p);
  if (!stage.c.empty()) stage.kk = tr(space, stage.c, p).members;
  return stage;
}

IndexValue index_roundtrip(std::size_t k, const std::vector<std::size_t>& i_seq) {
  if (i_seq.empty()) {
    if (k != 0) throw PreconditionError("index_roundtrip: k beyond the stabilization index");
    return {0, 0};
  }
  if (k >= i_seq.back())
    throw PreconditionError("index_roundtrip: k beyond the stabilization index");
  std::size_t major = 0;
  for (std::size_t t = 0; t < i_seq.size(); ++t)
    if (i_seq[t] <= k) major = t + 1;
  std::size_t base = major == 0 ? 0 : i_seq[major - 1];
  return {static_cast<int>(major), static_cast<int>(k - base)};
}

std::size_t index_roundtrip_inverse(const IndexValue& v,
                                    const std::vector<std::size_t>& i_seq) {
  if (v.major < 0 || v.minor < 0 ||
      static_cast<std::size_t>(v.major) > i_seq.size())
    throw PreconditionError("index value outside the realized range");
  std::size_t base = v.major == 0 ? 0 : i_seq[v.major - 1];
  std::size_t k = base + static_cast<std::size_t>(v.minor);
  IndexValue check = index_roundtrip(k, i_seq);
  if (!(check == v)) throw PreconditionError("index value outside the realized range");
  return k;
}

IndexMap combined_index(const TypedSpace& space, PointIndex x, TypeIndex p, TypeIndex q) {
  PqStage stage = pq_decomposition(space, x, p, q);
  TrackDecomposition ptd = tracks(space, x, p);
  IndexMap map;
  map.p = p;
  map.q = q;
  map.origin = x;
  for (std::size_t k = 0; k < ptd.track_count(); ++k)
    for (PointIndex y : ptd.tracks[k]) map.entries[y] = index_roundtrip(k, stage.i_seq);
  return map;
}

namespace {

// Anchor each tree node, then give every point of a node's post-surgery
// track j the node's major plus j. Existing entries are never overwritten.
void index_tree_into(IndexMap& map, const SurroundingTree& tree, const TypedSpace& after,
                     IndexValue base, TypeIndex p) {
  std::map<PointIndex, IndexValue> anchors;
  anchors[tree.root] = base;
  for (const auto& level : tree.levels)
    for (PointIndex node : level) {
      if (node != tree.root) {
        const TreeEdge& e = tree.edge_of(node);
        IndexValue parent = anchors.at(e.parent);
        anchors[node] = {parent.major + static_cast<int>(e.meet_parent_track) -
                             static_cast<int>(e.meet_child_track),
                         0};
      }
      IndexValue anchor = anchors.at(node);
      if (!map.entries.count(node)) map.entries[node] = anchor;
      TrackDecomposition td = tracks(after, node, p);
      for (std::size_t j = 1; j < td.track_count(); ++j)
        for (PointIndex w : td.tracks[j])
          if (!map.entries.count(w))
            map.entries[w] = {anchor.major + static_cast<int>(j), 0};
    }
}

// The A-extension pass shared by stage 1 and the later stages: split the
// port of the stage's A-set into closure-connected components, anchor the one
// that reaches the stage reference behind it, anchor parallel components at
// the stage anchor itself, and index each component through its tree.
void extend_stage(TypedSpace& cur, IndexMap& map, SurgeryLog& log, const PointSet& a_set,
                  PointIndex stage_reference, int anchor_major, TypeIndex p) {
  if (a_set.empty()) return;
  Port prt = port(cur, a_set, p);
  std::vector<PointSet> comps = closure_decomposition(cur, prt.members, p);
  for (const PointSet& comp : comps) {
    PointIndex root = comp.front();
    IndexValue base{anchor_major, 0};
    for (PointIndex cand : comp) {
      TrackDecomposition td = tracks(cur, cand, p);
      int k = td.track_of(stage_reference);
      if (k >= 0) {
        root = cand;
        base = {anchor_major - k, 0};
        break;  // comp is ordered, the smallest candidate wins
      }
    }
    SurroundingTreeResult result = surrounding_tree(cur, comp, root, p);
    cur = std::move(result.space);
    log.append(result.log);
    index_tree_into(map, result.tree, cur, base, p);
  }
}

}  // namespace

IndexedSetResult index_closure_connected_set(const TypedSpace& space, const PointSet& d,
                                             PointIndex d0, IndexValue base, TypeIndex p,
                                             TypeIndex q) {
  SurroundingTreeResult tree = surrounding_tree(space, d, d0, p);
  IndexedSetResult out{{p, q, d0, {}}, std::move(tree.log), std::move(tree.space)};
  index_tree_into(out.map, tree.tree, out.space, base, p);
  return out;
}

IndexedSetResult extend_index_A1(const TypedSpace& space, const PqStage& stage1,
                                 TypeIndex p, TypeIndex q) {
  IndexedSetResult out{combined_index(space, stage1.reference, p, q), {}, space};
  extend_stage(out.space, out.map, out.log, stage1.a, stage1.reference, 0, p);
  return out;
}

PqStraightReport is_pq_straight(const TypedSpace& space, PointIndex x, TypeIndex p,
                                TypeIndex q) {
  PointSet cluster = tr(space, x, q).members;
  PqStraightReport report;
  for (PointIndex y : cluster) {
    TrackDecomposition ptd = tracks(space, y, p);
    TrackDecomposition qtd = tracks(space, y, q);
    PointSet members = ptd.closure();
    for (PointIndex z : members)
      for (PointIndex w : members) {
        if (z == w) continue;
        int ipz = ptd.track_of(z), ipw = ptd.track_of(w);
        int iqz = qtd.track_of(z), iqw = qtd.track_of(w);
        if (ipz <= ipw && iqz > iqw) report.violations.push_back({y, z, w});
      }
  }
  report.straight = report.violations.empty();
  return report;
}

std::optional<PointIndex> reference_point(const TypedSpace& space, PointIndex x, TypeIndex p,
                                          TypeIndex q, std::size_t k_prev) {
  TrackDecomposition qtd = tracks(space, x, q);
  if (k_prev + 1 >= qtd.track_count()) return std::nullopt;
  const PointSet& d = qtd.tracks[k_prev + 1];
  Port prt = port(space, d, p);
  PointIndex best = prt.members.front();
  std::size_t best_count = 0;
  for (PointIndex cand : prt.members) {
    std::size_t c = track_count(space, cand, p);
    if (c > best_count) {
      best = cand;
      best_count = c;
    }
  }
  return best;
}

FullExtensionResult full_extension(const TypedSpace& space, PointIndex x, TypeIndex p,
                                   TypeIndex q) {
  PqStraightReport straight = is_pq_straight(space, x, p, q);
  if (!straight.straight)
    throw PreconditionError("full_extension: cluster is not (p,q)-straight at origin");

  FullExtensionResult out{{}, {}, {}, space};
  PqStage stage = pq_decomposition(space, x, p, q);
  out.map = combined_index(space, x, p, q);
  extend_stage(out.space, out.map, out.log, stage.a, x, 0, p);
  out.stages.push_back(stage);

  TrackDecomposition qtd = tracks(space, x, q);
  PointSet tr_q = qtd.closure();
  PointSet claimed = set_union(stage.a, stage.kk);

  while (true) {
    const PqStage prev = out.stages.back();
    if (prev.b.empty()) break;
    if (set_difference(tr_q, claimed).empty()) break;  // remainders already reached
    std::optional<PointIndex> ref = reference_point(out.space, x, p, q, prev.k);
    if (!ref)
      throw PreconditionError(
          "full_extension: nonempty remainder but no next reference point");
    PointIndex xt = *ref;

    PqStage st;
    st.stage = prev.stage + 1;
    st.reference = xt;

    // r_t: first p-track of the previous reference carrying a point whose
    // q-step reaches x_t
    TrackDecomposition prev_tracks = tracks(out.space, prev.reference, p);
    const PointSet& xt_umin_q = out.space.umin(xt, q);
    std::size_t r = prev_tracks.track_count();
    for (std::size_t k = 0; k < prev_tracks.track_count() && r == prev_tracks.track_count();
         ++k)
      for (PointIndex y : prev_tracks.tracks[k])
        if (y == xt || contains(xt_umin_q, y)) {
          r = k;
          break;
        }
    if (r == prev_tracks.track_count())
      throw PreconditionError("full_extension: reference point " + space.id(xt) +
                              " is not one q-step from the previous stage");
    st.r = r;
    int anchor = static_cast<int>(r) +
                 static_cast<int>(prev.i_seq.empty() ? 0 : prev.i_seq.back());

    TrackDecomposition xt_tracks = tracks(out.space, xt, p);
    PointSet tr_xt = xt_tracks.closure();
    st.k = min_covering_level(qtd, tr_xt, prev.k, true);
    st.i_seq = nesting_sequence(xt_tracks, qtd, prev.k, st.k);
    st.a = set_difference(level_of(qtd, st.k), claimed);
    st.b = set_difference(tr_q, set_union(claimed, st.a));
    st.c = set_difference(st.a, tr_xt);
    if (!st.c.empty()) st.kk = tr(out.space, st.c, p).members;

    PointSet newly = set_union(st.a, st.kk);
    if (is_subset(newly, claimed))
      throw PreconditionError("full_extension: stage " + std::to_string(st.stage) +
                              " claims no new points");
    extend_stage(out.space, out.map, out.log, st.a, xt, anchor, p);
    claimed = set_union(claimed, newly);
    out.stages.push_back(st);
  }

  for (PointIndex y : tr_q)
    if (!out.map.entries.count(y))
      throw PreconditionError("full_extension: point " + space.id(y) + " was never indexed");
  return out;
}

}  // namespace typedtopo
