#pragma once

#include <variant>

#include "typedtopo/closure.hpp"
#include "typedtopo/connectivity.hpp"
#include "typedtopo/space.hpp"

namespace typedtopo {

struct CutRecord {
  PointIndex z;  // neighborhood owner: umin(z,p) loses y
  PointIndex y;
  TypeIndex type;
};

struct SurgeryRecord {
  PointIndex z;  // pruned side
  PointIndex y;  // kept side
  TypeIndex type;
  PointSet affected_points;   // tr(y) & tr(z) at application time
  PointSet removed_targets;   // tr(z) \ tr(y) at application time
};

// Sequence-duplicate elimination inside separation surgeries.
struct RemovalRecord {
  PointIndex point;
};

struct SurgeryLog {
  using Entry = std::variant<CutRecord, SurgeryRecord, RemovalRecord>;
  std::vector<Entry> entries;
  std::vector<std::string> notes;  // skipped ineligible pairs etc.

  void append(const SurgeryLog& other);
};

// Replays the cut/surgery entries on a space (removal records are sequence
// bookkeeping and change nothing).
TypedSpace replay(const TypedSpace& space, const SurgeryLog& log);

// Removes y from umin(z,p); afterwards z is not in cl1({y}).
std::pair<TypedSpace, CutRecord> cut(const TypedSpace& space, PointIndex z, PointIndex y,
                                     TypeIndex p);

struct SurgeryOptions {
  bool audit = true;  // re-check the closure contract after applying
};

// Requires z outside tr(y) and y outside tr(z). Every point of
// tr(y) & tr(z) loses its neighborhood members from tr(z) \ tr(y); y's
// cluster is kept intact, z's loses the shared part.
std::pair<TypedSpace, SurgeryRecord> surgery(const TypedSpace& space, PointIndex z,
                                             PointIndex y, TypeIndex p,
                                             const SurgeryOptions& opts = {});

// Surgeries (y2,y1),(y3,y1),...,(yn,y1),(y3,y2),... over an ordered sequence;
// repeated points are removed from the sequence when their pair comes up, and
// ineligible pairs are skipped with a note.
std::pair<TypedSpace, SurgeryLog> separation_surgeries(const TypedSpace& space,
                                                       const std::vector<PointIndex>& seq,
                                                       TypeIndex p,
                                                       const SurgeryOptions& opts = {});

// Cuts every unreciprocated forward neighborhood membership found outside the
// reached closure level, leaving tr(x) straight.
std::pair<TypedSpace, std::vector<CutRecord>> straighten(const TypedSpace& space,
                                                         PointIndex x, TypeIndex p);

struct TreeEdge {
  PointIndex child;
  PointIndex parent;
  // first track of the parent met by the child's cluster, and the child track
  // doing the meeting, both taken when the child was adopted
  std::size_t meet_parent_track = 0;  // n1 / m1
  std::size_t meet_child_track = 0;   // n2 / m2
};

struct SurroundingTree {
  PointIndex root;
  TypeIndex type;
  std::vector<std::vector<PointIndex>> levels;    // levels[0] = {root}
  std::vector<TreeEdge> edges;                    // one per non-root node
  std::vector<std::vector<SurgeryRecord>> per_level_surgeries;

  const TreeEdge& edge_of(PointIndex child) const;
};

// Positions a p-closure-connected set D on a breadth-first tree rooted at d0
// and performs the per-level surgeries that make the members' clusters
// pairwise disjoint. Returns the tree, the surgered space and the log.
struct SurroundingTreeResult {
  SurroundingTree tree;
  TypedSpace space;
  SurgeryLog log;
};

SurroundingTreeResult surrounding_tree(const TypedSpace& space, const PointSet& d,
                                       PointIndex d0, TypeIndex p,
                                       const SurgeryOptions& opts = {});

}  // namespace typedtopo
