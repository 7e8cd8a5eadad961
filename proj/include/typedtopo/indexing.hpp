#pragma once

#include <map>

#include "typedtopo/surgery.hpp"

namespace typedtopo {

// Positional coordinate "major.minor" on the local horizontal axis. The dot
// is notation, not arithmetic: the value is an integer pair.
struct IndexValue {
  int major = 0;  // may be negative for pre-origin reference points
  int minor = 0;  // >= 0

  bool operator==(const IndexValue&) const = default;
  std::string render() const;
};

struct IndexMap {
  TypeIndex p = 0;
  TypeIndex q = 0;
  PointIndex origin = 0;
  std::map<PointIndex, IndexValue> entries;
};

// The base axis: every point of tr(x) at (its track number, 0).
IndexMap base_index(const TypedSpace& space, PointIndex x, TypeIndex p);

struct UniformityViolation {
  std::size_t p_track;
  std::size_t q_track;
};

struct UniformityReport {
  bool uniform = true;
  // (i, k) pairs where p-track i meets q-track k without lying inside it
  std::vector<UniformityViolation> violations;
};

// A p-track that straddles two q-tracks breaks uniform typing. Requires
// p < q in the poset.
UniformityReport is_uniformly_typed(const TypedSpace& space, PointIndex x, TypeIndex p,
                                    TypeIndex q);

struct PqStage {
  int stage = 1;                   // t
  std::size_t k = 0;               // k_t
  std::vector<std::size_t> i_seq;  // i^t_1 .. i^t_{k_t - k_{t-1}}
  PointSet a;                      // A_t
  PointSet b;                      // B_t
  PointSet c;                      // C_t
  PointSet kk;                     // K_t = tr(C_t)
  PointIndex reference = 0;        // x_t (x_1 = x)
  std::size_t r = 0;               // r_t, stages >= 2 only
};

// Stage 1 of the (p,q) machinery: k_1, the nesting sequence i^1_j, and the
// split of tr_q(x) into A_1 / B_1 with the parallel part C_1 and its reach
// K_1. Defined only on uniformly typed clusters.
PqStage pq_decomposition(const TypedSpace& space, PointIndex x, TypeIndex p, TypeIndex q);

// major = the unique t with i_t <= k < i_{t+1} (i_0 = 0), minor = k - i_t.
IndexValue index_roundtrip(std::size_t k, const std::vector<std::size_t>& i_seq);
std::size_t index_roundtrip_inverse(const IndexValue& v,
                                    const std::vector<std::size_t>& i_seq);

// The combined axis over tr_p(x): track number k encoded against the stage-1
// nesting sequence.
IndexMap combined_index(const TypedSpace& space, PointIndex x, TypeIndex p, TypeIndex q);

struct IndexedSetResult {
  IndexMap map;
  SurgeryLog log;
  TypedSpace space;  // after the surrounding-tree surgeries
};

// Indexes tr(D) for a p-closure-connected D through its surrounding tree:
// each child node is anchored at parent + n1 - n2, and every point of a
// node's post-surgery track j gets the node's major plus j.
IndexedSetResult index_closure_connected_set(const TypedSpace& space, const PointSet& d,
                                             PointIndex d0, IndexValue base, TypeIndex p,
                                             TypeIndex q);

// Extends the combined index over A_1 and K_1: the port component that can
// reach x is anchored at minus the track distance, parallel components at the
// origin's value.
IndexedSetResult extend_index_A1(const TypedSpace& space, const PqStage& stage1,
                                 TypeIndex p, TypeIndex q);

struct PqStraightViolation {
  PointIndex y;
  PointIndex z;
  PointIndex w;
};

struct PqStraightReport {
  bool straight = true;
  std::vector<PqStraightViolation> violations;
};

// For every y in tr_q(x) and z, w in tr_p(y): the p-order from y must not
// invert the q-order from y.
PqStraightReport is_pq_straight(const TypedSpace& space, PointIndex x, TypeIndex p,
                                TypeIndex q);

// The next stage's reference point: the port member of q-track (k_prev + 1)
// with the longest p-track sequence (smallest id on ties). Empty track means
// the stages are complete.
std::optional<PointIndex> reference_point(const TypedSpace& space, PointIndex x, TypeIndex p,
                                          TypeIndex q, std::size_t k_prev);

struct FullExtensionResult {
  IndexMap map;
  SurgeryLog log;
  std::vector<PqStage> stages;
  TypedSpace space;
};

// Runs the stage loop until tr_q(x) is exhausted. Requires uniform typing and
// (p,q)-straightness at x.
FullExtensionResult full_extension(const TypedSpace& space, PointIndex x, TypeIndex p,
                                   TypeIndex q);

}  // namespace typedtopo
