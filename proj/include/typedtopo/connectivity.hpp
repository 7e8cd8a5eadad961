#pragma once

#include "typedtopo/closure.hpp"
#include "typedtopo/space.hpp"

namespace typedtopo {

struct Bipartition {
  PointSet left;
  PointSet right;
};

struct ConnectivityReport {
  bool connected = true;
  std::optional<Bipartition> witness;  // present when disconnected
};

// Where the neighborhood-overlap witness may live: anywhere in the space
// (the covering definition of connectedness), or inside the tested set only
// (the rule the per-track partitions follow).
enum class WitnessScope { WholeSpace, WithinSet };

// Connected components of the graph on A with an edge y-z whenever
// umin(y,p) and umin(z,p) intersect (within the chosen scope). Components are
// ordered by smallest member.
std::vector<PointSet> overlap_components(const TypedSpace& space, const PointSet& a,
                                         TypeIndex p,
                                         WitnessScope scope = WitnessScope::WholeSpace);

// Type-p-connectedness of A: no two covering neighborhood collections with
// disjoint unions exist. Decided through the overlap graph with whole-space
// witnesses.
ConnectivityReport is_type_p_connected(const TypedSpace& space, const PointSet& a,
                                       TypeIndex p);

// The maximal type-p-connected set containing x.
PointSet component(const TypedSpace& space, PointIndex x, TypeIndex p);

// p-closure connectivity: chainability through pairwise-overlapping
// transitive closures.
bool is_closure_connected(const TypedSpace& space, const PointSet& d, TypeIndex p);

// The unique partition of D into p-closure-connected parts, ordered by
// smallest member.
std::vector<PointSet> closure_decomposition(const TypedSpace& space, const PointSet& d,
                                            TypeIndex p);

struct Port {
  PointSet members;
  PointSet parent;  // the set D the port was computed for
  TypeIndex type;
};

// Representatives (smallest id) of the minimal mutual-reachability classes of
// D: D is inside tr(port(D)) and port members are pairwise unreachable.
Port port(const TypedSpace& space, const PointSet& d, TypeIndex p);

struct StraightnessViolation {
  PointIndex y;  // on track i
  PointIndex z;  // on track j > i, z in umin(y) but y not in umin(z)
  std::size_t i;
  std::size_t j;
};

struct LocalityViolation {
  PointIndex y;  // on track i
  PointIndex z;  // cl1-successor of y landing outside tracks i-1..i+1
  std::size_t i;
  std::size_t z_track;
};

struct StraightnessReport {
  bool straight = true;
  std::vector<StraightnessViolation> violations;
  // derived check: successors of a track-i point stay within one ring
  std::vector<LocalityViolation> locality_violations;
};

StraightnessReport is_straight(const TypedSpace& space, PointIndex x, TypeIndex p);

}  // namespace typedtopo
