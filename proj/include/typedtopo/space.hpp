#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "typedtopo/geometry.hpp"
#include "typedtopo/pointset.hpp"

namespace typedtopo {

enum class Shape { Disk, Left, Right, UpLeft, UpRight, Relation };

const char* shape_name(Shape s);
std::optional<Shape> shape_from_name(const std::string& name);

struct TypeLabel {
  std::string label;
  Shape shape = Shape::Relation;
  std::optional<Radius> radius;  // present for geometric shapes
};

// Canonical label for a geometric type, e.g. "left-1", "disk-1.01".
std::string make_type_label(Shape shape, const Radius& r);

// Partially ordered set of type labels. The order is held as a transitive
// reduction; leq() queries the reflexive-transitive closure.
class TypePoset {
 public:
  TypePoset() = default;
  TypePoset(std::vector<TypeLabel> labels,
            std::vector<std::pair<TypeIndex, TypeIndex>> order);

  std::size_t size() const { return labels_.size(); }
  const TypeLabel& label(TypeIndex t) const { return labels_[t]; }
  std::optional<TypeIndex> find(const std::string& label) const;
  bool leq(TypeIndex a, TypeIndex b) const;
  const std::vector<std::pair<TypeIndex, TypeIndex>>& reduction() const { return reduction_; }

 private:
  std::vector<TypeLabel> labels_;
  std::vector<std::pair<TypeIndex, TypeIndex>> reduction_;
  std::vector<std::vector<bool>> closure_;  // reflexive-transitive
};

// A finite typed topological space, represented by its least neighborhoods:
// for every point x and type p, umin(x,p) is the smallest p-neighborhood of x.
// Values are immutable; the surgery operations return edited copies.
class TypedSpace {
 public:
  TypedSpace() = default;

  // Unchecked assembly; ids must be sorted and unique, umin indexed
  // [type][point] with in-range sorted member lists.
  static TypedSpace from_raw(std::vector<std::string> ids,
                             std::optional<std::vector<Coord2>> coords, TypePoset poset,
                             std::vector<std::vector<PointSet>> umin,
                             std::optional<GeomGrid> grid = std::nullopt);

  std::size_t point_count() const { return ids_.size(); }
  const std::string& id(PointIndex x) const { return ids_[x]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<PointIndex> find(const std::string& id) const;
  std::optional<PointIndex> find_at(double x, double y) const;

  bool has_coords() const { return coords_.has_value(); }
  const Coord2& coord(PointIndex x) const { return (*coords_)[x]; }
  const std::vector<Coord2>& coords() const { return *coords_; }
  const std::optional<GeomGrid>& grid() const { return grid_; }

  const TypePoset& poset() const { return poset_; }
  std::optional<TypeIndex> find_type(const std::string& label) const { return poset_.find(label); }
  TypeIndex require_type(const std::string& label) const;
  PointIndex require_point(const std::string& id) const;

  const PointSet& umin(PointIndex x, TypeIndex p) const { return umin_[p][x]; }
  // reverse index: {x : a in umin(x,p)}
  const PointSet& rev(PointIndex a, TypeIndex p) const { return rev_[p][a]; }

  PointSet whole() const;

  // Copy with members removed from umin(x,p); marks the single-type view.
  TypedSpace with_removed(TypeIndex p, PointIndex x, const PointSet& members) const;
  TypedSpace with_removed_batch(TypeIndex p,
                                const std::vector<std::pair<PointIndex, PointSet>>& edits) const;

  // Set when cuts/surgeries have edited one type's neighborhoods; cross-type
  // monotonicity involving that type is no longer promised.
  std::optional<TypeIndex> single_type_view() const { return single_type_view_; }

  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> ids_;
  std::optional<std::vector<Coord2>> coords_;
  TypePoset poset_;
  std::vector<std::vector<PointSet>> umin_;  // [type][point]
  std::vector<std::vector<PointSet>> rev_;   // [type][point]
  std::optional<GeomGrid> grid_;
  std::optional<TypeIndex> single_type_view_;

  void rebuild_rev(TypeIndex p);
};

struct Violation {
  enum class Kind { CenterMembership, Monotonicity };
  Kind kind;
  PointIndex point;
  TypeIndex type_a;
  TypeIndex type_b;      // the larger type for monotonicity violations
  PointIndex offending;  // member of umin(point,type_a) missing from umin(point,type_b)
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks center membership and poset monotonicity of the least neighborhoods.
// On a single-type view, monotonicity pairs involving the edited type are
// skipped.
ValidationReport validate_space(const TypedSpace& space);

// --- builders ---------------------------------------------------------------

// Open metric disks: umin(x, r) = {y : d(x,y) < r} + {x}; one linearly
// ordered type per radius.
TypedSpace build_metric_space(const std::vector<std::pair<std::string, Coord2>>& points,
                              const std::vector<Radius>& radii);

struct DirectedShapeSpec {
  Shape shape;  // Left, Right, UpLeft or UpRight
  Radius r;
};

// Closed half/quarter disk neighborhoods; same-shape types ordered by radius,
// distinct shapes incomparable.
TypedSpace build_directed_2d_space(const std::vector<std::pair<std::string, Coord2>>& points,
                                   const std::vector<DirectedShapeSpec>& specs);

// umin(x, p) = {y : (x,y) in relation p} + {x}. A supplied order must respect
// neighborhood inclusion or the build is rejected with a witness.
struct RelationSpec {
  std::string label;
  std::vector<std::pair<std::string, std::string>> pairs;
};

TypedSpace build_relation_space(const std::vector<std::string>& ids,
                                const std::vector<RelationSpec>& relations,
                                const std::vector<std::pair<std::string, std::string>>&
                                    declared_order = {});

// --- point-wise analyses ----------------------------------------------------

struct SymmetryReport {
  bool symmetric = true;
  // y in umin(x,p) but x not in umin(y,p)
  std::optional<std::pair<PointIndex, PointIndex>> witness;
};

SymmetryReport is_symmetrically_typed(const TypedSpace& space, TypeIndex p);

}  // namespace typedtopo
