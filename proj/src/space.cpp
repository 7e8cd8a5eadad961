#include "typedtopo/space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "typedtopo/errors.hpp"

namespace typedtopo {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Disk: return "disk";
    case Shape::Left: return "left";
    case Shape::Right: return "right";
    case Shape::UpLeft: return "up-left";
    case Shape::UpRight: return "up-right";
    case Shape::Relation: return "relation";
  }
  return "?";
}

std::optional<Shape> shape_from_name(const std::string& name) {
  for (Shape s : {Shape::Disk, Shape::Left, Shape::Right, Shape::UpLeft, Shape::UpRight,
                  Shape::Relation})
    if (name == shape_name(s)) return s;
  return std::nullopt;
}

std::string make_type_label(Shape shape, const Radius& r) {
  std::string rs = r.sqrt_form ? "sqrt(" + format_coord(r.value_sq) + ")"
                               : format_coord(r.value);
  return std::string(shape_name(shape)) + "-" + rs;
}

// --- TypePoset ---------------------------------------------------------------

TypePoset::TypePoset(std::vector<TypeLabel> labels,
                     std::vector<std::pair<TypeIndex, TypeIndex>> order)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i].label == labels_[j].label)
        throw DataError("duplicate type label: " + labels_[i].label);

  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) closure_[i][i] = true;
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw DataError("type order references unknown type");
    closure_[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k][j]) closure_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && closure_[i][j] && closure_[j][i])
        throw DataError("type order has a cycle through " + labels_[i].label);

  // transitive reduction of the closure
  for (TypeIndex i = 0; i < n; ++i)
    for (TypeIndex j = 0; j < n; ++j) {
      if (i == j || !closure_[i][j]) continue;
      bool implied = false;
      for (TypeIndex k = 0; k < n && !implied; ++k)
        if (k != i && k != j && closure_[i][k] && closure_[k][j]) implied = true;
      if (!implied) reduction_.emplace_back(i, j);
    }
}

std::optional<TypeIndex> TypePoset::find(const std::string& label) const {
  for (TypeIndex t = 0; t < labels_.size(); ++t)
    if (labels_[t].label == label) return t;
  return std::nullopt;
}

bool TypePoset::leq(TypeIndex a, TypeIndex b) const { return closure_[a][b]; }

// --- TypedSpace --------------------------------------------------------------

TypedSpace TypedSpace::from_raw(std::vector<std::string> ids,
                                std::optional<std::vector<Coord2>> coords, TypePoset poset,
                                std::vector<std::vector<PointSet>> umin,
                                std::optional<GeomGrid> grid) {
  const std::size_t n = ids.size();
  if (!std::is_sorted(ids.begin(), ids.end())) throw DataError("point ids must be sorted");
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw DataError("duplicate point id");
  if (coords && coords->size() != n) throw DataError("coords/ids size mismatch");
  if (umin.size() != poset.size()) throw DataError("umin table/type count mismatch");
  for (auto& per_type : umin) {
    if (per_type.size() != n) throw DataError("umin table/point count mismatch");
    for (auto& row : per_type) {
      normalize(row);
      if (!row.empty() && row.back() >= n) throw DataError("umin member out of range");
    }
  }
  TypedSpace s;
  s.ids_ = std::move(ids);
  s.coords_ = std::move(coords);
  s.poset_ = std::move(poset);
  s.umin_ = std::move(umin);
  s.grid_ = std::move(grid);
  s.rev_.resize(s.umin_.size());
  for (TypeIndex p = 0; p < s.umin_.size(); ++p) s.rebuild_rev(p);
  return s;
}

void TypedSpace::rebuild_rev(TypeIndex p) {
  const std::size_t n = ids_.size();
  rev_[p].assign(n, {});
  for (PointIndex x = 0; x < n; ++x)
    for (PointIndex a : umin_[p][x]) rev_[p][a].push_back(x);
  // push order is ascending in x already
}

std::optional<PointIndex> TypedSpace::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) return static_cast<PointIndex>(it - ids_.begin());
  return std::nullopt;
}

std::optional<PointIndex> TypedSpace::find_at(double x, double y) const {
  if (!coords_) return std::nullopt;
  for (PointIndex i = 0; i < coords_->size(); ++i) {
    const Coord2& c = (*coords_)[i];
    if (c.x == x && c.y == y) return i;
  }
  return std::nullopt;
}

TypeIndex TypedSpace::require_type(const std::string& label) const {
  auto t = find_type(label);
  if (!t) throw DataError("unknown type: " + label);
  return *t;
}

PointIndex TypedSpace::require_point(const std::string& id) const {
  auto x = find(id);
  if (!x) throw DataError("unknown point: " + id);
  return *x;
}

PointSet TypedSpace::whole() const {
  PointSet all(point_count());
  for (PointIndex i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

TypedSpace TypedSpace::with_removed(TypeIndex p, PointIndex x, const PointSet& members) const {
  return with_removed_batch(p, {{x, members}});
}

TypedSpace TypedSpace::with_removed_batch(
    TypeIndex p, const std::vector<std::pair<PointIndex, PointSet>>& edits) const {
  TypedSpace s = *this;
  for (const auto& [x, members] : edits)
    s.umin_[p][x] = set_difference(s.umin_[p][x], members);
  s.rebuild_rev(p);
  s.single_type_view_ = p;
  return s;
}

std::uint64_t TypedSpace::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  auto mix_str = [&](const std::string& s) {
    mix(s.size());
    for (char c : s) mix(static_cast<unsigned char>(c));
  };
  mix(ids_.size());
  for (const auto& id : ids_) mix_str(id);
  mix(umin_.size());
  for (TypeIndex p = 0; p < umin_.size(); ++p) {
    mix_str(poset_.label(p).label);
    for (const auto& row : umin_[p]) {
      mix(row.size());
      for (PointIndex m : row) mix(m);
    }
  }
  for (auto [a, b] : poset_.reduction()) {
    mix(a);
    mix(b);
  }
  return h;
}

// --- validation --------------------------------------------------------------

ValidationReport validate_space(const TypedSpace& space) {
  ValidationReport report;
  const std::size_t n = space.point_count();
  const std::size_t t = space.poset().size();
  for (TypeIndex p = 0; p < t; ++p)
    for (PointIndex x = 0; x < n; ++x)
      if (!contains(space.umin(x, p), x))
        report.violations.push_back(
            {Violation::Kind::CenterMembership, x, p, p, x});
  for (TypeIndex p = 0; p < t; ++p)
    for (TypeIndex q = 0; q < t; ++q) {
      if (p == q || !space.poset().leq(p, q)) continue;
      if (space.single_type_view() &&
          (p == *space.single_type_view() || q == *space.single_type_view()))
        continue;
      for (PointIndex x = 0; x < n; ++x) {
        if (is_subset(space.umin(x, p), space.umin(x, q))) continue;
        PointSet extra = set_difference(space.umin(x, p), space.umin(x, q));
        report.violations.push_back({Violation::Kind::Monotonicity, x, p, q, extra.front()});
      }
    }
  report.ok = report.violations.empty();
  return report;
}

// --- builders ----------------------------------------------------------------

namespace {

struct SortedPoints {
  std::vector<std::string> ids;
  std::vector<Coord2> coords;
};

SortedPoints sort_points(const std::vector<std::pair<std::string, Coord2>>& points) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a].first < points[b].first; });
  SortedPoints out;
  out.ids.reserve(points.size());
  out.coords.reserve(points.size());
  for (std::size_t i : order) {
    out.ids.push_back(points[i].first);
    out.coords.push_back(points[i].second);
  }
  for (std::size_t i = 1; i < out.ids.size(); ++i)
    if (out.ids[i] == out.ids[i - 1]) throw DataError("duplicate point id: " + out.ids[i]);
  for (const Coord2& c : out.coords)
    if (!std::isfinite(c.x) || !std::isfinite(c.y))
      throw DataError("coordinates must be finite");
  return out;
}

void check_no_duplicate_coords(const GeomGrid& grid, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (grid.same_coord(i, j)) throw DataError("duplicate coordinates");
}

}  // namespace

TypedSpace build_metric_space(const std::vector<std::pair<std::string, Coord2>>& points,
                              const std::vector<Radius>& radii) {
  if (radii.empty()) throw DataError("build_metric_space: no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i].value > 0)) throw DataError("radii must be positive");
    if (i > 0 && !(radii[i - 1].value < radii[i].value))
      throw DataError("radii must be strictly ascending");
  }
  SortedPoints sp = sort_points(points);
  const std::size_t n = sp.ids.size();
  GeomGrid grid = GeomGrid::infer(sp.coords, radii);
  check_no_duplicate_coords(grid, n);

  std::vector<TypeLabel> labels;
  std::vector<std::pair<TypeIndex, TypeIndex>> order;
  for (std::size_t t = 0; t < radii.size(); ++t) {
    labels.push_back({make_type_label(Shape::Disk, radii[t]), Shape::Disk, radii[t]});
    if (t > 0) order.emplace_back(static_cast<TypeIndex>(t - 1), static_cast<TypeIndex>(t));
  }

  std::vector<std::vector<PointSet>> umin(radii.size(), std::vector<PointSet>(n));
  for (std::size_t t = 0; t < radii.size(); ++t) {
    const Radius& r = radii[t];
    auto& rows = umin[t];
#pragma omp parallel for schedule(static)
    for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
      PointSet row;
      for (std::size_t y = 0; y < n; ++y)
        if (y == static_cast<std::size_t>(xi) || grid.within_open(xi, y, r))
          row.push_back(static_cast<PointIndex>(y));
      rows[xi] = std::move(row);
    }
  }
  return TypedSpace::from_raw(std::move(sp.ids), std::move(sp.coords),
                              TypePoset(std::move(labels), std::move(order)), std::move(umin),
                              std::move(grid));
}

TypedSpace build_directed_2d_space(const std::vector<std::pair<std::string, Coord2>>& points,
                                   const std::vector<DirectedShapeSpec>& specs) {
  if (specs.empty()) throw DataError("build_directed_2d_space: no shape specs");
  for (const auto& s : specs) {
    if (s.shape == Shape::Disk || s.shape == Shape::Relation)
      throw DataError("build_directed_2d_space: unknown shape tag");
    if (!(s.r.value > 0)) throw DataError("radii must be positive");
  }
  // same-shape radii strictly ascending
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (specs[i].shape == specs[j].shape && !(specs[i].r.value < specs[j].r.value))
        throw DataError("same-shape radii must be strictly ascending");

  SortedPoints sp = sort_points(points);
  const std::size_t n = sp.ids.size();
  std::vector<Radius> radii;
  for (const auto& s : specs) radii.push_back(s.r);
  GeomGrid grid = GeomGrid::infer(sp.coords, radii);
  check_no_duplicate_coords(grid, n);

  std::vector<TypeLabel> labels;
  std::vector<std::pair<TypeIndex, TypeIndex>> order;
  for (std::size_t t = 0; t < specs.size(); ++t) {
    labels.push_back({make_type_label(specs[t].shape, specs[t].r), specs[t].shape, specs[t].r});
    for (std::size_t u = 0; u < t; ++u)
      if (specs[u].shape == specs[t].shape)
        order.emplace_back(static_cast<TypeIndex>(u), static_cast<TypeIndex>(t));
  }

  std::vector<std::vector<PointSet>> umin(specs.size(), std::vector<PointSet>(n));
  for (std::size_t t = 0; t < specs.size(); ++t) {
    const DirectedShapeSpec& spec = specs[t];
    auto& rows = umin[t];
#pragma omp parallel for schedule(static)
    for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
      PointSet row;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == static_cast<std::size_t>(xi)) {
          row.push_back(static_cast<PointIndex>(y));
          continue;
        }
        if (!grid.within_closed(xi, y, spec.r)) continue;
        bool in = false;
        switch (spec.shape) {
          case Shape::Left: in = grid.x_leq(y, xi); break;
          case Shape::Right: in = grid.x_leq(xi, y); break;
          case Shape::UpLeft: in = grid.x_leq(y, xi) && grid.y_geq(y, xi); break;
          case Shape::UpRight: in = grid.x_leq(xi, y) && grid.y_geq(y, xi); break;
          default: break;
        }
        if (in) row.push_back(static_cast<PointIndex>(y));
      }
      rows[xi] = std::move(row);
    }
  }
  return TypedSpace::from_raw(std::move(sp.ids), std::move(sp.coords),
                              TypePoset(std::move(labels), std::move(order)), std::move(umin),
                              std::move(grid));
}

TypedSpace build_relation_space(const std::vector<std::string>& ids,
                                const std::vector<RelationSpec>& relations,
                                const std::vector<std::pair<std::string, std::string>>&
                                    declared_order) {
  std::vector<std::string> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
    throw DataError("duplicate point id");
  auto index_of = [&](const std::string& id) -> PointIndex {
    auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
    if (it == sorted_ids.end() || *it != id) throw DataError("relation references unknown point: " + id);
    return static_cast<PointIndex>(it - sorted_ids.begin());
  };

  std::vector<TypeLabel> labels;
  for (const auto& rel : relations) labels.push_back({rel.label, Shape::Relation, std::nullopt});

  std::vector<std::pair<TypeIndex, TypeIndex>> order;
  TypePoset name_lookup(labels, {});
  for (const auto& [a, b] : declared_order) {
    auto ta = name_lookup.find(a);
    auto tb = name_lookup.find(b);
    if (!ta || !tb) throw DataError("declared order references unknown relation label");
    order.emplace_back(*ta, *tb);
  }
  TypePoset poset(labels, order);

  const std::size_t n = sorted_ids.size();
  std::vector<std::vector<PointSet>> umin(relations.size(), std::vector<PointSet>(n));
  for (std::size_t t = 0; t < relations.size(); ++t) {
    for (PointIndex x = 0; x < n; ++x) umin[t][x].push_back(x);
    for (const auto& [a, b] : relations[t].pairs)
      umin[t][index_of(a)].push_back(index_of(b));
    for (auto& row : umin[t]) normalize(row);
  }

  TypedSpace space = TypedSpace::from_raw(std::move(sorted_ids), std::nullopt, std::move(poset),
                                          std::move(umin));
  ValidationReport report = validate_space(space);
  if (!report.ok) {
    const Violation& v = report.violations.front();
    throw DataError("declared order violates neighborhood inclusion: umin(" +
                    space.id(v.point) + "," + space.poset().label(v.type_a).label +
                    ") contains " + space.id(v.offending) + " missing from type " +
                    space.poset().label(v.type_b).label);
  }
  return space;
}

// --- symmetry ----------------------------------------------------------------

SymmetryReport is_symmetrically_typed(const TypedSpace& space, TypeIndex p) {
  const std::size_t n = space.point_count();
  // deterministic witness: smallest (x, y) in index order
  std::uint64_t best = UINT64_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long x = 0; x < static_cast<long long>(n); ++x) {
    for (PointIndex y : space.umin(static_cast<PointIndex>(x), p)) {
      if (y == static_cast<PointIndex>(x)) continue;
      if (!contains(space.umin(y, p), static_cast<PointIndex>(x))) {
        std::uint64_t enc = (static_cast<std::uint64_t>(x) << 32) | y;
        best = std::min(best, enc);
      }
    }
  }
  SymmetryReport report;
  if (best != UINT64_MAX) {
    report.symmetric = false;
    report.witness = {static_cast<PointIndex>(best >> 32),
                      static_cast<PointIndex>(best & 0xffffffffu)};
  }
  return report;
}

}  // namespace typedtopo
