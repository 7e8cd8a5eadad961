#include "doctest.h"

#include "fixtures.hpp"
#include "typedtopo/errors.hpp"
#include "typedtopo/reference.hpp"
#include "typedtopo/space.hpp"

using namespace typedtopo;

namespace {

PointSet ids_to_set(const TypedSpace& s, const std::vector<std::string>& ids) {
  PointSet out;
  for (const auto& id : ids) out.push_back(s.require_point(id));
  normalize(out);
  return out;
}

}  // namespace

TEST_CASE("metric builder: unit square with radius 1.01") {
  TypedSpace s = fixtures::x4(1.01);
  TypeIndex p = s.require_type("disk-1.01");
  // d((0,0),(1,1)) = sqrt 2 > 1.01, the two axis neighbors are inside
  CHECK(s.umin(s.require_point("a"), p) == ids_to_set(s, {"a", "b", "d"}));
  CHECK(validate_space(s).ok);
}

TEST_CASE("metric builder: singleton") {
  TypedSpace s = build_metric_space({{"only", {3, 4}}}, {Radius::decimal(1)});
  CHECK(s.umin(0, 0) == PointSet{0});
}

TEST_CASE("metric builder rejections") {
  CHECK_THROWS_AS(build_metric_space({{"a", {0, 0}}, {"a", {1, 0}}}, {Radius::decimal(1)}),
                  DataError);
  CHECK_THROWS_AS(
      build_metric_space({{"a", {0, 0}}}, {Radius::decimal(2), Radius::decimal(1)}),
      DataError);
  CHECK_THROWS_AS(build_metric_space({{"a", {0, 0}}, {"b", {0, 0}}}, {Radius::decimal(1)}),
                  DataError);
}

TEST_CASE("metric builder: monotone radii on the non-uniform eight points") {
  TypedSpace s = fixtures::remark8();
  TypeIndex p = s.require_type("disk-1.01");
  TypeIndex q = s.require_type("disk-3.01");
  CHECK(s.poset().leq(p, q));
  for (PointIndex x = 0; x < s.point_count(); ++x)
    CHECK(is_subset(s.umin(x, p), s.umin(x, q)));
}

TEST_CASE("relation builder: friends") {
  TypedSpace s = build_relation_space({"a", "b"}, {{"friends", {{"a", "b"}}}});
  TypeIndex p = s.require_type("friends");
  CHECK(s.umin(s.require_point("a"), p) == ids_to_set(s, {"a", "b"}));
  CHECK(s.umin(s.require_point("b"), p) == ids_to_set(s, {"b"}));
}

TEST_CASE("relation builder: empty relation is the identity") {
  TypedSpace s = build_relation_space({"a", "b", "c"}, {{"r", {}}});
  for (PointIndex x = 0; x < s.point_count(); ++x) CHECK(s.umin(x, 0) == PointSet{x});
}

TEST_CASE("relation builder: declared order checked against inclusion") {
  std::vector<std::string> ids = {"a", "b", "c"};
  RelationSpec small{"r1", {{"a", "b"}}};
  RelationSpec big{"r2", {{"a", "b"}, {"b", "c"}}};
  CHECK_NOTHROW(build_relation_space(ids, {small, big}, {{"r1", "r2"}}));
  RelationSpec other{"r2", {{"b", "c"}}};  // umin(a,r1) not inside umin(a,r2)
  CHECK_THROWS_AS(build_relation_space(ids, {small, other}, {{"r1", "r2"}}), DataError);
}

TEST_CASE("directed builder reproduces the half-disk table entries") {
  TypedSpace s = fixtures::x48_left();
  TypeIndex p = s.require_type("left-1");
  TypeIndex q = s.require_type("left-2");
  CHECK(s.umin(s.require_point("(1,4)"), p) == ids_to_set(s, {"(1,4)", "(0,4)", "(1,5)"}));
  CHECK(s.umin(s.require_point("(0,4)"), p) == ids_to_set(s, {"(0,4)"}));
  SUBCASE("containment between the radii, all points") {
    for (PointIndex x = 0; x < s.point_count(); ++x)
      CHECK(is_subset(s.umin(x, p), s.umin(x, q)));
  }
  SUBCASE("boundary included: distance exactly r is inside") {
    // (3,4)-(3,3) at distance 1
    CHECK(contains(s.umin(s.require_point("(3,4)"), p), s.require_point("(3,3)")));
  }
  SUBCASE("matches the serial reference kernel") {
    auto rows = reference::directed_neighborhoods(s.coords(), *s.grid(), Shape::Left,
                                                  Radius::decimal(1));
    for (PointIndex x = 0; x < s.point_count(); ++x) CHECK(rows[x] == s.umin(x, p));
  }
}

TEST_CASE("directed builder: point with nothing to its left") {
  TypedSpace s = build_directed_2d_space({{"a", {0, 0}}, {"b", {5, 0}}},
                                         {{Shape::Left, Radius::decimal(1)}});
  CHECK(s.umin(s.require_point("b"), 0) == PointSet{s.require_point("b")});
}

TEST_CASE("metric umin equals the brute-force disk") {
  fixtures::Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    TypedSpace s = fixtures::random_metric_space(rng, 10);
    for (TypeIndex t = 0; t < s.poset().size(); ++t) {
      auto rows = reference::metric_neighborhoods(s.coords(), *s.grid(),
                                                  *s.poset().label(t).radius);
      for (PointIndex x = 0; x < s.point_count(); ++x) CHECK(rows[x] == s.umin(x, t));
    }
  }
}

TEST_CASE("validate_space flags hand-built violations") {
  std::vector<std::string> ids = {"a", "b"};
  TypePoset poset({{"p", Shape::Relation, {}}, {"q", Shape::Relation, {}}}, {{0, 1}});
  SUBCASE("monotonicity") {
    std::vector<std::vector<PointSet>> umin = {{{0, 1}, {1}}, {{0}, {1}}};
    TypedSpace s = TypedSpace::from_raw(ids, std::nullopt, poset, umin);
    ValidationReport r = validate_space(s);
    REQUIRE_FALSE(r.ok);
    CHECK(r.violations.front().kind == Violation::Kind::Monotonicity);
    CHECK(r.violations.front().point == 0);
  }
  SUBCASE("center membership") {
    std::vector<std::vector<PointSet>> umin = {{{1}, {1}}, {{0, 1}, {1}}};
    TypedSpace s = TypedSpace::from_raw(ids, std::nullopt, poset, umin);
    ValidationReport r = validate_space(s);
    REQUIRE_FALSE(r.ok);
    CHECK(r.violations.front().kind == Violation::Kind::CenterMembership);
  }
}

TEST_CASE("symmetric typing") {
  SUBCASE("metric disks are symmetric") {
    TypedSpace s = fixtures::x4(1.2);
    CHECK(is_symmetrically_typed(s, 0).symmetric);
  }
  SUBCASE("left half-disks on the 48 points are not") {
    TypedSpace s = fixtures::x48_left();
    SymmetryReport r = is_symmetrically_typed(s, s.require_type("left-1"));
    REQUIRE_FALSE(r.symmetric);
    auto [x, y] = *r.witness;
    CHECK(contains(s.umin(x, s.require_type("left-1")), y));
    CHECK_FALSE(contains(s.umin(y, s.require_type("left-1")), x));
  }
  SUBCASE("a vertical line with a covering radius is symmetric") {
    TypedSpace s = build_directed_2d_space(
        {{"a", {3, 0}}, {"b", {3, 1}}, {"c", {3, 2}}}, {{Shape::Left, Radius::decimal(2)}});
    CHECK(is_symmetrically_typed(s, 0).symmetric);
  }
}

TEST_CASE("boundary epsilon") {
  SUBCASE("two points") {
    BoundaryEpsilon e = boundary_epsilon({{0, 0}, {2, 0}}, 1.0);
    CHECK(e.r1 == doctest::Approx(1.0));
    CHECK(e.r2 == doctest::Approx(2.0));
    CHECK(e.epsilon == doctest::Approx(1.0));
  }
  SUBCASE("degenerate vertical pair") {
    CHECK_THROWS_AS(boundary_epsilon({{0, 0}, {0, 1}}, 2.0), PreconditionError);
  }
  SUBCASE("strict forms reproduce the closed half disks on the 48 points") {
    auto pts = fixtures::x48_points();
    std::vector<Coord2> coords;
    for (auto& [id, c] : pts) coords.push_back(c);
    double r = 1.0;
    BoundaryEpsilon e = boundary_epsilon(coords, r);
    CHECK(e.epsilon > 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = 0; j < coords.size(); ++j) {
        double dx = coords[j].x - coords[i].x, dy = coords[j].y - coords[i].y;
        double d = std::sqrt(dx * dx + dy * dy);
        bool closed = d <= r && coords[j].x <= coords[i].x;
        bool strict = d < r + e.epsilon && coords[j].x < coords[i].x + e.epsilon;
        CHECK(closed == strict);
      }
  }
}

TEST_CASE("min pairwise gamma") {
  CHECK(min_pairwise_gamma({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == doctest::Approx(1.0));
  CHECK(min_pairwise_gamma({{0, 0}, {3, 4}}) == doctest::Approx(5.0));
  auto pts = fixtures::x48_points();
  std::vector<Coord2> coords;
  for (auto& [id, c] : pts) coords.push_back(c);
  CHECK(min_pairwise_gamma(coords) == doctest::Approx(1.0));
  CHECK_THROWS_AS(min_pairwise_gamma({{1, 1}, {1, 1}}), DataError);
  CHECK_THROWS_AS(min_pairwise_gamma({{1, 1}}), DataError);
}

TEST_CASE("exact boundary decisions with an irrational radius") {
  // open disk of radius sqrt(2): the diagonal neighbor sits exactly on the
  // boundary and must stay out
  TypedSpace s = fixtures::x5(Radius::sqrt_of(2.0));
  TypeIndex p = 0;
  PointIndex e = s.require_point("e");  // (2,0)
  CHECK(s.umin(e, p) == ids_to_set(s, {"e", "d"}));
  PointIndex b = s.require_point("b");  // (0,1)
  CHECK(s.umin(b, p) == ids_to_set(s, {"b", "a", "c"}));
}
