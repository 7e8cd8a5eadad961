#include "fixtures.hpp"

#include <set>

#include "typedtopo/io.hpp"

#ifndef TT_SOURCE_DIR
#define TT_SOURCE_DIR "."
#endif

namespace typedtopo::fixtures {

std::string fixture_path(const std::string& name) {
  return std::string(TT_SOURCE_DIR) + "/fixtures/paper/" + name;
}

namespace {

std::vector<std::pair<std::string, Coord2>> square4() {
  return {{"a", {0, 0}}, {"b", {0, 1}}, {"c", {1, 1}}, {"d", {1, 0}}};
}

}  // namespace

TypedSpace x4(double radius) { return build_metric_space(square4(), {Radius::decimal(radius)}); }

TypedSpace x5(const Radius& radius) {
  auto pts = square4();
  pts.push_back({"e", {2, 0}});
  return build_metric_space(pts, {radius});
}

TypedSpace remark8() {
  std::vector<std::pair<std::string, Coord2>> pts = {
      {"(0,0)", {0, 0}}, {"(1,0)", {1, 0}}, {"(2,0)", {2, 0}}, {"(3,0)", {3, 0}},
      {"(4,0)", {4, 0}}, {"(1,1)", {1, 1}}, {"(1,2)", {1, 2}}, {"(0,2)", {0, 2}}};
  return build_metric_space(pts, {Radius::decimal(1.01), Radius::decimal(3.01)});
}

std::vector<std::pair<std::string, Coord2>> x48_points() {
  return read_points_csv_file(fixture_path("x48.csv"));
}

TypedSpace x48_left() {
  return build_directed_2d_space(x48_points(), {{Shape::Left, Radius::decimal(1)},
                                                {Shape::Left, Radius::decimal(2)}});
}

TypedSpace x48_upleft() {
  return build_directed_2d_space(x48_points(), {{Shape::UpLeft, Radius::decimal(1)},
                                                {Shape::UpLeft, Radius::decimal(2)}});
}

TypedSpace f1a() {
  std::vector<std::string> ids = {"x", "y1", "y2", "z", "x1", "x2", "x3", "x4", "w1", "w2"};
  RelationSpec p{"p",
                 {{"y1", "x"},
                  {"y2", "y1"},
                  {"z", "y2"},
                  {"z", "x4"},
                  {"x1", "x"},
                  {"x2", "x1"},
                  {"x3", "x2"},
                  {"x4", "x3"},
                  {"w2", "w1"}}};
  return build_relation_space(ids, {p});
}

TypedSpace f1b() {
  std::vector<std::string> ids = {"x",   "y",   "x1",  "y1",  "w1",  "w2",  "w3",
                                  "wp1", "wp2", "xp1", "xp2", "xp3", "xp4", "xp5",
                                  "xp6", "xp7", "z",   "zp",  "zp1", "zp2", "zp3"};
  RelationSpec p{"p",
                 {// y-side
                  {"y1", "y"},
                  {"w1", "y"},
                  {"z", "y1"},
                  {"w2", "w1"},
                  {"wp1", "w1"},
                  {"wp2", "wp1"},
                  {"w3", "wp2"},
                  {"zp", "w3"},
                  // x-side
                  {"x1", "x"},
                  {"z", "x1"},
                  {"xp1", "x"},
                  {"xp2", "xp1"},
                  {"xp3", "xp2"},
                  {"xp4", "xp3"},
                  {"xp5", "xp4"},
                  {"xp6", "xp5"},
                  {"xp7", "xp6"},
                  {"zp", "xp7"},
                  // shared tail after zp
                  {"zp1", "zp"},
                  {"zp2", "zp1"},
                  {"zp3", "zp2"}}};
  return build_relation_space(ids, {p});
}

namespace {

struct RelationBuilder {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> p_pairs;
  std::vector<std::pair<std::string, std::string>> q_extra;

  // arrow a -> b: b joins after a, i.e. a belongs to umin(b)
  void p_arrow(const std::string& a, const std::string& b) { p_pairs.emplace_back(b, a); }
  void q_arrow(const std::string& a, const std::string& b) { q_extra.emplace_back(b, a); }
  void p_chain(const std::vector<std::string>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) p_arrow(chain[i], chain[i + 1]);
  }
  void q_chain(const std::vector<std::string>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) q_arrow(chain[i], chain[i + 1]);
  }

  TypedSpace build() const {
    auto q_pairs = p_pairs;  // q refines p so that p <= q validates
    q_pairs.insert(q_pairs.end(), q_extra.begin(), q_extra.end());
    return build_relation_space(ids, {{"p", p_pairs}, {"q", q_pairs}}, {{"p", "q"}});
  }
};

}  // namespace

TypedSpace f3a() {
  RelationBuilder b;
  b.ids = {"(1,6)", "(2,6)",  "(3,4)", "(3,6)",  "(4,6)",  "(5,2)",  "(5,3)",  "(5,4)",
           "(5,5)", "(5,6)",  "(5,8)", "(5,9)",  "(5,10)", "(6,6)",  "(7,6)",  "(8,6)",
           "(8,8)", "(9,6)",  "(2,3)", "(9,8)",  "(9,10)", "(10,8)", "(10,9)", "(10,10)"};
  // p: the cluster of x=(5,6) runs right and holds the two-way column stub
  b.p_arrow("(5,6)", "(5,5)");
  b.p_arrow("(5,5)", "(5,6)");
  b.p_arrow("(5,5)", "(5,4)");
  b.p_arrow("(5,4)", "(5,5)");
  b.p_chain({"(5,2)", "(5,3)", "(5,4)"});
  b.p_chain({"(5,6)", "(6,6)", "(7,6)", "(8,6)", "(9,6)"});
  b.p_chain({"(1,6)", "(2,6)", "(3,6)", "(4,6)"});
  b.p_chain({"(5,10)", "(5,9)", "(5,8)"});
  // q: radius-two flavored shortcuts
  b.q_chain({"(5,6)", "(3,6)"});
  b.q_chain({"(5,6)", "(7,6)"});
  b.q_chain({"(5,6)", "(5,4)"});
  b.q_chain({"(5,6)", "(4,6)"});
  b.q_chain({"(5,6)", "(5,8)"});
  b.q_arrow("(4,6)", "(2,6)");
  b.q_arrow("(3,6)", "(1,6)");
  b.q_arrow("(7,6)", "(9,6)");
  b.q_arrow("(5,5)", "(5,3)");
  b.q_arrow("(5,4)", "(5,2)");
  b.q_arrow("(3,6)", "(3,4)");
  b.q_arrow("(5,8)", "(5,9)");
  b.q_arrow("(5,8)", "(5,10)");
  b.q_arrow("(7,6)", "(8,8)");
  // the inversion: (4,6) is one q-step from (1,6) although three p-steps away
  b.q_arrow("(1,6)", "(4,6)");
  // the outer band
  b.q_arrow("(3,4)", "(2,3)");
  b.q_arrow("(8,8)", "(9,8)");
  b.q_arrow("(8,8)", "(10,8)");
  b.q_arrow("(9,8)", "(10,9)");
  b.q_arrow("(9,8)", "(9,10)");
  b.q_arrow("(9,10)", "(10,10)");
  return b.build();
}

TypedSpace f3b() {
  RelationBuilder b;
  b.ids = {"(1,6)",  "(2,6)",  "(3,4)",  "(3,6)",  "(4,6)",  "(5,2)",  "(5,3)",
           "(5,4)",  "(5,5)",  "(5,6)",  "(5,8)",  "(5,9)",  "(5,10)", "(6,6)",
           "(7,6)",  "(8,6)",  "(9,6)",  "(2,3)",  "(9,10)", "(10,10)", "(11,10)",
           "(11,11)", "(12,11)", "(13,1)", "(12,1)", "(11,1)", "(10,1)", "(10,2)",
           "(10,3)", "(11,3)", "(12,3)", "(12,4)", "(13,4)"};
  // p: four rays out of x=(5,6), two parallel lines, two far chains
  b.p_chain({"(5,6)", "(6,6)", "(7,6)", "(8,6)", "(9,6)"});
  b.p_chain({"(5,6)", "(4,6)", "(3,6)", "(2,6)", "(1,6)"});
  b.p_chain({"(5,6)", "(5,5)", "(5,4)", "(5,3)", "(5,2)"});
  b.p_chain({"(5,8)", "(5,9)", "(5,10)"});
  b.p_chain({"(9,10)", "(10,10)", "(11,10)", "(11,11)"});
  b.p_chain({"(10,3)", "(11,3)", "(12,3)", "(12,4)", "(13,4)"});
  b.p_chain({"(13,1)", "(12,1)", "(11,1)", "(10,1)", "(10,2)"});
  // q ring 1
  b.q_chain({"(5,6)", "(3,6)"});
  b.q_chain({"(5,6)", "(7,6)"});
  b.q_chain({"(5,6)", "(5,4)"});
  b.q_chain({"(5,6)", "(5,8)"});
  // q ring 2
  b.q_arrow("(3,6)", "(1,6)");
  b.q_arrow("(7,6)", "(9,6)");
  b.q_arrow("(5,4)", "(5,2)");
  b.q_arrow("(3,6)", "(3,4)");
  b.q_arrow("(5,8)", "(5,10)");
  // q ring 3: exactly the two far entry points
  b.q_arrow("(9,6)", "(9,10)");
  b.q_arrow("(9,6)", "(10,3)");
  // onward rings
  b.q_arrow("(10,3)", "(10,2)");
  b.q_arrow("(11,3)", "(2,3)");
  b.q_chain({"(10,2)", "(10,1)", "(11,1)", "(12,1)", "(13,1)"});
  b.q_arrow("(11,11)", "(12,11)");
  return b.build();
}

TypedSpace two_cluster() {
  // d0 -> a1 -> a2 -> m, d1 -> m: tr(d1) meets Track_3(d0) at its own Track_1
  std::vector<std::string> ids = {"d0", "a1", "a2", "m", "d1"};
  RelationSpec p{"p", {{"a1", "d0"}, {"a2", "a1"}, {"m", "a2"}, {"m", "d1"}}};
  return build_relation_space(ids, {p});
}

// --- random generators --------------------------------------------------------

TypedSpace random_relation_space(Rng& rng, int max_points, int max_types) {
  std::uniform_int_distribution<int> npts(1, max_points);
  std::uniform_int_distribution<int> ntypes(1, max_types);
  const int n = npts(rng);
  const int t = ntypes(rng);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("n" + std::to_string(i));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double density = 0.05 + 0.3 * unit(rng);
  std::vector<RelationSpec> relations;
  std::vector<std::set<std::pair<int, int>>> pair_sets(t);
  for (int lvl = 0; lvl < t; ++lvl) {
    if (lvl > 0) pair_sets[lvl] = pair_sets[lvl - 1];  // union upward
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && unit(rng) < density) pair_sets[lvl].insert({a, b});
    RelationSpec spec;
    spec.label = "t" + std::to_string(lvl);
    for (auto [a, b] : pair_sets[lvl]) spec.pairs.emplace_back(ids[a], ids[b]);
    relations.push_back(std::move(spec));
  }
  std::vector<std::pair<std::string, std::string>> order;
  bool chained = unit(rng) < 0.8;
  if (chained)
    for (int lvl = 0; lvl + 1 < t; ++lvl)
      order.emplace_back("t" + std::to_string(lvl), "t" + std::to_string(lvl + 1));
  return build_relation_space(ids, relations, order);
}

TypedSpace random_metric_space(Rng& rng, int max_points) {
  std::uniform_int_distribution<int> npts(1, max_points);
  const int n = npts(rng);
  std::uniform_int_distribution<int> coord(0, 7);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<std::string, Coord2>> pts;
  while (static_cast<int>(pts.size()) < n) {
    std::pair<int, int> c{coord(rng), coord(rng)};
    if (!used.insert(c).second) continue;
    pts.push_back({"m" + std::to_string(pts.size()),
                   {static_cast<double>(c.first), static_cast<double>(c.second)}});
  }
  std::uniform_int_distribution<int> nradii(1, 2);
  std::uniform_real_distribution<double> rad(0.8, 4.0);
  int k = nradii(rng);
  std::vector<double> rs;
  for (int i = 0; i < k; ++i) rs.push_back(std::round(rad(rng) * 100.0) / 100.0);
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::vector<Radius> radii;
  for (double r : rs) radii.push_back(Radius::decimal(r));
  return build_metric_space(pts, radii);
}

PointSet random_subset(Rng& rng, const TypedSpace& space, bool nonempty) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointSet out;
  for (PointIndex i = 0; i < space.point_count(); ++i)
    if (unit(rng) < 0.4) out.push_back(i);
  if (out.empty() && nonempty && space.point_count() > 0) {
    std::uniform_int_distribution<PointIndex> pick(0, space.point_count() - 1);
    out.push_back(pick(rng));
  }
  return out;
}

}  // namespace typedtopo::fixtures
