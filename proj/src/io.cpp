#include "typedtopo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "typedtopo/errors.hpp"

namespace typedtopo {

// --- CSV ---------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !std::isfinite(v)) throw DataError("");
    return v;
  } catch (...) {
    throw DataError(std::string("invalid ") + what + ": '" + s + "'");
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<std::pair<std::string, Coord2>> read_points_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty input file");
  std::vector<std::string> header = split_csv_line(line);
  for (auto& h : header) h = trim(h);
  int id_col = -1, x_col = -1, y_col = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == "id") id_col = i;
    else if (header[i] == "x") x_col = i;
    else if (header[i] == "y") y_col = i;
  }
  if (x_col < 0 || y_col < 0) throw DataError("points CSV needs an 'id,x,y' or 'x,y' header");

  std::vector<std::pair<std::string, Coord2>> out;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    auto field = [&](int col) -> std::string {
      if (col < 0 || col >= static_cast<int>(fields.size()))
        throw DataError("points CSV row " + std::to_string(row) + " is short");
      return trim(fields[col]);
    };
    std::string id = id_col >= 0 && !field(id_col).empty() ? field(id_col)
                                                           : "p" + std::to_string(row);
    Coord2 c{parse_double(field(x_col), "x coordinate"), parse_double(field(y_col), "y coordinate")};
    out.emplace_back(std::move(id), c);
    ++row;
  }
  if (out.empty()) throw DataError("points CSV has no data rows");
  return out;
}

std::vector<std::pair<std::string, Coord2>> read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_points_csv(in);
}

void write_points_csv(std::ostream& out, const TypedSpace& space) {
  out << "id,x,y\n";
  for (PointIndex i = 0; i < space.point_count(); ++i) {
    const Coord2& c = space.coord(i);
    out << csv_quote(space.id(i)) << "," << format_coord(c.x) << "," << format_coord(c.y)
        << "\n";
  }
}

// --- JSON --------------------------------------------------------------------

namespace {

Json ids_json(const TypedSpace& space, const PointSet& s) {
  Json arr = Json::array();
  for (PointIndex x : s) arr.push_back(space.id(x));
  return arr;
}

PointSet ids_from_json(const TypedSpace& space, const Json& arr) {
  PointSet out;
  for (const auto& v : arr) out.push_back(space.require_point(v.get<std::string>()));
  normalize(out);
  return out;
}

}  // namespace

Json space_to_json(const TypedSpace& space) {
  Json j;
  j["points"] = Json::array();
  for (PointIndex i = 0; i < space.point_count(); ++i) {
    Json pt;
    pt["id"] = space.id(i);
    if (space.has_coords()) {
      pt["x"] = space.coord(i).x;
      pt["y"] = space.coord(i).y;
    }
    j["points"].push_back(pt);
  }
  j["types"] = Json::array();
  for (TypeIndex t = 0; t < space.poset().size(); ++t) {
    const TypeLabel& tl = space.poset().label(t);
    Json tj;
    tj["label"] = tl.label;
    tj["shape"] = shape_name(tl.shape);
    if (tl.radius) {
      tj["r"] = tl.radius->value;
      if (tl.radius->sqrt_form) tj["r_squared"] = tl.radius->value_sq;
    }
    j["types"].push_back(tj);
  }
  j["order"] = Json::array();
  for (auto [a, b] : space.poset().reduction())
    j["order"].push_back(Json::array({space.poset().label(a).label, space.poset().label(b).label}));
  j["umin"] = Json::object();
  for (TypeIndex t = 0; t < space.poset().size(); ++t) {
    Json per_type = Json::object();
    for (PointIndex x = 0; x < space.point_count(); ++x)
      per_type[space.id(x)] = ids_json(space, space.umin(x, t));
    j["umin"][space.poset().label(t).label] = per_type;
  }
  return j;
}

TypedSpace space_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("types")) throw DataError("space JSON needs points and types");

  std::vector<std::pair<std::string, Coord2>> points;
  bool has_coords = true;
  std::size_t row = 0;
  for (const auto& pt : j["points"]) {
    std::string id = pt.contains("id") ? pt["id"].get<std::string>() : "p" + std::to_string(row);
    Coord2 c;
    if (pt.contains("x") && pt.contains("y")) {
      c = {pt["x"].get<double>(), pt["y"].get<double>()};
    } else {
      has_coords = false;
    }
    points.emplace_back(std::move(id), c);
    ++row;
  }

  std::vector<TypeLabel> labels;
  for (const auto& tj : j["types"]) {
    TypeLabel tl;
    tl.label = tj.at("label").get<std::string>();
    auto shape = shape_from_name(tj.value("shape", "relation"));
    if (!shape) throw DataError("unknown shape tag: " + tj.value("shape", ""));
    tl.shape = *shape;
    if (tl.shape != Shape::Relation) {
      if (!tj.contains("r")) throw DataError("geometric type needs a radius: " + tl.label);
      tl.radius = tj.contains("r_squared") ? Radius::sqrt_of(tj["r_squared"].get<double>())
                                           : Radius::decimal(tj["r"].get<double>());
    }
    labels.push_back(tl);
  }

  bool any_geometric = false;
  bool all_geometric = true;
  for (const auto& tl : labels) {
    if (tl.shape == Shape::Relation) all_geometric = false;
    else any_geometric = true;
  }
  if (any_geometric && !has_coords)
    throw DataError("geometric types need point coordinates");
  if (any_geometric && !all_geometric)
    throw DataError("mixed geometric and relation types are not supported in one space");

  if (all_geometric && any_geometric) {
    // recompute neighborhoods from the geometry
    bool all_disk = true;
    for (const auto& tl : labels)
      if (tl.shape != Shape::Disk) all_disk = false;
    if (all_disk) {
      std::vector<Radius> radii;
      for (const auto& tl : labels) radii.push_back(*tl.radius);
      return build_metric_space(points, radii);
    }
    std::vector<DirectedShapeSpec> specs;
    for (const auto& tl : labels) {
      if (tl.shape == Shape::Disk)
        throw DataError("mixed disk and directed shapes are not supported in one space");
      specs.push_back({tl.shape, *tl.radius});
    }
    return build_directed_2d_space(points, specs);
  }

  // relation space: umin required
  if (!j.contains("umin")) throw DataError("relation space JSON needs umin");
  std::vector<std::string> ids;
  for (const auto& [id, c] : points) ids.push_back(id);
  std::vector<RelationSpec> relations;
  for (const auto& tl : labels) {
    RelationSpec spec;
    spec.label = tl.label;
    const Json& per_type = j["umin"].at(tl.label);
    for (auto it = per_type.begin(); it != per_type.end(); ++it)
      for (const auto& member : it.value())
        if (member.get<std::string>() != it.key())
          spec.pairs.emplace_back(it.key(), member.get<std::string>());
    relations.push_back(std::move(spec));
  }
  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("order"))
    for (const auto& pair : j["order"])
      order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  return build_relation_space(ids, relations, order);
}

Json tracks_to_json(const TypedSpace& space, const TrackDecomposition& td) {
  Json j;
  j["origin"] = ids_json(space, td.origin);
  j["type"] = space.poset().label(td.type).label;
  j["tracks"] = Json::array();
  for (const PointSet& t : td.tracks) j["tracks"].push_back(ids_json(space, t));
  return j;
}

Json cluster_to_json(const TypedSpace& space, const ClusterSet& cluster) {
  Json j;
  j["origin"] = ids_json(space, cluster.origin);
  j["type"] = space.poset().label(cluster.type).label;
  j["members"] = ids_json(space, cluster.members);
  return j;
}

Json components_to_json(const TypedSpace& space, const TrackComponents& tc) {
  Json j;
  j["origin"] = space.id(tc.origin);
  j["type"] = space.poset().label(tc.type).label;
  j["tracks"] = Json::array();
  for (const auto& parts : tc.per_track) {
    Json track = Json::array();
    for (const PointSet& part : parts) track.push_back(ids_json(space, part));
    j["tracks"].push_back(track);
  }
  return j;
}

Json port_to_json(const TypedSpace& space, const Port& port) {
  Json j;
  j["type"] = space.poset().label(port.type).label;
  j["members"] = ids_json(space, port.members);
  j["parent"] = ids_json(space, port.parent);
  return j;
}

Json straightness_to_json(const TypedSpace& space, const StraightnessReport& report) {
  Json j;
  j["straight"] = report.straight;
  j["violations"] = Json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back({{"y", space.id(v.y)},
                               {"z", space.id(v.z)},
                               {"i", v.i},
                               {"j", v.j}});
  return j;
}

Json surgery_log_to_json(const TypedSpace& space, const SurgeryLog& log) {
  Json arr = Json::array();
  for (const auto& entry : log.entries) {
    Json e;
    if (const auto* c = std::get_if<CutRecord>(&entry)) {
      e["op"] = "cut";
      e["args"] = Json::array({space.id(c->z), space.id(c->y),
                               space.poset().label(c->type).label});
    } else if (const auto* s = std::get_if<SurgeryRecord>(&entry)) {
      e["op"] = "surgery";
      e["args"] = Json::array({space.id(s->z), space.id(s->y),
                               space.poset().label(s->type).label});
    } else if (const auto* r = std::get_if<RemovalRecord>(&entry)) {
      e["op"] = "remove";
      e["args"] = Json::array({space.id(r->point)});
    }
    arr.push_back(e);
  }
  return arr;
}

SurgeryLog surgery_log_from_json(const TypedSpace& space, const Json& j) {
  SurgeryLog log;
  for (const auto& e : j) {
    std::string op = e.at("op").get<std::string>();
    const Json& args = e.at("args");
    if (op == "cut") {
      log.entries.push_back(CutRecord{space.require_point(args[0].get<std::string>()),
                                      space.require_point(args[1].get<std::string>()),
                                      space.require_type(args[2].get<std::string>())});
    } else if (op == "surgery") {
      SurgeryRecord r;
      r.z = space.require_point(args[0].get<std::string>());
      r.y = space.require_point(args[1].get<std::string>());
      r.type = space.require_type(args[2].get<std::string>());
      log.entries.push_back(r);
    } else if (op == "remove") {
      log.entries.push_back(RemovalRecord{space.require_point(args[0].get<std::string>())});
    } else {
      throw DataError("unknown surgery log op: " + op);
    }
  }
  return log;
}

Json index_map_to_json(const TypedSpace& space, const IndexMap& map) {
  Json j;
  j["p"] = space.poset().label(map.p).label;
  j["q"] = space.poset().label(map.q).label;
  j["origin"] = space.id(map.origin);
  Json entries = Json::object();
  for (const auto& [point, value] : map.entries)
    entries[space.id(point)] = Json::array({value.major, value.minor});
  j["entries"] = entries;
  return j;
}

Json branches_to_json(const TypedSpace& space, const std::vector<Branch>& branches) {
  Json j;
  j["branches"] = Json::array();
  for (const Branch& b : branches) {
    Json levels = Json::array();
    for (const PointSet& level : b.levels) levels.push_back(ids_json(space, level));
    j["branches"].push_back(levels);
  }
  return j;
}

std::vector<Branch> branches_from_json(const TypedSpace& space, const Json& j) {
  std::vector<Branch> out;
  const Json& arr = j.contains("branches") ? j["branches"] : j;
  for (const auto& bj : arr) {
    Branch b;
    for (const auto& level : bj) b.levels.push_back(ids_from_json(space, level));
    out.push_back(std::move(b));
  }
  return out;
}

Json dbscan_to_json(const TypedSpace& space, const DbscanResult& result) {
  Json j;
  j["eps"] = result.eps;
  j["minPts"] = result.min_pts;
  j["clusters"] = result.cluster_count;
  Json labels = Json::object();
  Json roles = Json::object();
  for (PointIndex i = 0; i < space.point_count(); ++i) {
    labels[space.id(i)] = result.labels[i] == kNoise ? Json("NOISE") : Json(result.labels[i]);
    roles[space.id(i)] = result.roles[i] == PointRole::Core
                             ? "core"
                             : result.roles[i] == PointRole::Border ? "border" : "noise";
  }
  j["labels"] = labels;
  j["roles"] = roles;
  return j;
}

Json compare_to_json(const TypedSpace& space, const CompareReport& report) {
  Json j;
  j["type"] = space.poset().label(report.type).label;
  j["minPts"] = report.min_pts;
  j["freeModeEqual"] = report.free_mode_equal;
  j["standardContained"] = report.standard_contained;
  auto diffs = [&](const std::vector<ClusterDiff>& list) {
    Json arr = Json::array();
    for (const auto& d : list) {
      if (d.equal) continue;  // summaries list differences only
      Json e;
      e["origin"] = space.id(d.origin);
      e["dbscan"] = ids_json(space, d.dbscan_cluster);
      e["closure"] = ids_json(space, d.closure_cluster);
      e["properSubset"] = d.dbscan_subset && !d.equal;
      arr.push_back(e);
    }
    return arr;
  };
  j["freeModeDiffs"] = diffs(report.free_mode);
  j["standardModeDiffs"] = diffs(report.standard_mode);
  return j;
}

Json validation_to_json(const TypedSpace& space, const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok;
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    Json e;
    e["kind"] = v.kind == Violation::Kind::CenterMembership ? "center-membership"
                                                            : "monotonicity";
    e["point"] = space.id(v.point);
    e["types"] = Json::array({space.poset().label(v.type_a).label,
                              space.poset().label(v.type_b).label});
    e["offending"] = space.id(v.offending);
    j["violations"].push_back(e);
  }
  return j;
}

// --- SVG ---------------------------------------------------------------------

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

const char* kTrackColors[2] = {"#d62728", "#1f77b4"};  // alternating red/blue
const char* kDark = "#333333";

const char* kPalette[8] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                           "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string emit_svg(const TypedSpace& space, const SvgOverlay& overlay) {
  if (!space.has_coords()) throw DataError("emit_svg: space has no coordinates");
  const auto& coords = space.coords();
  double minx = coords[0].x, maxx = coords[0].x, miny = coords[0].y, maxy = coords[0].y;
  for (const Coord2& c : coords) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  const double unit = 30.0, margin = 30.0, radius = 7.0;
  double width = (maxx - minx) * unit + 2 * margin;
  double height = (maxy - miny) * unit + 2 * margin;
  auto px = [&](const Coord2& c) { return margin + (c.x - minx) * unit; };
  auto py = [&](const Coord2& c) { return margin + (maxy - c.y) * unit; };

  std::vector<std::string> fill(space.point_count(), kDark);
  std::vector<std::string> label(space.point_count());
  std::size_t group_count = 0;
  if (overlay.tracks) {
    group_count = overlay.tracks->track_count();
    for (std::size_t i = 0; i < overlay.tracks->track_count(); ++i)
      for (PointIndex x : overlay.tracks->tracks[i]) {
        fill[x] = kTrackColors[i % 2];
        label[x] = "track " + std::to_string(i);
      }
  } else if (overlay.branches) {
    group_count = overlay.branches->size();
    for (std::size_t b = 0; b < overlay.branches->size(); ++b)
      for (const PointSet& level : (*overlay.branches)[b].levels)
        for (PointIndex x : level)
          if (label[x].empty()) {
            fill[x] = kPalette[b % 8];
            label[x] = "branch " + std::to_string(b);
          }
  } else if (overlay.dbscan) {
    group_count = overlay.dbscan->cluster_count;
    for (PointIndex x = 0; x < space.point_count(); ++x)
      if (overlay.dbscan->labels[x] != kNoise) {
        fill[x] = kPalette[overlay.dbscan->labels[x] % 8];
        label[x] = "cluster " + std::to_string(overlay.dbscan->labels[x]);
      }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (overlay.tracks) {
    for (std::size_t i = 0; i < group_count; ++i) {
      svg << "<g class=\"track-" << i << "\">\n";
      for (PointIndex x : overlay.tracks->tracks[i])
        svg << "  <circle cx=\"" << fmt(px(space.coord(x))) << "\" cy=\""
            << fmt(py(space.coord(x))) << "\" r=\"" << fmt(radius) << "\" fill=\"" << fill[x]
            << "\"><title>" << space.id(x) << " (" << label[x] << ")</title></circle>\n";
      svg << "</g>\n";
    }
    svg << "<g class=\"excluded\">\n";
    for (PointIndex x = 0; x < space.point_count(); ++x)
      if (label[x].empty())
        svg << "  <circle cx=\"" << fmt(px(space.coord(x))) << "\" cy=\""
            << fmt(py(space.coord(x))) << "\" r=\"" << fmt(radius) << "\" fill=\"" << kDark
            << "\"><title>" << space.id(x) << "</title></circle>\n";
    svg << "</g>\n";
  } else {
    for (PointIndex x = 0; x < space.point_count(); ++x)
      svg << "<circle cx=\"" << fmt(px(space.coord(x))) << "\" cy=\""
          << fmt(py(space.coord(x))) << "\" r=\"" << fmt(radius) << "\" fill=\"" << fill[x]
          << "\"><title>" << space.id(x)
          << (label[x].empty() ? "" : " (" + label[x] + ")") << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace typedtopo
