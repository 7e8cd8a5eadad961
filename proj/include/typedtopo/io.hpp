#pragma once

#include <iosfwd>

#include "typedtopo/branches.hpp"
#include "typedtopo/dbscan.hpp"
#include "typedtopo/indexing.hpp"
#include "typedtopo/surgery.hpp"

#include "json.hpp"

namespace typedtopo {

using Json = nlohmann::json;

// --- CSV ---------------------------------------------------------------------

// Header `id,x,y` (id optional, defaults to p<row>); quoted fields supported.
std::vector<std::pair<std::string, Coord2>> read_points_csv(std::istream& in);
std::vector<std::pair<std::string, Coord2>> read_points_csv_file(const std::string& path);
void write_points_csv(std::ostream& out, const TypedSpace& space);

// --- JSON --------------------------------------------------------------------

Json space_to_json(const TypedSpace& space);
// umin is recomputed for geometric shapes and required for relation types.
TypedSpace space_from_json(const Json& j);

Json tracks_to_json(const TypedSpace& space, const TrackDecomposition& td);
Json cluster_to_json(const TypedSpace& space, const ClusterSet& cluster);
Json components_to_json(const TypedSpace& space, const TrackComponents& tc);
Json port_to_json(const TypedSpace& space, const Port& port);
Json straightness_to_json(const TypedSpace& space, const StraightnessReport& report);
Json surgery_log_to_json(const TypedSpace& space, const SurgeryLog& log);
SurgeryLog surgery_log_from_json(const TypedSpace& space, const Json& j);
Json index_map_to_json(const TypedSpace& space, const IndexMap& map);
Json branches_to_json(const TypedSpace& space, const std::vector<Branch>& branches);
Json dbscan_to_json(const TypedSpace& space, const DbscanResult& result);
Json compare_to_json(const TypedSpace& space, const CompareReport& report);
Json validation_to_json(const TypedSpace& space, const ValidationReport& report);

std::vector<Branch> branches_from_json(const TypedSpace& space, const Json& j);

// --- SVG ---------------------------------------------------------------------

struct SvgOverlay {
  const TrackDecomposition* tracks = nullptr;
  const std::vector<Branch>* branches = nullptr;
  const DbscanResult* dbscan = nullptr;
};

// Deterministic scatter plot: fixed viewBox, stable element order, tracks in
// alternating colors, out-of-cluster points dark.
std::string emit_svg(const TypedSpace& space, const SvgOverlay& overlay = {});

}  // namespace typedtopo
