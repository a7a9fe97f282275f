#pragma once

// Space and map documents (JSON), DOT rendering, and JSON forms of the
// certificates emitted by the command-line tool.
//
// Space document:
//   {"format_version": 1, "elements": [...], <one of>}
//     "relations": [[a, b], ...]    a <= b, closed reflexively and transitively
//     "covers":    [[upper, lower], ...]   Hasse diagram; must be acyclic
//     "open_sets": [[...], ...]     a topology, closed under union/intersection
//
// Map document:
//   {"format_version": 1, "domain": <path or space document>,
//    "codomain": <path or space document>, "values": [[x, f(x)], ...]}
// Relative paths resolve against the map document's directory.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fintop/beat_retracts.hpp"
#include "fintop/cofibration.hpp"
#include "fintop/cylinder.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

FiniteSpace parse_space(std::string_view text);
FiniteSpace space_from_json(const Json& doc);
// Normalized form: elements in index order, every strict relation listed.
Json space_to_json(const FiniteSpace& x_space);
std::string serialize_space(const FiniteSpace& x_space);

SpaceMap parse_map(std::string_view text, const std::filesystem::path& base_dir = {});

std::string read_file(const std::filesystem::path& path);  // throws std::ios_base::failure
FiniteSpace load_space(const std::filesystem::path& path);
SpaceMap load_map(const std::filesystem::path& path);

// Hasse diagram, upper -> lower, ranked by longest-chain height. Non-T0 spaces
// are drawn through their Kolmogorov quotient with boxed multi-label classes.
std::string render_dot(const FiniteSpace& x_space);

Json labels_json(const FiniteSpace& x_space, const ElementSet& elements);
// [[x, r(x)], ...] for x outside A; r is the identity on A.
Json retraction_json(const SpaceMap& r, const Subspace& a);
Json retract_certificate_json(const FiniteSpace& x_space, const Subspace& a, const RetractCertificate& cert);
Json removal_trace_json(const FiniteSpace& x_space, const RemovalTrace& trace);
Json cofibration_report_json(const CofibrationReport& report);
Json beat_search_json(const FiniteSpace& x_space, const BeatSearchResult& result);
Json jx_diagnostics_json(const CylinderSpace& c, const JxDiagnostics& diag);

}  // namespace fintop::io
