#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conerig/cohomology.hpp"
#include "conerig/curvature.hpp"
#include "conerig/radial.hpp"
#include "conerig/spectral.hpp"
#include "conerig/word.hpp"

namespace conerig {

inline constexpr int manifest_schema_version = 1;

struct MeridianSpec {
  std::string word;
  std::string edge_id;
  double cone_angle = 0.0;
};

struct Manifest {
  Curvature curvature;
  GroupKind group = GroupKind::SL2C;
  std::string generators;
  std::vector<std::string> relators;
  std::vector<MeridianSpec> meridians;
  std::vector<GroupElement> holonomy;  // in generator order
  std::optional<std::vector<BoundaryComponent>> boundary;
  std::optional<SingularGraph> singular_graph;
  std::vector<std::string> warnings;   // non-fatal findings of validation

  Presentation presentation() const;
  Representation representation() const;
};

/// Validates structure, words and group membership (tol_group). Errors are SchemaError with a
/// JSON pointer, UnknownGenerator wrapped as SchemaError, or GroupMembershipError.
Manifest parse_manifest(const nlohmann::json& doc);
Manifest parse_manifest_text(const std::string& text);
Manifest load_manifest(const std::string& path);

nlohmann::json manifest_to_json(const Manifest& m);
void write_manifest(const Manifest& m, const std::string& path);

/// Sorted keys, two-space indentation, numbers at 17 significant digits. Throws
/// SerializationError on NaN or infinity.
std::string canonical_json(const nlohmann::json& doc);
void write_report(const nlohmann::json& report, const std::string& path);

nlohmann::json to_json(const Manifest& m);
nlohmann::json to_json(const CohomologyReport& r);
nlohmann::json to_json(const RigidityReport& r);
nlohmann::json to_json(const AuditRecord& a);
nlohmann::json to_json(const SpectrumReport& s);
nlohmann::json to_json(const AdmissibilityVerdict& v);
nlohmann::json to_json(const TubeReport& t);
nlohmann::json to_json(const DecayCheck& d);

}  // namespace conerig
