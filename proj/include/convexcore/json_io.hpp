#pragma once

#include <string>

#include <json.hpp>

#include "convexcore/domains.hpp"
#include "convexcore/gallery.hpp"
#include "convexcore/groups.hpp"
#include "convexcore/limitsets.hpp"
#include "convexcore/pqgeom.hpp"

namespace convexcore {

using Json = nlohmann::json;

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, const Config& cfg = default_config());

Json domain_to_json(const ConvexDomain& d);
ConvexDomain domain_from_json(const Json& j, const Config& cfg = default_config());

Json form_to_json(const PQForm& f);
PQForm form_from_json(const Json& j, const Config& cfg = default_config());

std::string cloud_to_csv(const PointCloud& cloud);
PointCloud cloud_from_csv(const std::string& text, const Config& cfg = default_config());

Json gap_profile_to_json(const GapProfile& p);
Json verdict_to_json(const Verdict& v);
Json descriptor_to_json(const ExampleDescriptor& ex);

Json config_to_json(const Config& cfg);

/// Minimal structural validation against the subset of JSON Schema used by
/// the published schema files (type / properties / required / items / enum).
bool validate_against_schema(const Json& doc, const Json& schema,
                             std::string* error = nullptr);

}  // namespace convexcore
