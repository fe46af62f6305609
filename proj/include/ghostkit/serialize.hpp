#pragma once

#include <json.hpp>

#include "ghostkit/level.hpp"

namespace ghostkit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& j);

/// Row-major list of rows of polynomial strings.
Json to_json(const FreeMap& m);
FreeMap free_map_from_json(const Json& j, const RingSpec& ring);

Json to_json(const FreeComplex& x);
FreeComplex complex_from_json(const Json& j);

/// Components only; the source and target are stored by the caller.
Json components_to_json(const ChainMap& f);
ChainMap chain_map_from_components(const Json& j, const FreeComplex& source, const FreeComplex& target);

/// Self-contained: includes source and target.
Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

Json to_json(const ModulePresentation& m);
ModulePresentation presentation_from_json(const Json& j, const RingSpec& ring);

Json to_json(const BuildPlan& plan);
BuildPlan plan_from_json(const Json& j);

Json to_json(const GhostCertificate& cert, const std::vector<BuildPlan>& build_plans = {});
GhostCertificate certificate_from_json(const Json& j);

Json to_json(const LevelBound& bound);
Json to_json(const DepthGentimeReport& rep);
Json to_json(const RdimReport& rep);

}  // namespace ghostkit
