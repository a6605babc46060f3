#pragma once

// JSON wire formats. A RegionSpec is {"x":int,"y":int,"U":[..],"D":[..],"B":[..]}
// with ascending lists; a ClusterSpec is {"clusters":[["UP","DOWN"],..],"gaps":[..]}.

#include <string>

#include "json.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

nlohmann::json to_json(const RegionSpec& spec);
nlohmann::json to_json(const ClusterSpec& spec);
nlohmann::json to_json(const ShuffleInstance& inst);

/// Throw Error(InvalidInput) on malformed documents. Positions are not
/// validated here beyond being integers; run validate_spec afterwards.
RegionSpec region_spec_from_json(const nlohmann::json& j);
ClusterSpec cluster_spec_from_json(const nlohmann::json& j);

RegionSpec load_region_spec(const std::string& path);
ClusterSpec load_cluster_spec(const std::string& path);

}  // namespace lozenge
