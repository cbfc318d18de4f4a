#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spqg/partition.hpp"

namespace spqg {

// {"k":..,"l":..,"m":..,"blocks":[[["u",col,level],...],...]}
nlohmann::json to_json(const SpatialPartition& p);
SpatialPartition partition_from_json(const nlohmann::json& j);

// P(k,l;m){u1.1,l1.1|u1.2,l1.2}
std::string to_text(const SpatialPartition& p);
SpatialPartition parse_text(std::string_view text);

// Two rows of block letters for the flattened partition, upper row first.
std::string render_ascii(const SpatialPartition& p);

// Accepts JSON, the text form, or a catalog name.
SpatialPartition parse_partition(std::string_view input);

}  // namespace spqg
