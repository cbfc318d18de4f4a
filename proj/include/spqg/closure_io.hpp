#pragma once

#include <istream>
#include <ostream>

#include <json.hpp>

#include "spqg/closure.hpp"

/// Closure dumps: one partition JSON object per line in member order, each
/// carrying its derivation step under "trace", plus a metadata object.
namespace spqg {

void write_closure_jsonl(const ClosureSet& cs, std::ostream& out);
nlohmann::json closure_meta(const ClosureSet& cs);
ClosureSet read_closure(std::istream& jsonl, const nlohmann::json& meta);

nlohmann::json membership_to_json(const MembershipAnswer& answer);

}  // namespace spqg
