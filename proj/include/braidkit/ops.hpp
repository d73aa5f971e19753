#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidkit/fpgroup.hpp"

namespace braidkit {

/// Names accepted by run_op.
const std::vector<std::string>& op_names();

/// Executes one named operation on JSON arguments; shared by the CLI and the
/// claims runner. Throws InvalidInput for unknown ops or malformed args.
///
/// Presentation arguments are either {"presentation": {...}} or
/// {"surface", "genus", "strands"[, "boundaries"]}, optionally with
/// "kill_braid": true (adds every sigma as a relator) and
/// "extra_relators": [[...], ...].
nlohmann::json run_op(const std::string& op, const nlohmann::json& args);

Presentation presentation_from_args(const nlohmann::json& args);

} // namespace braidkit
