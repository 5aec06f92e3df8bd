#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootnum {

/// Batch front-end. Exit codes: 0 success (gate: Proven), 1 domain error,
/// 2 schema/usage error, 3 gate verdict HypothesisFailed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rootnum
