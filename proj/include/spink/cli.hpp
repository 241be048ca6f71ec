#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spink/mod2.hpp"
#include "spink/rhc_model.hpp"

namespace spink::cli {

/// Exit codes: 0 established or consistent, 1 excluded, 2 usage or input error.
enum ExitCode : int { ok = 0, excluded = 1, usage = 2 };

using Model = std::variant<SpaceModel, RHCModel>;

/// Reads and validates a model document. "kind" selects "space" or "rhc".
/// Throws std::invalid_argument naming the failing field.
Model load_model(const std::string& path);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spink::cli
