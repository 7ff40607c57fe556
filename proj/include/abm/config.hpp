#pragma once

#include <map>
#include <string>

#include "abm/params.hpp"
#include "abm/sweep.hpp"

namespace abm {

/// Flat key=value configuration. '#' starts a comment; blank lines are
/// ignored; unknown keys are rejected.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap load_config_file(const std::string& path);

/// Builds Params from defaults, then the file map, then the override map
/// (later sources win). Throws ConfigError on unknown keys or bad values.
Params params_from_config(const ConfigMap& file, const ConfigMap& overrides);

/// As above for a sweep; accepts the run keys plus the grid keys
/// (alpha_min/alpha_max/alpha_step, sigma_*, gammas, replications,
/// master_seed).
SweepSpec sweep_from_config(const ConfigMap& file, const ConfigMap& overrides);

/// Full-precision echo of the effective configuration, reloadable through
/// params_from_config / sweep_from_config.
ConfigMap echo_params(const Params& params);
ConfigMap echo_sweep(const SweepSpec& spec);

}  // namespace abm
