#pragma once

#include "superlum/params.hpp"
#include "superlum/response.hpp"

#include <map>
#include <string>
#include <vector>

namespace superlum::cli {

// Built-in defaults of the tool: SystemParams defaults with the probe at the
// weak-field value 0.01 used throughout the figures.
SystemParams default_run_params();

/// Effective configuration of one run: physical parameters plus the
/// finite-difference step used for slopes.
struct RunConfig {
  SystemParams params = default_run_params();
  double step = kDefaultSlopeStep;
};

// Keys accepted in config files, in echo order.
const std::vector<std::string>& config_keys();

/// Parses "key = value" lines; '#' starts a comment, blank lines are ignored.
/// Throws std::invalid_argument on malformed lines or unknown keys.
std::map<std::string, double> parse_config_text(const std::string& text);
std::map<std::string, double> load_config_file(const std::string& path);

void apply_setting(RunConfig& cfg, const std::string& key, double value);

/// "# config: key = value" lines describing cfg, one per key.
std::vector<std::string> config_comment_lines(const RunConfig& cfg);

}  // namespace superlum::cli
