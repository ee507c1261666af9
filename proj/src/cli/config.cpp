#include "superlum/cli/config.hpp"

#include "superlum/cli/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace superlum::cli {

SystemParams default_run_params() {
  SystemParams p;
  p.omega_p = 0.01;
  return p;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "gamma1",  "gamma2",  "pump_R",        "omega_p",    "omega_c",
      "delta_p", "delta_c", "chi_prefactor", "nu_p_scale", "h",
  };
  return keys;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  double v = 0.0;
  if (!(is >> v) || !(is >> std::ws).eof()) {
    throw std::invalid_argument("config: value for '" + key +
                                "' is not a number: " + text);
  }
  return v;
}

}  // namespace

std::map<std::string, double> parse_config_text(const std::string& text) {
  std::map<std::string, double> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    bool known = false;
    for (const auto& k : config_keys()) known = known || k == key;
    if (!known) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
    out[key] = parse_double(trim(line.substr(eq + 1)), key);
  }
  return out;
}

std::map<std::string, double> load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

void apply_setting(RunConfig& cfg, const std::string& key, double value) {
  SystemParams& p = cfg.params;
  if (key == "gamma1") p.gamma1 = value;
  else if (key == "gamma2") p.gamma2 = value;
  else if (key == "pump_R") p.pump_R = value;
  else if (key == "omega_p") p.omega_p = value;
  else if (key == "omega_c") p.omega_c = value;
  else if (key == "delta_p") p.delta_p = value;
  else if (key == "delta_c") p.delta_c = value;
  else if (key == "chi_prefactor") p.chi_prefactor = value;
  else if (key == "nu_p_scale") p.nu_p_scale = value;
  else if (key == "h") cfg.step = value;
  else throw std::invalid_argument("unknown setting '" + key + "'");
}

std::vector<std::string> config_comment_lines(const RunConfig& cfg) {
  const SystemParams& p = cfg.params;
  const double values[] = {p.gamma1,  p.gamma2,  p.pump_R,        p.omega_p,
                           p.omega_c, p.delta_p, p.delta_c, p.chi_prefactor,
                           p.nu_p_scale, cfg.step};
  std::vector<std::string> lines;
  const auto& keys = config_keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    lines.push_back("# config: " + keys[i] + " = " + format_number(values[i]));
  }
  return lines;
}

}  // namespace superlum::cli
