#include "superlum/cli/commands.hpp"

#include "superlum/analytic.hpp"
#include "superlum/cli/config.hpp"
#include "superlum/cli/csv.hpp"
#include "superlum/errors.hpp"
#include "superlum/parallel.hpp"
#include "superlum/regionmap.hpp"
#include "superlum/response.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace superlum::cli {

namespace {

// Physical-parameter flags shared by point, sweep and regionmap. Unset flags
// fall back to the config file and then to the built-in defaults.
struct ParamFlags {
  std::optional<std::string> config_path;
  std::map<std::string, std::optional<double>> values;

  void attach(CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value parameter file");
    const std::pair<const char*, const char*> flags[] = {
        {"--gamma1", "gamma1"},       {"--gamma2", "gamma2"},
        {"--pump", "pump_R"},         {"--omega-p", "omega_p"},
        {"--omega-c", "omega_c"},     {"--delta-p", "delta_p"},
        {"--delta-c", "delta_c"},     {"--chi-prefactor", "chi_prefactor"},
        {"--nu-p", "nu_p_scale"},     {"--step", "h"},
    };
    for (const auto& [flag, key] : flags) {
      sub->add_option(flag, values[key], std::string("override ") + key);
    }
  }

  RunConfig resolve(RunConfig cfg = {}) const {
    if (config_path) {
      for (const auto& [k, v] : load_config_file(*config_path)) {
        apply_setting(cfg, k, v);
      }
    }
    for (const auto& [k, v] : values) {
      if (v) apply_setting(cfg, k, *v);
    }
    return cfg;
  }
};

enum class SweepVariable { DeltaP, OmegaC, PumpR };

SweepVariable parse_variable(const std::string& name) {
  if (name == "delta_p") return SweepVariable::DeltaP;
  if (name == "omega_c") return SweepVariable::OmegaC;
  if (name == "pump_R") return SweepVariable::PumpR;
  throw std::invalid_argument("--variable must be delta_p, omega_c or pump_R");
}

const char* variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::DeltaP: return "delta_p";
    case SweepVariable::OmegaC: return "omega_c";
    case SweepVariable::PumpR: return "pump_R";
  }
  return "";
}

void set_variable(SystemParams& p, SweepVariable v, double x) {
  switch (v) {
    case SweepVariable::DeltaP: p.delta_p = x; break;
    case SweepVariable::OmegaC: p.omega_c = x; break;
    case SweepVariable::PumpR: p.pump_R = x; break;
  }
}

struct SweepSpec {
  SweepVariable variable = SweepVariable::DeltaP;
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;
  RunConfig base;
};

void check_sweep(const SweepSpec& s) {
  if (!(s.start < s.stop)) throw std::invalid_argument("sweep needs start < stop");
  if (s.count < 2) throw std::invalid_argument("sweep needs count >= 2");
  validate(s.base.params);
}

void write_sweep(const SweepSpec& spec, const std::vector<std::string>& preamble,
                 std::ostream& os) {
  check_sweep(spec);
  for (const auto& line : preamble) os << line << '\n';
  os << "# sweep: variable = " << variable_name(spec.variable)
     << ", start = " << format_number(spec.start)
     << ", stop = " << format_number(spec.stop) << ", count = " << spec.count
     << '\n';
  for (const auto& line : config_comment_lines(spec.base)) os << line << '\n';
  os << kPointHeader << '\n';

  std::vector<std::string> rows(spec.count);
  parallel_for(spec.count, [&](std::size_t i) {
    SystemParams p = spec.base.params;
    const double x = spec.start + (spec.stop - spec.start) *
                                      static_cast<double>(i) /
                                      static_cast<double>(spec.count - 1);
    set_variable(p, spec.variable, x);
    try {
      rows[i] = point_row(p, probe_response(p, spec.base.step), "");
    } catch (const std::exception& e) {
      rows[i] = point_row(p, std::nullopt, e.what());
    }
  });
  for (const auto& r : rows) os << r << '\n';
}

struct PresetCurve {
  std::string label;
  double pump_R;
  double omega_c;
};

struct Preset {
  SweepVariable variable;
  double start, stop;
  std::size_t count;
  std::vector<PresetCurve> curves;
};

// Figure parameters: gamma1 = gamma2 = 1, omega_p = 0.01, delta_c = 0; the
// group-index presets sit at delta_p = 0. Axis ranges are not pinned by the
// figures and are chosen to cover every labeled feature.
std::optional<Preset> find_preset(const std::string& name) {
  if (name == "fig3") {
    return Preset{SweepVariable::DeltaP, -6.0, 6.0, 1201,
                  {{"omega_c_1.25", 1.5, 1.25},
                   {"omega_c_2.08", 1.5, 2.08},
                   {"omega_c_3.0", 1.5, 3.0}}};
  }
  if (name == "fig4") {
    return Preset{SweepVariable::DeltaP, -6.0, 6.0, 1201,
                  {{"pump_R_0.8", 0.8, 3.0},
                   {"pump_R_1.14", 1.14, 3.0},
                   {"pump_R_1.5", 1.5, 3.0}}};
  }
  if (name == "fig5a") {
    return Preset{SweepVariable::OmegaC, 0.2, 6.0, 581,
                  {{"pump_R_1", 1.0, 0.0},
                   {"pump_R_1.14", 1.14, 0.0},
                   {"pump_R_1.5", 1.5, 0.0}}};
  }
  if (name == "fig5b") {
    return Preset{SweepVariable::PumpR, 0.1, 10.0, 991,
                  {{"omega_c_1.99", 0.0, 1.99},
                   {"omega_c_2.08", 0.0, 2.08},
                   {"omega_c_3.0", 0.0, 3.0}}};
  }
  return std::nullopt;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  return f;
}

int numerical_failure(std::ostream& err, const std::exception& e) {
  err << "superlum: numerical failure: " << e.what() << '\n';
  return kExitNumerical;
}

int usage_failure(std::ostream& err, const std::exception& e) {
  err << "superlum: " << e.what() << '\n';
  return kExitUsage;
}

// Maps exceptions thrown by a subcommand body onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvalidParameter& e) {
    return usage_failure(err, e);
  } catch (const DomainError& e) {
    return usage_failure(err, e);
  } catch (const Error& e) {
    return numerical_failure(err, e);
  } catch (const std::invalid_argument& e) {
    return usage_failure(err, e);
  }
}

int cmd_point(const ParamFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = flags.resolve();
    validate(cfg.params);
    const ProbeResponse r = probe_response(cfg.params, cfg.step);
    for (const auto& line : config_comment_lines(cfg)) out << line << '\n';
    out << kPointHeader << '\n' << point_row(cfg.params, r, "") << '\n';
    return int(kExitOk);
  });
}

struct SweepFlags {
  std::optional<std::string> variable;
  std::optional<double> start, stop;
  std::optional<std::size_t> count;
  std::optional<std::string> out_path;
  std::optional<std::string> preset;
  std::string out_dir = ".";
};

int cmd_sweep(const ParamFlags& pflags, const SweepFlags& sf, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = pflags.resolve();

    if (sf.preset) {
      const auto preset = find_preset(*sf.preset);
      if (!preset) {
        throw std::invalid_argument("unknown preset '" + *sf.preset +
                                    "' (fig3, fig4, fig5a, fig5b)");
      }
      std::filesystem::create_directories(sf.out_dir);
      for (const auto& curve : preset->curves) {
        SweepSpec spec;
        spec.variable = preset->variable;
        spec.start = sf.start.value_or(preset->start);
        spec.stop = sf.stop.value_or(preset->stop);
        spec.count = sf.count.value_or(preset->count);
        spec.base = cfg;
        SystemParams& p = spec.base.params;
        p.gamma1 = 1.0;
        p.gamma2 = 1.0;
        p.omega_p = 0.01;
        p.delta_c = 0.0;
        p.delta_p = 0.0;
        p.pump_R = curve.pump_R;
        p.omega_c = curve.omega_c;
        const auto path = (std::filesystem::path(sf.out_dir) /
                           (*sf.preset + "_" + curve.label + ".csv"))
                              .string();
        auto f = open_output(path);
        write_sweep(spec,
                    {"# preset: " + *sf.preset, "# curve: " + curve.label}, f);
        out << path << '\n';
      }
      return int(kExitOk);
    }

    if (!sf.variable || !sf.start || !sf.stop || !sf.count) {
      throw std::invalid_argument(
          "sweep needs --preset or all of --variable --start --stop --count");
    }
    SweepSpec spec{parse_variable(*sf.variable), *sf.start, *sf.stop, *sf.count,
                   cfg};
    check_sweep(spec);
    if (sf.out_path) {
      auto f = open_output(*sf.out_path);
      write_sweep(spec, {}, f);
    } else {
      write_sweep(spec, {}, out);
    }
    return int(kExitOk);
  });
}

struct RegionFlags {
  std::string method = "analytic";
  regionmap::GridSpec grid;
  std::optional<std::string> out_path;
  std::optional<std::string> boundary_path;
  std::size_t n_boundary = 500;
};

std::string cell_label(const regionmap::Cell& c) {
  return c.ok() ? std::string(to_string(c.cls)) : std::string("error");
}

void write_region(const regionmap::RegionGrid& grid, const RunConfig& cfg,
                  std::ostream& os) {
  os << "# method: " << regionmap::to_string(grid.method) << '\n';
  for (const auto& line : config_comment_lines(cfg)) os << line << '\n';
  os << kRegionHeader << '\n';
  for (std::size_t i = 0; i < grid.omega_c_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.r_axis.size(); ++j) {
      os << format_number(grid.r_axis[j]) << ','
         << format_number(grid.omega_c_axis[i]) << ',' << cell_label(grid.at(i, j))
         << '\n';
    }
  }
}

void write_boundary(const std::vector<regionmap::BoundaryPoint>& curve,
                    std::ostream& os) {
  os << kBoundaryHeader << '\n';
  for (const auto& b : curve) {
    os << format_number(b.pump_R) << ',' << format_number(b.omega_c) << '\n';
  }
}

std::string default_boundary_path(const std::string& grid_path) {
  std::filesystem::path p(grid_path);
  return (p.parent_path() / (p.stem().string() + "_boundary.csv")).string();
}

int cmd_regionmap(const ParamFlags& pflags, const RegionFlags& rf,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    // Cells are evaluated at line center; pump and coupling come from the
    // lattice, everything else from the map defaults, config and flags.
    RunConfig cfg = pflags.resolve(RunConfig{regionmap::default_map_params()});
    cfg.params.delta_p = 0.0;

    regionmap::Method method;
    if (rf.method == "analytic") method = regionmap::Method::Analytic;
    else if (rf.method == "numeric") method = regionmap::Method::Numeric;
    else throw std::invalid_argument("--method must be analytic or numeric");

    const auto grid = regionmap::classify_grid(rf.grid, method, cfg.params);
    if (rf.out_path) {
      auto f = open_output(*rf.out_path);
      write_region(grid, cfg, f);
    } else {
      write_region(grid, cfg, out);
    }

    std::optional<std::string> bpath = rf.boundary_path;
    if (!bpath && rf.out_path) bpath = default_boundary_path(*rf.out_path);
    // The curve only exists for R > 1; start just inside that domain.
    const double r_lo = std::max(rf.grid.r_min, 1.01);
    if (bpath && rf.grid.r_max > r_lo) {
      auto f = open_output(*bpath);
      write_boundary(regionmap::boundary_curve(r_lo, rf.grid.r_max, rf.n_boundary), f);
    }
    return int(kExitOk);
  });
}

struct CriticalFlags {
  std::optional<double> pump;
  std::optional<double> omega_c;
};

int cmd_critical(const CriticalFlags& cf, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cf.pump && !cf.omega_c) {
      throw std::invalid_argument("critical needs --pump and/or --omega-c");
    }
    // Validate everything before printing anything.
    std::optional<std::optional<double>> necessary;
    if (cf.pump) necessary = analytic::omega_c_necessary(*cf.pump);
    std::optional<std::vector<double>> roots;
    if (cf.omega_c) roots = analytic::pump_roots(*cf.omega_c);
    const auto min = analytic::omega_c_min();

    out << "quantity,value\n";
    if (cf.pump) {
      out << "pump_R," << format_number(*cf.pump) << '\n';
      out << "omega_c_necessary,"
          << (*necessary ? format_number(**necessary) : std::string("none")) << '\n';
    }
    out << "r_star," << format_number(min.r_star) << '\n';
    out << "omega_c_min," << format_number(min.omega_c_min) << '\n';
    if (cf.omega_c) {
      out << "omega_c," << format_number(*cf.omega_c) << '\n';
      if (roots->empty()) out << "pump_roots,none\n";
      for (std::size_t i = 0; i < roots->size(); ++i) {
        out << "pump_root_" << (i + 1) << ',' << format_number((*roots)[i]) << '\n';
      }
    }
    return int(kExitOk);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state probe response of an incoherently pumped Lambda atom"};
  app.name("superlum");
  app.require_subcommand(1);

  ParamFlags point_flags;
  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  point_flags.attach(point);

  ParamFlags sweep_params;
  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "1-D parameter sweep");
  sweep_params.attach(sweep);
  sweep->add_option("--variable", sweep_flags.variable, "delta_p | omega_c | pump_R");
  sweep->add_option("--start", sweep_flags.start);
  sweep->add_option("--stop", sweep_flags.stop);
  sweep->add_option("--count", sweep_flags.count);
  sweep->add_option("--out", sweep_flags.out_path, "output CSV (default stdout)");
  sweep->add_option("--preset", sweep_flags.preset, "fig3 | fig4 | fig5a | fig5b");
  sweep->add_option("--out-dir", sweep_flags.out_dir, "directory for preset CSVs");

  ParamFlags region_params;
  RegionFlags region_flags;
  auto* region = app.add_subcommand("regionmap", "subluminal/superluminal map");
  region_params.attach(region);
  region->add_option("--method", region_flags.method, "analytic | numeric");
  region->add_option("--r-min", region_flags.grid.r_min);
  region->add_option("--r-max", region_flags.grid.r_max);
  region->add_option("--n-r", region_flags.grid.n_r);
  region->add_option("--omega-min", region_flags.grid.omega_min);
  region->add_option("--omega-max", region_flags.grid.omega_max);
  region->add_option("--n-omega", region_flags.grid.n_omega);
  region->add_option("--out", region_flags.out_path, "grid CSV (default stdout)");
  region->add_option("--boundary-out", region_flags.boundary_path, "boundary CSV");
  region->add_option("--n-boundary", region_flags.n_boundary);

  CriticalFlags critical_flags;
  auto* critical = app.add_subcommand("critical", "critical coupling and pump rates");
  critical->add_option("--pump", critical_flags.pump);
  critical->add_option("--omega-c", critical_flags.omega_c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kExitOk) : int(kExitUsage);
  }

  if (point->parsed()) return cmd_point(point_flags, out, err);
  if (sweep->parsed()) return cmd_sweep(sweep_params, sweep_flags, out, err);
  if (region->parsed()) return cmd_regionmap(region_params, region_flags, out, err);
  return cmd_critical(critical_flags, out, err);
}

}  // namespace superlum::cli
