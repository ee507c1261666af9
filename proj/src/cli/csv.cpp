#include "superlum/cli/csv.hpp"

#include <cstdio>

namespace superlum::cli {

std::string format_number(double v) {
  // snprintf follows LC_NUMERIC; nothing here calls setlocale, so it stays "C".
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string point_row(const SystemParams& p,
                      const std::optional<ProbeResponse>& r,
                      const std::string& error) {
  std::string row;
  const auto add = [&row](const std::string& field) {
    if (!row.empty()) row += ',';
    row += field;
  };
  add(format_number(p.delta_p));
  add(format_number(p.delta_c));
  add(format_number(p.omega_p));
  add(format_number(p.omega_c));
  add(format_number(p.pump_R));
  if (r) {
    add(format_number(r->chi_re));
    add(format_number(r->chi_im));
    add(format_number(r->slope));
    add(format_number(r->group_index_minus_one));
    add(std::string(to_string(r->classification)));
    add(format_number(r->rho(1, 1).real()));
    add(format_number(r->rho(2, 2).real()));
    add(format_number(r->rho(3, 3).real()));
  } else {
    for (int i = 0; i < 8; ++i) add("");
  }
  // Messages must not break the column structure.
  std::string clean = error;
  for (char& c : clean) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  row += ',';
  row += clean;
  return row;
}

}  // namespace superlum::cli
