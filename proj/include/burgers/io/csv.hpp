#pragma once

#include <string>
#include <vector>

#include "burgers/estimates.hpp"
#include "burgers/traffic.hpp"

namespace burgers::io {

/// 17 significant digits; parse_double recovers the same value.
std::string format_double(double v);
double parse_double(const std::string& text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// Writes a headered table; throws std::runtime_error naming the path on
/// failure. Cells must not contain commas or newlines.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
CsvTable read_csv(const std::string& path);

/// time, l2_sq, v_sq, a_sq, b_uuu, f_u
void emit_csv(const Trajectory& trajectory, const std::string& path);
/// time, then u{c}_{j} for every component c and mode j
void emit_coefficients_csv(const Trajectory& trajectory, const std::string& path);
/// index, k1, kind1, k2, kind2, eigenvalue
void emit_modes_csv(const EigenBasis& basis, const std::string& path);
/// time, measured, bound, margin
void emit_csv(const BoundReport& report, const std::string& path);
/// time, mean, max_gradient, shock_position, l2_sq
void emit_csv(const ScenarioReport& report, const std::string& path);

}  // namespace burgers::io
