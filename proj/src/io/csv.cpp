#include "burgers/io/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace burgers::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw std::runtime_error("not a number: '" + text + "'");
  return v;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::runtime_error("csv: no column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const { return parse_double(rows.at(row).at(column(name))); }

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::runtime_error("csv: row width differs from header for '" + path + "'");
    line(r);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  const std::string text = os.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

namespace {

std::vector<std::string> numbers(std::initializer_list<double> values) {
  std::vector<std::string> out;
  for (double v : values) out.push_back(format_double(v));
  return out;
}

std::string kind_name(Trig t) {
  switch (t) {
    case Trig::sine: return "sin";
    case Trig::cosine: return "cos";
    case Trig::constant: return "const";
  }
  return "?";
}

}  // namespace

void emit_csv(const Trajectory& trajectory, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const Diagnostics& d = trajectory.diagnostics[i];
    rows.push_back(numbers({trajectory.times[i], d.l2_sq, d.v_sq, d.a_sq, d.b_uuu, d.f_u}));
  }
  write_csv(path, {"time", "l2_sq", "v_sq", "a_sq", "b_uuu", "f_u"}, rows);
}

void emit_coefficients_csv(const Trajectory& trajectory, const std::string& path) {
  std::vector<std::string> header{"time"};
  if (trajectory.size() > 0) {
    const SpectralField& s = trajectory.states.front();
    for (int c = 0; c < s.components(); ++c)
      for (std::size_t j = 0; j < s.modes(); ++j) header.push_back("u" + std::to_string(c) + "_" + std::to_string(j));
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    std::vector<std::string> r{format_double(trajectory.times[i])};
    for (double a : trajectory.states[i].coefficients()) r.push_back(format_double(a));
    rows.push_back(std::move(r));
  }
  write_csv(path, header, rows);
}

void emit_modes_csv(const EigenBasis& basis, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Mode& m = basis.mode(j);
    rows.push_back({std::to_string(j), std::to_string(m.axis[0].k), kind_name(m.axis[0].kind), std::to_string(m.axis[1].k),
                    kind_name(m.axis[1].kind), format_double(m.eigenvalue)});
  }
  write_csv(path, {"index", "k1", "kind1", "k2", "kind2", "eigenvalue"}, rows);
}

void emit_csv(const BoundReport& report, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.times.size(); ++i)
    rows.push_back(numbers({report.times[i], report.measured[i], report.bound[i], report.bound[i] - report.measured[i]}));
  write_csv(path, {"time", "measured", "bound", "margin"}, rows);
}

void emit_csv(const ScenarioReport& report, const std::string& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.trajectory.size(); ++i)
    rows.push_back(numbers({report.trajectory.times[i], report.mean[i], report.shock.max_gradient[i],
                            report.shock.position[i], report.trajectory.diagnostics[i].l2_sq}));
  write_csv(path, {"time", "mean", "max_gradient", "shock_position", "l2_sq"}, rows);
}

}  // namespace burgers::io
