#include "ergodic/grid.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ergodic {

std::string to_string(DomainMode mode) {
  return mode == DomainMode::periodic ? "periodic" : "interval";
}

DomainMode parse_domain_mode(const std::string& text) {
  if (text == "periodic") return DomainMode::periodic;
  if (text == "interval") return DomainMode::interval;
  throw ParameterError("unknown domain mode '" + text + "'");
}

namespace {

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

// Snaps values that are a rounding error away from a "nice" endpoint such as 1.
double snap(double v) {
  const double r = std::round(v * 6.0) / 6.0;
  return std::abs(v - r) < 1e-12 ? r : v;
}

}  // namespace

void write_csv(std::ostream& out, const GridFunction& gf) {
  out << "x,value\n";
  for (Eigen::Index i = 0; i < gf.size(); ++i) {
    out << format_g17(gf.node(i)) << ',' << format_g17(gf[i]) << '\n';
  }
}

void write_csv(const std::string& path, const GridFunction& gf) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_csv(out, gf);
}

GridFunction read_csv(std::istream& in, DomainMode mode, const std::string& column) {
  std::string line;
  if (!std::getline(in, line)) throw ShapeError("empty CSV");
  const auto header = split_csv_line(line);
  std::size_t col = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == column) col = c;
  }
  if (header.empty() || header[0] != "x") throw ShapeError("CSV must start with an x column");
  if (col == header.size()) throw ShapeError("CSV has no column '" + column + "'");

  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() <= col) throw ShapeError("short CSV row: " + line);
    xs.push_back(std::stod(cells[0]));
    vs.push_back(std::stod(cells[col]));
  }
  if (xs.size() < 2) throw ShapeError("CSV needs at least 2 rows");

  Interval support{xs.front(), xs.back()};
  if (mode == DomainMode::periodic) {
    const double n = double(xs.size());
    support.hi = snap(xs.front() + (xs.back() - xs.front()) * n / (n - 1.0));
  }
  GridFunction::Values values = Eigen::Map<const GridFunction::Values>(vs.data(), Eigen::Index(vs.size()));
  return GridFunction(std::move(values), mode, support);
}

GridFunction read_csv(const std::string& path, DomainMode mode, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_csv(in, mode, column);
}

}  // namespace ergodic
