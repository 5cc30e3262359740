#include "fvc/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace fvc {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos
                        ? std::string()
                        : cell.substr(first, last - first + 1));
  }
  return cells;
}

double parse_number(const std::string& s, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw DomainError("field csv: malformed number '" + s + "' on line " +
                      std::to_string(line_no));
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

FieldFile read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw DomainError("field csv: empty input");
  auto header = split_csv_line(line);
  bool has_h = false;
  if (header.size() == 3 && header[0] == "x" && header[1] == "u" &&
      header[2] == "h") {
    has_h = true;
  } else if (header.size() == 2 && header[0] == "x" && header[1] == "u") {
    has_h = false;
  } else {
    throw DomainError("field csv: header must be 'x,u' or 'x,u,h'");
  }

  std::vector<double> xs, us, hs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw DomainError("field csv: wrong column count on line " +
                        std::to_string(line_no));
    xs.push_back(parse_number(cells[0], line_no));
    us.push_back(parse_number(cells[1], line_no));
    if (has_h) hs.push_back(parse_number(cells[2], line_no));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
  if (n < 3) throw InvalidRangeError("field csv: needs at least 3 rows");

  const double x1 = xs.front(), x2 = xs.back();
  Grid grid = Grid::uniform(x1, x2, n);
  const double dx = grid.spacing();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double expected = x1 + dx * static_cast<double>(i);
    if (std::abs(xs[static_cast<std::size_t>(i)] - expected) >
        1e-9 * std::max(std::abs(x2 - x1), 1.0))
      throw InvalidRangeError(
          "field csv: x samples are not uniformly spaced (row " +
          std::to_string(i + 2) + ")");
  }

  Eigen::ArrayXd uv = Eigen::Map<Eigen::ArrayXd>(us.data(), n);
  FieldFile out{Field(grid, std::move(uv)), std::nullopt};
  if (has_h) {
    Eigen::ArrayXd hv = Eigen::Map<Eigen::ArrayXd>(hs.data(), n);
    out.h = Field(grid, std::move(hv));
  }
  return out;
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open field file: " + path);
  return read_field_csv(in);
}

void write_field_csv(std::ostream& out, const Field& u, const Field* h) {
  if (h) require_same_grid(u, *h);
  out << (h ? "x,u,h\n" : "x,u\n");
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    out << format_double(u.grid.points(i)) << ','
        << format_double(u.values(i));
    if (h) out << ',' << format_double(h->values(i));
    out << '\n';
  }
}

void write_field_file(const std::string& path, const Field& u,
                      const Field* h) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file: " + path);
  write_field_csv(out, u, h);
}

}  // namespace fvc
