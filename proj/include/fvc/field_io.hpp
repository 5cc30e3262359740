#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fvc/grid.hpp"

namespace fvc {

/// A field file: samples of u(x) and optionally a variation h(x).
struct FieldFile {
  Field u;
  std::optional<Field> h;
};

/// CSV with header `x,u[,h]`, one row per grid point. The grid is inferred
/// from the x column and must be uniform within 1e-9 relative spacing.
FieldFile read_field_csv(std::istream& in);
FieldFile read_field_file(const std::string& path);

/// Values are written with 17 significant digits.
void write_field_csv(std::ostream& out, const Field& u,
                     const Field* h = nullptr);
void write_field_file(const std::string& path, const Field& u,
                      const Field* h = nullptr);

/// Locale-independent 17-significant-digit formatting used by all CSV output.
std::string format_double(double v);

}  // namespace fvc
