#pragma once

#include <Eigen/Dense>
#include <functional>

#include "fvc/errors.hpp"
#include "fvc/order.hpp"

namespace fvc {

/// Uniform 1-D grid on [x1, x2] with n >= 3 sample points.
struct Grid {
  double x1 = 0.0;
  double x2 = 1.0;
  Eigen::Index n = 0;
  Eigen::ArrayXd points;

  static Grid uniform(double x1, double x2, Eigen::Index n);

  double spacing() const { return (x2 - x1) / static_cast<double>(n - 1); }
  bool same_as(const Grid& other) const {
    return n == other.n && x1 == other.x1 && x2 == other.x2;
  }
};

inline Grid make_uniform_grid(double x1, double x2, Eigen::Index n) {
  return Grid::uniform(x1, x2, n);
}

/// Real-valued samples on a grid, one value per point.
struct Field {
  Grid grid;
  Eigen::ArrayXd values;

  Field(Grid g, Eigen::ArrayXd v);

  static Field from_function(const Grid& g,
                             const std::function<double(double)>& f);
  static Field constant(const Grid& g, double value);

  Eigen::Index size() const { return grid.n; }
};

void require_same_grid(const Field& a, const Field& b);

/// Composite trapezoid rule.
double quadrature(const Field& f);

/// Trapezoid rule with the first and last panel excluded; used when an
/// integrand is singular at endpoint zeros of the variation.
double quadrature_interior(const Field& f);

/// Second-order differentiation: central stencils inside, 3-point one-sided
/// stencils at the endpoints. Exact on quadratics.
Field derivative_x(const Field& f);

/// Samples of u^{1-alpha} (u + eps h)^alpha.
struct DeformedField {
  Field base;       // u
  Field variation;  // h
  double epsilon;
  Order alpha;
  Eigen::ArrayXd values;
};

/// Requires u > 0 and u + eps h > 0 pointwise for alpha not in {0,1}.
/// At eps = 0 the values equal u exactly; at alpha = 1 they equal u + eps h.
DeformedField deform_field(const Field& u, const Field& h, double epsilon,
                           Order alpha);

}  // namespace fvc
