#include "fvc/grid.hpp"

#include <cmath>

namespace fvc {

Grid Grid::uniform(double x1, double x2, Eigen::Index n) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || x1 >= x2)
    throw InvalidRangeError("grid: requires x1 < x2");
  if (n < 3) throw InvalidRangeError("grid: requires n >= 3");
  Grid g;
  g.x1 = x1;
  g.x2 = x2;
  g.n = n;
  g.points = Eigen::ArrayXd::LinSpaced(n, x1, x2);
  g.points(0) = x1;
  g.points(n - 1) = x2;
  return g;
}

Field::Field(Grid g, Eigen::ArrayXd v) : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.n)
    throw DomainError("field: value count does not match the grid");
  if (!values.allFinite()) throw DomainError("field: values must be finite");
}

Field Field::from_function(const Grid& g,
                           const std::function<double(double)>& f) {
  Eigen::ArrayXd v(g.n);
  for (Eigen::Index i = 0; i < g.n; ++i) v(i) = f(g.points(i));
  return Field(g, std::move(v));
}

Field Field::constant(const Grid& g, double value) {
  return Field(g, Eigen::ArrayXd::Constant(g.n, value));
}

void require_same_grid(const Field& a, const Field& b) {
  if (!a.grid.same_as(b.grid))
    throw DomainError("fields are defined on different grids");
}

double quadrature(const Field& f) {
  const double dx = f.grid.spacing();
  const Eigen::Index n = f.grid.n;
  double sum = 0.5 * (f.values(0) + f.values(n - 1));
  for (Eigen::Index i = 1; i < n - 1; ++i) sum += f.values(i);
  return dx * sum;
}

double quadrature_interior(const Field& f) {
  const double dx = f.grid.spacing();
  const Eigen::Index n = f.grid.n;
  double sum = 0.5 * (f.values(1) + f.values(n - 2));
  for (Eigen::Index i = 2; i < n - 2; ++i) sum += f.values(i);
  return dx * sum;
}

Field derivative_x(const Field& f) {
  const double dx = f.grid.spacing();
  const Eigen::Index n = f.grid.n;
  const Eigen::ArrayXd& v = f.values;
  Eigen::ArrayXd d(n);
  d(0) = (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * dx);
  for (Eigen::Index i = 1; i < n - 1; ++i)
    d(i) = (v(i + 1) - v(i - 1)) / (2.0 * dx);
  d(n - 1) = (3.0 * v(n - 1) - 4.0 * v(n - 2) + v(n - 3)) / (2.0 * dx);
  return Field(f.grid, std::move(d));
}

DeformedField deform_field(const Field& u, const Field& h, double epsilon,
                           Order alpha) {
  require_same_grid(u, h);
  require_unit_interval(alpha);
  if (!(epsilon >= 0.0)) throw DomainError("deform_field: epsilon must be >= 0");

  const double a = alpha.alpha;
  if (a != 0.0 && a != 1.0) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (!(u.values(i) > 0.0))
        throw PositivityError("deform_field: u must be strictly positive",
                              static_cast<std::size_t>(i));
      if (!(u.values(i) + epsilon * h.values(i) > 0.0))
        throw PositivityError(
            "deform_field: u + eps*h must be strictly positive",
            static_cast<std::size_t>(i));
    }
  }
  Eigen::ArrayXd values;
  if (epsilon == 0.0 || a == 0.0) {
    values = u.values;
  } else if (a == 1.0) {
    values = u.values + epsilon * h.values;
  } else {
    values = u.values.pow(1.0 - a) * (u.values + epsilon * h.values).pow(a);
  }
  return DeformedField{u, h, epsilon, alpha, std::move(values)};
}

}  // namespace fvc
