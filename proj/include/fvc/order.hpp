#pragma once

#include <cmath>

#include "fvc/errors.hpp"

namespace fvc {

/// Fractional order alpha with its whole/fractional decomposition.
struct Order {
  double alpha;
  int whole;    // floor(alpha)
  double frac;  // alpha - floor(alpha), in [0,1)

  explicit Order(double a) : alpha(a) {
    if (!std::isfinite(a) || a < 0.0)
      throw DomainError("fractional order must be finite and >= 0");
    whole = static_cast<int>(std::floor(a));
    frac = a - static_cast<double>(whole);
  }

  bool is_integer() const { return frac == 0.0; }
};

/// Requires alpha in [0,1]; variation operations are defined on this range.
inline void require_unit_interval(const Order& order) {
  if (order.alpha > 1.0)
    throw DomainError("order must lie in [0,1] for variation operations");
}

}  // namespace fvc
