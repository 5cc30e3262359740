#pragma once

#include <functional>

#include "fvc/grid.hpp"
#include "fvc/order.hpp"

namespace fvc::fracops {

/// One power term c (x - a)^k; the power rules require k > -1.
struct PowerTerm {
  double coeff = 1.0;
  double exponent = 0.0;  // k (or beta)
  double base = 0.0;      // a (or eps0)
};

/// Riemann-Liouville power rule with terminal at the term base:
/// c Gamma(k+1)/Gamma(k+1-alpha) (x-a)^{k-alpha}, x > a.
double rl_power_rule(Order order, const PowerTerm& term, double x);

/// Riemann-Liouville derivative of a constant: c x^{-alpha}/Gamma(1-alpha).
double rl_constant(Order order, double c, double x);

/// Caputo power rule: equals the RL rule for exponent > 0, zero for a
/// constant term (exponent = 0).
double caputo_power_rule(Order order, const PowerTerm& term, double x);

/// RL derivative in eps with lower terminal eps0 of (eps-eps0)^beta.
double rl_shifted_power(Order order, double beta, double eps0, double eps);

/// RL derivative in eps with lower terminal eps0 of
/// (eps-eps0)^beta eps^gamma, expressed through a Gauss hypergeometric
/// factor with argument z = -(eps-eps0)/eps0, required to lie in [0,1].
double rl_shifted_product(Order order, double beta, double gamma_exp,
                          double eps0, double eps);

/// Grunwald-Letnikov approximation with terminal at the grid's left
/// endpoint, evaluated at sample x_index. First-order convergent.
double gl_fractional_derivative(const Field& samples, Order order,
                                Eigen::Index x_index);

/// Direct discretization of the RL definition: graded product-trapezoid
/// quadrature of the singular integral followed by Richardson-extrapolated
/// central differencing in the upper limit. Independent oracle for every
/// closed-form operator above. Throws ConvergenceError if halving the panel
/// count moves the result by more than tolerance (relative).
double rl_numeric(const std::function<double(double)>& phi, Order order,
                  double eps0, double eps, int steps, double tolerance = 1e-2);

}  // namespace fvc::fracops
