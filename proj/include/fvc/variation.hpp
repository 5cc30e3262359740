#pragma once

#include <array>
#include <vector>

#include "fvc/density.hpp"
#include "fvc/grid.hpp"
#include "fvc/order.hpp"

namespace fvc {

enum class Method { closed_form, gateaux_numeric, field_formalism };

const char* method_name(Method m);

/// Integrand samples of a (fractional) variation together with its
/// quadrature value. value == quadrature of the integrand by construction
/// (interior quadrature when the variation vanishes at the endpoints and
/// the integrand is singular there).
struct VariationResult {
  Order alpha;
  Field integrand;
  double value;
  Method method;
};

/// Pointwise fractional Euler-Lagrange residual.
struct Residual {
  Order alpha;
  Field values;
};

/// Integer-order Gateaux variation int [f_u h + f_ux h_x] dx.
/// With enforce_boundary the variation must vanish at both endpoints
/// (|h| <= 1e-12); pass false to evaluate the same integrand for
/// variations that do not vanish there.
VariationResult first_variation(const Density& f, const Field& u,
                                const Field& h, bool enforce_boundary = true);

/// f_u - d/dx f_ux on the grid.
Field variational_derivative(const Density& f, const Field& u);

/// Discrete sifting rule for linear functionals: returns g itself.
Field appendix_linear_vd(const Field& g);

/// Throw-over rule: returns -d/dx g.
Field appendix_throw_over(const Field& g);

/// The three Riemann-Liouville terms of the order-alpha epsilon-derivative
/// of int (u + eps h)^2 dx at the given eps, plus the Caputo-regularized
/// value (the divergent first term removed). Term 0 scales as eps^{-alpha}.
struct Step1Diagnostic {
  std::array<double, 3> rl_terms;
  double caputo_value;
};
Step1Diagnostic step1_diagnostic(const Field& u, const Field& h, Order order,
                                 double eps);

/// Deliberately flawed definition n Gamma(alpha+1) int u^{n-1} h^alpha dx:
/// correct at alpha = 1, wrong at alpha = 0.
VariationResult step2_variation(int n, const Field& u, const Field& h,
                                Order order);

/// Deliberately flawed definition n Gamma(alpha+1) int u^{n-alpha} h^alpha
/// dx: correct at alpha = 1, n-fold too large at alpha = 0.
VariationResult step3_variation(int n, const Field& u, const Field& h,
                                Order order);

/// Closed-form fractional Gateaux variation for densities without ux
/// dependence: per monomial c u^p the integrand contribution is
/// c Gamma(p alpha + 1)/Gamma((p-1) alpha + 1) u^{p-alpha} h^alpha.
/// Reduces to the first variation at alpha = 1 and to F[u] at alpha = 0.
VariationResult frac_variation(const Density& f, const Field& u,
                               const Field& h, Order order);

/// lambda(alpha, n) = Gamma(n a + 1) Gamma(n + 1 - a) /
///                    (Gamma((n-1) a + 1) Gamma(n + 1)).
double prop1_lambda(Order order, int n);

/// Coefficients of the closed-form variation of int u ux dx:
/// ux_term multiplies u^{1-alpha} h^alpha ux, hx_term multiplies
/// u^{2-alpha} h^{alpha-1} hx.
struct UuxCoefficients {
  double ux_term;
  double hx_term;
};
UuxCoefficients uux_proof_coefficients(Order order);

/// Closed-form fractional variation of int u ux dx with the
/// proof-consistent coefficients.
VariationResult frac_variation_uux(const Field& u, const Field& h,
                                   Order order);

/// An alternative coefficient set for the same variation (integrand
/// A1 ux h + A2 alpha u^{2-alpha} h^{alpha-1} hx). Kept as a known-bad
/// reference for the verify report; fails the numerical oracle for
/// alpha != 1.
VariationResult frac_variation_uux_stated_form(const Field& u, const Field& h,
                                               Order order);

/// Numerical Gateaux oracle: per grid point, the order-alpha
/// Riemann-Liouville derivative in eps (terminal eps0 = -u/h) of the
/// density evaluated on the deformed field, Richardson-extrapolated to
/// eps -> 0+, integrated over x. Independent of every closed form above.
VariationResult frac_variation_numeric(const Density& f, const Field& u,
                                       const Field& h, Order order,
                                       int steps = 2048);

/// Field-formalism variation Gamma(2-alpha) int sum_k (D^a_{u_k} f)
/// u_k^{alpha-1} delta^a u_k dx with slot 1 = u and slot 2 = ux.
VariationResult field_frac_variation(const Density& f,
                                     const std::vector<Field>& fields,
                                     const std::vector<Field>& variations,
                                     Order order);

/// Pointwise left-hand side of the fractional Euler-Lagrange equation
/// (D^a_{u1} f) u1^{2a-2} - d/dx (u1^{a-1} u2^{a-1} D^a_{u2} f) with
/// u1 = u, u2 = d/dx u. Classical Euler-Lagrange expression at alpha = 1.
Residual fele_residual(const Density& f, const Field& u, Order order);

/// Lagrange multiplier lambda(x) = -(D^a_{u2} f) Gamma(2-alpha) u2^{alpha-1}
/// eliminating the constraint u2 = d/dx u1.
Field lagrange_multiplier(const Density& f, const Field& u, Order order);

/// Residual rebuilt from the multiplier route; matches fele_residual up to
/// rounding and is exposed for consistency tests.
Residual fele_from_multiplier(const Density& f, const Field& u, Order order);

/// Max-norm discrepancy between differentiating before and after the
/// diagonal substitution rule (delta u)^a = Gamma(2-a) u^{a-1} delta^a u.
/// O(dx^2) for smooth fields; identically zero at alpha = 1.
double commutation_check(const Field& u, const Field& h, Order order);

}  // namespace fvc
