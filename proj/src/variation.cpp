#include "fvc/variation.hpp"

#include <cmath>
#include <limits>

#include "fvc/fracops.hpp"
#include "fvc/specfun.hpp"

namespace fvc {

namespace {

using specfun::gamma;
using specfun::gamma_ratio;

void require_positive_everywhere(const Field& f, const char* what) {
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (!(f.values(i) > 0.0))
      throw PositivityError(std::string(what) + " must be strictly positive",
                            static_cast<std::size_t>(i));
}

void require_nonnegative_everywhere(const Field& f, const char* what) {
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (!(f.values(i) >= 0.0))
      throw PositivityError(std::string(what) + " must be non-negative",
                            static_cast<std::size_t>(i));
}

void require_positive_interior(const Field& h, const char* what) {
  for (Eigen::Index i = 1; i < h.size() - 1; ++i)
    if (!(h.values(i) > 0.0))
      throw PositivityError(
          std::string(what) + " must be strictly positive on the interior",
          static_cast<std::size_t>(i));
  for (Eigen::Index i : {Eigen::Index(0), h.size() - 1})
    if (h.values(i) < 0.0)
      throw PositivityError(std::string(what) + " must be non-negative",
                            static_cast<std::size_t>(i));
}

bool has_endpoint_zero(const Field& h) {
  return h.values(0) == 0.0 || h.values(h.size() - 1) == 0.0;
}

VariationResult make_result(Order order, Field integrand, Method method,
                            bool interior_only = false) {
  const double value =
      interior_only ? quadrature_interior(integrand) : quadrature(integrand);
  return VariationResult{order, std::move(integrand), value, method};
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::gateaux_numeric: return "gateaux_numeric";
    case Method::field_formalism: return "field_formalism";
  }
  return "unknown";
}

VariationResult first_variation(const Density& f, const Field& u,
                                const Field& h, bool enforce_boundary) {
  require_same_grid(u, h);
  if (enforce_boundary) {
    if (std::abs(h.values(0)) > 1e-12 ||
        std::abs(h.values(h.size() - 1)) > 1e-12)
      throw BoundaryError(
          "first_variation: variation must vanish at the grid endpoints");
  }
  const Field ux = derivative_x(u);
  const Field hx = derivative_x(h);
  const Field fu = evaluate(partial_u(f), u, ux);
  const Field fux = evaluate(partial_ux(f), u, ux);
  Field integrand(u.grid, fu.values * h.values + fux.values * hx.values);
  return make_result(Order(1.0), std::move(integrand), Method::closed_form);
}

Field variational_derivative(const Density& f, const Field& u) {
  const Field ux = derivative_x(u);
  const Field fu = evaluate(partial_u(f), u, ux);
  const Field fux = evaluate(partial_ux(f), u, ux);
  return Field(u.grid, fu.values - derivative_x(fux).values);
}

Field appendix_linear_vd(const Field& g) { return g; }

Field appendix_throw_over(const Field& g) {
  return Field(g.grid, -derivative_x(g).values);
}

Step1Diagnostic step1_diagnostic(const Field& u, const Field& h, Order order,
                                 double eps) {
  require_same_grid(u, h);
  const double a = order.alpha;
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("step1_diagnostic: requires alpha in (0,1)");
  if (!(eps > 0.0)) throw DomainError("step1_diagnostic: requires eps > 0");
  const double int_u2 = quadrature(Field(u.grid, u.values.square()));
  const double int_uh = quadrature(Field(u.grid, u.values * h.values));
  const double int_h2 = quadrature(Field(u.grid, h.values.square()));
  Step1Diagnostic d;
  d.rl_terms[0] = std::pow(eps, -a) / gamma(1.0 - a) * int_u2;
  d.rl_terms[1] = 2.0 * std::pow(eps, 1.0 - a) / gamma(2.0 - a) * int_uh;
  d.rl_terms[2] = 2.0 * std::pow(eps, 2.0 - a) / gamma(3.0 - a) * int_h2;
  d.caputo_value = d.rl_terms[1] + d.rl_terms[2];
  return d;
}

VariationResult step2_variation(int n, const Field& u, const Field& h,
                                Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  if (n < 1) throw DomainError("step2_variation: requires n >= 1");
  const double a = order.alpha;
  require_positive_interior(h, "step2_variation: h");
  FracDensity integrand_density;
  integrand_density.terms.push_back(
      {static_cast<double>(n) * gamma(a + 1.0), static_cast<double>(n) - 1.0,
       a});
  Field integrand = evaluate(integrand_density, u, h);
  VariationResult r = make_result(order, std::move(integrand),
                                  Method::closed_form);
  return r;
}

VariationResult step3_variation(int n, const Field& u, const Field& h,
                                Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  if (n < 1) throw DomainError("step3_variation: requires n >= 1");
  const double a = order.alpha;
  if (a != 0.0 && a != 1.0) require_positive_everywhere(u, "step3_variation: u");
  require_positive_interior(h, "step3_variation: h");
  FracDensity integrand_density;
  integrand_density.terms.push_back(
      {static_cast<double>(n) * gamma(a + 1.0), static_cast<double>(n) - a,
       a});
  Field integrand = evaluate(integrand_density, u, h);
  return make_result(order, std::move(integrand), Method::closed_form);
}

VariationResult frac_variation(const Density& f, const Field& u,
                               const Field& h, Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  if (f.depends_on_ux())
    throw DomainError(
        "frac_variation: density must not depend on ux (see "
        "frac_variation_uux)");
  const double a = order.alpha;
  bool needs_strict_u = false;
  for (const Monomial& t : f.terms())
    if (static_cast<double>(t.p) - a < 0.0) needs_strict_u = true;
  if (a != 0.0 && a != 1.0) {
    // Zeros of u are fine as long as every integrand exponent p - alpha
    // stays non-negative (pow(0, positive) = 0).
    if (needs_strict_u)
      require_positive_everywhere(u, "frac_variation: u");
    else
      require_nonnegative_everywhere(u, "frac_variation: u");
    require_positive_interior(h, "frac_variation: h");
  }
  FracDensity integrand_density;
  for (const Monomial& t : f.terms()) {
    const double p = static_cast<double>(t.p);
    const double coeff =
        t.coeff * gamma_ratio(p * a + 1.0, (p - 1.0) * a + 1.0);
    integrand_density.terms.push_back({coeff, p - a, a});
  }
  Field integrand = evaluate(integrand_density, u, h);
  return make_result(order, std::move(integrand), Method::closed_form);
}

double prop1_lambda(Order order, int n) {
  require_unit_interval(order);
  if (n < 1) throw DomainError("prop1_lambda: requires n >= 1");
  const double a = order.alpha;
  const double fn = static_cast<double>(n);
  return gamma(fn * a + 1.0) * gamma(fn + 1.0 - a) /
         (gamma((fn - 1.0) * a + 1.0) * gamma(fn + 1.0));
}

UuxCoefficients uux_proof_coefficients(Order order) {
  const double a = order.alpha;
  // The a -> 0 limit of the second bracket term a Gamma(2a)/Gamma(a) is 1/2,
  // but the variation below is only used for a in (0,1] where the direct
  // evaluation is regular.
  const double ux_term = (1.0 - a) * gamma_ratio(2.0 * a + 1.0, a + 1.0) +
                         a * gamma_ratio(2.0 * a, a);
  const double hx_term = a * a * gamma_ratio(2.0 * a, a + 1.0);
  return {ux_term, hx_term};
}

VariationResult frac_variation_uux(const Field& u, const Field& h,
                                   Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  const double a = order.alpha;
  if (!(a > 0.0))
    throw DomainError("frac_variation_uux: requires alpha in (0,1]");
  if (a != 1.0) require_positive_everywhere(u, "frac_variation_uux: u");
  require_positive_interior(h, "frac_variation_uux: h");
  const Field ux = derivative_x(u);
  const Field hx = derivative_x(h);
  const UuxCoefficients c = uux_proof_coefficients(order);
  const bool interior_only = a != 1.0 && has_endpoint_zero(h);

  Eigen::ArrayXd integrand(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const bool endpoint = i == 0 || i == u.size() - 1;
    if (endpoint && h.values(i) == 0.0 && a != 1.0) {
      integrand(i) = 0.0;
      continue;
    }
    integrand(i) = c.ux_term * std::pow(u.values(i), 1.0 - a) *
                       std::pow(h.values(i), a) * ux.values(i) +
                   c.hx_term * std::pow(u.values(i), 2.0 - a) *
                       std::pow(h.values(i), a - 1.0) * hx.values(i);
  }
  return make_result(order, Field(u.grid, std::move(integrand)),
                     Method::closed_form, interior_only);
}

VariationResult frac_variation_uux_stated_form(const Field& u, const Field& h,
                                               Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  const double a = order.alpha;
  if (!(a > 0.0))
    throw DomainError("frac_variation_uux_stated_form: requires alpha > 0");
  const Field ux = derivative_x(u);
  const Field hx = derivative_x(h);
  const double a1 = (1.0 - a) * gamma_ratio(2.0 * a + 1.0, a + 1.0) +
                    a * gamma_ratio(2.0 * a, a);
  const double a2 = a * a * gamma_ratio(2.0 * a, a + 1.0);
  const bool interior_only = a != 1.0 && has_endpoint_zero(h);

  Eigen::ArrayXd integrand(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const bool endpoint = i == 0 || i == u.size() - 1;
    if (endpoint && h.values(i) == 0.0 && a != 1.0) {
      integrand(i) = 0.0;
      continue;
    }
    integrand(i) = a1 * ux.values(i) * h.values(i) +
                   a2 * std::pow(u.values(i), 2.0 - a) * a *
                       std::pow(h.values(i), a - 1.0) * hx.values(i);
  }
  return make_result(order, Field(u.grid, std::move(integrand)),
                     Method::closed_form, interior_only);
}

VariationResult frac_variation_numeric(const Density& f, const Field& u,
                                       const Field& h, Order order,
                                       int steps) {
  require_same_grid(u, h);
  const double a = order.alpha;
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("frac_variation_numeric: requires alpha in (0,1)");
  bool has_constant_term = false;
  for (const Monomial& t : f.terms())
    if (t.p == 0 && t.q == 0) has_constant_term = true;
  // A zero of u pins the deformed field to zero there, so the pointwise
  // derivative vanishes for densities without a constant term.
  if (has_constant_term || f.depends_on_ux())
    require_positive_everywhere(u, "frac_variation_numeric: u");
  else
    require_nonnegative_everywhere(u, "frac_variation_numeric: u");
  require_positive_interior(h, "frac_variation_numeric: h");

  const bool with_ux = f.depends_on_ux();
  const FracDensity fd = to_frac(f);
  const Field ux = derivative_x(u);
  const Field hx = derivative_x(h);

  // Evaluation point for the eps -> 0+ limit, shared by all grid points.
  double min_ratio = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (h.values(i) > 0.0 && u.values(i) > 0.0)
      min_ratio = std::min(min_ratio, u.values(i) / h.values(i));
  const double delta = 1e-2 * min_ratio;

  const bool interior_only = with_ux && has_endpoint_zero(h);
  Eigen::ArrayXd integrand(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double ui = u.values(i);
    const double hi = h.values(i);
    if (hi == 0.0 || ui == 0.0) {
      // Endpoint zeros of the variation (or of u) pin the deformation:
      // the pointwise derivative is zero there.
      integrand(i) = 0.0;
      continue;
    }
    const double uxi = ux.values(i);
    const double hxi = hx.values(i);
    const double eps0 = -ui / hi;
    auto psi = [&](double e) {
      const double w = std::max(ui + e * hi, 0.0);
      const double v = std::pow(ui, 1.0 - a) * std::pow(w, a);
      double vx = 0.0;
      if (with_ux) {
        const double wa1 = std::pow(w, a - 1.0);
        vx = ((1.0 - a) * std::pow(ui, -a) * std::pow(w, a) +
              a * std::pow(ui, 1.0 - a) * wa1) *
                 uxi +
             a * std::pow(ui, 1.0 - a) * wa1 * e * hxi;
      }
      return evaluate_at(fd, v, vx);
    };
    const double d1 = fracops::rl_numeric(psi, order, eps0, delta, steps);
    const double d2 = fracops::rl_numeric(psi, order, eps0, 0.5 * delta, steps);
    integrand(i) = 2.0 * d2 - d1;
  }
  return make_result(order, Field(u.grid, std::move(integrand)),
                     Method::gateaux_numeric, interior_only);
}

VariationResult field_frac_variation(const Density& f,
                                     const std::vector<Field>& fields,
                                     const std::vector<Field>& variations,
                                     Order order) {
  require_unit_interval(order);
  if (fields.empty() || fields.size() > 2)
    throw DomainError("field_frac_variation: requires 1 or 2 fields");
  if (variations.size() != fields.size())
    throw DomainError(
        "field_frac_variation: one variation per field required");
  for (std::size_t k = 1; k < fields.size(); ++k)
    require_same_grid(fields[0], fields[k]);
  for (const Field& v : variations) require_same_grid(fields[0], v);
  if (fields.size() == 1 && f.depends_on_ux())
    throw DomainError(
        "field_frac_variation: density uses slot 2 but only one field given");

  const double a = order.alpha;
  if (a != 1.0)
    for (const Field& fld : fields)
      require_positive_everywhere(fld, "field_frac_variation: field");

  const Field& u1 = fields[0];
  const Field u2 = fields.size() == 2 ? fields[1]
                                      : Field::constant(u1.grid, 1.0);
  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(u1.size());
  const Field d1 = evaluate(frac_partial_u(f, order), u1, u2);
  sum += d1.values * u1.values.pow(a - 1.0) * variations[0].values;
  if (fields.size() == 2) {
    const Field d2 = evaluate(frac_partial_ux(f, order), u1, u2);
    sum += d2.values * u2.values.pow(a - 1.0) * variations[1].values;
  }
  Field integrand(u1.grid, gamma(2.0 - a) * sum);
  return make_result(order, std::move(integrand), Method::field_formalism);
}

namespace {

struct FeleParts {
  Field a_term;   // (D^a_{u1} f) u1^{2a-2}
  Field inner;    // u1^{a-1} u2^{a-1} D^a_{u2} f
  Field d2;       // D^a_{u2} f
  Field u1, u2;
};

FeleParts fele_parts(const Density& f, const Field& u, Order order) {
  require_unit_interval(order);
  const double a = order.alpha;
  if (!(a > 0.0)) throw DomainError("fele_residual: requires alpha in (0,1]");
  Field u2 = derivative_x(u);
  if (a != 1.0) {
    require_positive_everywhere(u, "fele: u");
    require_positive_everywhere(u2, "fele: ux");
  }
  Field da_u1 = evaluate(frac_partial_u(f, order), u, u2);
  Field da_u2 = evaluate(frac_partial_ux(f, order), u, u2);
  Field a_term(u.grid,
               da_u1.values * u.values.pow(2.0 * a - 2.0));
  Field inner(u.grid, u.values.pow(a - 1.0) * u2.values.pow(a - 1.0) *
                          da_u2.values);
  return FeleParts{std::move(a_term), std::move(inner), std::move(da_u2),
                   u, std::move(u2)};
}

}  // namespace

Residual fele_residual(const Density& f, const Field& u, Order order) {
  FeleParts parts = fele_parts(f, u, order);
  Field res(u.grid,
            parts.a_term.values - derivative_x(parts.inner).values);
  return Residual{order, std::move(res)};
}

Field lagrange_multiplier(const Density& f, const Field& u, Order order) {
  FeleParts parts = fele_parts(f, u, order);
  const double a = order.alpha;
  return Field(u.grid, -gamma(2.0 - a) * parts.u2.values.pow(a - 1.0) *
                           parts.d2.values);
}

Residual fele_from_multiplier(const Density& f, const Field& u, Order order) {
  FeleParts parts = fele_parts(f, u, order);
  const double a = order.alpha;
  const Field lambda = lagrange_multiplier(f, u, order);
  Field lam_u1(u.grid, lambda.values * u.values.pow(a - 1.0));
  Field res(u.grid, parts.a_term.values +
                        derivative_x(lam_u1).values / gamma(2.0 - a));
  return Residual{order, std::move(res)};
}

double commutation_check(const Field& u, const Field& h, Order order) {
  require_same_grid(u, h);
  require_unit_interval(order);
  const double a = order.alpha;
  if ((h.values == 0.0).all()) return 0.0;
  if (a != 1.0) {
    require_positive_everywhere(u, "commutation_check: u");
    require_positive_everywhere(h, "commutation_check: h");
  }
  const double g2 = gamma(2.0 - a);
  // delta^a u from the diagonal substitution rule.
  Field substituted(u.grid, u.values.pow(1.0 - a) * h.values.pow(a) / g2);
  const Field path_a = derivative_x(substituted);
  const Field ux = derivative_x(u);
  const Field hx = derivative_x(h);
  Eigen::ArrayXd path_b =
      ((1.0 - a) * u.values.pow(-a) * ux.values * h.values.pow(a) +
       a * u.values.pow(1.0 - a) * h.values.pow(a - 1.0) * hx.values) /
      g2;
  return (path_a.values - path_b).abs().maxCoeff();
}

}  // namespace fvc
