#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fvc/grid.hpp"
#include "fvc/order.hpp"

namespace fvc {

/// c * u^p * ux^q with non-negative integer exponents.
struct Monomial {
  double coeff = 0.0;
  int p = 0;
  int q = 0;
};

/// Polynomial density f(u, ux) in canonical merged form: at most one term
/// per (p, q) pair, sorted by (p, q), zero terms dropped.
class Density {
 public:
  Density() = default;
  explicit Density(std::vector<Monomial> terms);

  /// Grammar: sum of terms; term := [real-coeff '*'] factor {'*' factor};
  /// factor := 'u' ['^' nonneg-int] | 'ux' ['^' nonneg-int].
  static Density parse(std::string_view expr);

  /// Deterministic canonical text; round-trips through parse().
  std::string str() const;

  const std::vector<Monomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool depends_on_ux() const;
  int max_u_power() const;

 private:
  std::vector<Monomial> terms_;
};

Density parse_density(std::string_view expr);

Density partial_u(const Density& f);
Density partial_ux(const Density& f);

/// c * u^pu * ux^qu with real exponents; produced by fractional partials
/// and deliberately not re-parseable as a Density.
struct FracMonomial {
  double coeff = 0.0;
  double u_exp = 0.0;
  double ux_exp = 0.0;
};

struct FracDensity {
  std::vector<FracMonomial> terms;
};

/// Convention for u-constant terms (p = 0) under a fractional partial.
enum class ConstantConvention { caputo, riemann_liouville };

/// Term-wise fractional power rule in u with terminal 0:
/// c u^p ux^q -> c Gamma(p+1)/Gamma(p+1-alpha) u^{p-alpha} ux^q.
/// p = 0 terms map to 0 (Caputo) or to c u^{-alpha}/Gamma(1-alpha) ux^q
/// (Riemann-Liouville); alpha = 0 is the identity under both conventions.
FracDensity frac_partial_u(const Density& f, Order order,
                           ConstantConvention convention =
                               ConstantConvention::caputo);

/// Symmetric operation in ux.
FracDensity frac_partial_ux(const Density& f, Order order,
                            ConstantConvention convention =
                                ConstantConvention::caputo);

/// Exact embedding of an integer density into the real-exponent form.
FracDensity to_frac(const Density& f);

/// Pointwise value of one term set at scalar (u, ux).
double evaluate_at(const FracDensity& f, double u, double ux);
double evaluate_at(const Density& f, double u, double ux);

/// Pointwise evaluation on a grid; requires strict positivity of u (or ux)
/// wherever a non-integer or negative exponent occurs.
Field evaluate(const FracDensity& f, const Field& u, const Field& ux);
Field evaluate(const Density& f, const Field& u, const Field& ux);

}  // namespace fvc
