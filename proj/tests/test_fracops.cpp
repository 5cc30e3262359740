#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fvc/errors.hpp"
#include "fvc/fracops.hpp"
#include "fvc/specfun.hpp"

using namespace fvc;
using namespace fvc::fracops;
const auto Gamma = specfun::gamma;

TEST_CASE("power rule reduces to classical derivatives") {
  const PowerTerm x2{1.0, 2.0, 0.0};
  CHECK(rl_power_rule(Order(1.0), x2, 1.5) == doctest::Approx(3.0));
  CHECK(rl_power_rule(Order(0.0), x2, 1.5) == doctest::Approx(2.25));
  CHECK(caputo_power_rule(Order(1.0), x2, 1.5) == doctest::Approx(3.0));
}

TEST_CASE("half derivative of x is 2 sqrt(x/pi)") {
  const PowerTerm x1{1.0, 1.0, 0.0};
  for (double x : {0.25, 1.0, 4.0}) {
    const double expect = 2.0 * std::sqrt(x / M_PI);
    CHECK(rl_power_rule(Order(0.5), x1, x) ==
          doctest::Approx(expect).epsilon(1e-14));
    CHECK(caputo_power_rule(Order(0.5), x1, x) ==
          doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("constant: RL keeps a trace, Caputo kills it") {
  const PowerTerm c{3.0, 0.0, 0.0};
  const double x = 2.0;
  CHECK(rl_constant(Order(0.5), 3.0, x) ==
        doctest::Approx(3.0 * std::pow(x, -0.5) / Gamma(0.5)).epsilon(1e-14));
  CHECK(caputo_power_rule(Order(0.5), c, x) == 0.0);
  CHECK(rl_constant(Order(0.0), 3.0, x) == 3.0);
  CHECK(caputo_power_rule(Order(0.0), c, x) == 3.0);
}

TEST_CASE("closed forms agree with the direct RL quadrature oracle") {
  for (double a : {0.25, 0.5, 0.75}) {
    for (double beta : {0.5, 1.0, 1.5, 2.0}) {
      const PowerTerm term{1.0, beta, 0.0};
      const double x = 0.8;
      const double closed = rl_power_rule(Order(a), term, x);
      const double numeric = rl_numeric(
          [beta](double s) { return std::pow(s, beta); }, Order(a), 0.0, x,
          512);
      CHECK(numeric ==
            doctest::Approx(closed).epsilon(1e-3));
    }
  }
}

TEST_CASE("shifted power rule matches the unshifted one") {
  const Order half(0.5);
  // shifting the terminal just translates the variable
  CHECK(rl_shifted_power(half, 1.5, -2.0, 0.5) ==
        doctest::Approx(rl_power_rule(half, {1.0, 1.5, 0.0}, 2.5))
            .epsilon(1e-13));
  CHECK_THROWS_AS(rl_shifted_power(half, -1.5, -2.0, 0.5), DomainError);
}

TEST_CASE("shifted product rule at eps = 0 uses the terminating 2F1") {
  // D^a [(eps-eps0)^beta eps^gamma] at eps = 0 with integer gamma reduces
  // to a polynomial hypergeometric factor; cross-check against the
  // quadrature oracle at small positive eps.
  const Order a(0.5);
  const double eps0 = -1.0, beta = 0.5, gam = 1.0, eps = -0.25;
  const double closed = rl_shifted_product(a, beta, gam, eps0, eps);
  const double numeric = rl_numeric(
      [&](double e) { return std::pow(e - eps0, beta) * std::pow(e, gam); },
      a, eps0, eps, 512);
  CHECK(numeric == doctest::Approx(closed).epsilon(1e-3));
  // gamma = 0 degenerates to the plain shifted power
  CHECK(rl_shifted_product(a, beta, 0.0, eps0, eps) ==
        doctest::Approx(rl_shifted_power(a, beta, eps0, eps)));
}

TEST_CASE("Grunwald-Letnikov converges to the power rule") {
  const Order a(0.5);
  auto gl_error = [&](Eigen::Index n) {
    const Grid g = Grid::uniform(0.0, 1.0, n);
    const Field f = Field::from_function(g, [](double x) { return x * x; });
    const double exact =
        rl_power_rule(a, {1.0, 2.0, 0.0}, g.points(n - 1));
    return std::abs(gl_fractional_derivative(f, a, n - 1) - exact);
  };
  const double e1 = gl_error(257);
  const double e2 = gl_error(513);
  const double order = std::log2(e1 / e2);
  CHECK(order > 0.9);  // first-order scheme
  CHECK(gl_error(1025) < 2e-3);
}

TEST_CASE("GL at integer orders matches finite differences") {
  const Grid g = Grid::uniform(0.0, 1.0, 101);
  const Field f = Field::from_function(g, [](double x) { return x * x; });
  // order 1: backward difference of x^2 at x = 1
  CHECK(gl_fractional_derivative(f, Order(1.0), 100) ==
        doctest::Approx(2.0).epsilon(1e-1));
  // order 0: identity
  CHECK(gl_fractional_derivative(f, Order(0.0), 100) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rl_numeric flags non-convergent requests") {
  CHECK_THROWS_AS(rl_numeric([](double) { return 1.0; }, Order(0.5), 0.0,
                             1.0, 8),
                  DomainError);  // too few panels
}

TEST_CASE("power rule domain checks") {
  CHECK_THROWS_AS(rl_power_rule(Order(0.5), {1.0, -1.5, 0.0}, 1.0),
                  DomainError);
  CHECK_THROWS_AS(rl_power_rule(Order(0.5), {1.0, 2.0, 1.0}, 0.5),
                  DomainError);  // x <= base
}
