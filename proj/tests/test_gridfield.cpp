#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fvc/errors.hpp"
#include "fvc/field_io.hpp"
#include "fvc/grid.hpp"

using namespace fvc;

TEST_CASE("uniform grid construction") {
  const Grid g = Grid::uniform(0.0, 1.0, 11);
  CHECK(g.n == 11);
  CHECK(g.points(0) == 0.0);
  CHECK(g.points(10) == 1.0);
  CHECK(g.spacing() == doctest::Approx(0.1));
  CHECK_THROWS_AS(Grid::uniform(0.0, 1.0, 2), InvalidRangeError);
  CHECK_THROWS_AS(Grid::uniform(1.0, 0.0, 11), InvalidRangeError);
  CHECK_THROWS_AS(Grid::uniform(1.0, 1.0, 11), InvalidRangeError);
}

TEST_CASE("field construction validates sizes and values") {
  const Grid g = Grid::uniform(0.0, 1.0, 5);
  CHECK_THROWS_AS(Field(g, Eigen::ArrayXd::Zero(4)), DomainError);
  Eigen::ArrayXd bad = Eigen::ArrayXd::Zero(5);
  bad(2) = std::nan("");
  CHECK_THROWS_AS(Field(g, bad), DomainError);
  const Field c = Field::constant(g, 2.5);
  CHECK((c.values == 2.5).all());
}

TEST_CASE("trapezoid quadrature is exact on linear functions") {
  const Grid g = Grid::uniform(0.0, 2.0, 101);
  const Field f = Field::from_function(g, [](double x) { return 3.0 * x + 1.0; });
  CHECK(quadrature(f) == doctest::Approx(8.0).epsilon(1e-14));
  // second-order on smooth functions
  const Field s = Field::from_function(g, [](double x) { return std::sin(x); });
  CHECK(quadrature(s) ==
        doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-4));
}

TEST_CASE("interior quadrature drops the first and last panel") {
  const Grid g = Grid::uniform(0.0, 1.0, 5);
  const Field f = Field::constant(g, 1.0);
  CHECK(quadrature(f) == doctest::Approx(1.0));
  CHECK(quadrature_interior(f) == doctest::Approx(0.5));
}

TEST_CASE("derivative_x is exact on quadratics including endpoints") {
  const Grid g = Grid::uniform(0.0, 1.0, 21);
  const Field f = Field::from_function(
      g, [](double x) { return 2.0 * x * x - 3.0 * x + 1.0; });
  const Field d = derivative_x(f);
  for (Eigen::Index i = 0; i < g.n; ++i)
    CHECK(d.values(i) ==
          doctest::Approx(4.0 * g.points(i) - 3.0).epsilon(1e-12));
}

TEST_CASE("derivative_x converges at second order") {
  auto err = [](Eigen::Index n) {
    const Grid g = Grid::uniform(0.0, 1.0, n);
    const Field f =
        Field::from_function(g, [](double x) { return std::exp(x); });
    const Field d = derivative_x(f);
    return (d.values - f.values).abs().maxCoeff();
  };
  const double ratio = err(51) / err(101);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("deform_field identities") {
  const Grid g = Grid::uniform(0.0, 1.0, 11);
  const Field u = Field::from_function(g, [](double x) { return x + 1.0; });
  const Field h = Field::constant(g, 0.5);

  SUBCASE("eps = 0 returns u exactly") {
    const auto d = deform_field(u, h, 0.0, Order(0.5));
    CHECK((d.values == u.values).all());
  }
  SUBCASE("alpha = 1 returns u + eps h exactly") {
    const auto d = deform_field(u, h, 0.25, Order(1.0));
    CHECK((d.values == u.values + 0.25 * h.values).all());
  }
  SUBCASE("alpha = 0 returns u") {
    const auto d = deform_field(u, h, 0.25, Order(0.0));
    CHECK((d.values == u.values).all());
  }
  SUBCASE("interpolation property") {
    const auto d = deform_field(u, h, 0.25, Order(0.5));
    for (Eigen::Index i = 0; i < g.n; ++i) {
      const double expect = std::pow(u.values(i), 0.5) *
                            std::pow(u.values(i) + 0.25 * h.values(i), 0.5);
      CHECK(d.values(i) == doctest::Approx(expect).epsilon(1e-15));
    }
  }
  SUBCASE("positivity enforced for fractional alpha") {
    const Field w = Field::from_function(g, [](double x) { return x - 0.5; });
    CHECK_THROWS_AS(deform_field(w, h, 0.0, Order(0.5)), PositivityError);
    const Field hneg = Field::constant(g, -4.0);
    CHECK_THROWS_AS(deform_field(u, hneg, 0.3, Order(0.5)), PositivityError);
    CHECK_THROWS_AS(deform_field(u, h, -1.0, Order(0.5)), DomainError);
  }
}

TEST_CASE("csv round trip preserves every bit") {
  const Grid g = Grid::uniform(0.0, 1.0, 17);
  const Field u = Field::from_function(
      g, [](double x) { return std::sin(7.0 * x) + 2.0; });
  const Field h = Field::from_function(g, [](double x) { return x * x; });
  std::ostringstream out;
  write_field_csv(out, u, &h);
  std::istringstream in(out.str());
  const FieldFile ff = read_field_csv(in);
  REQUIRE(ff.h.has_value());
  CHECK((ff.u.values == u.values).all());
  CHECK((ff.h->values == h.values).all());
  CHECK(ff.u.grid.same_as(g));
}

TEST_CASE("csv reader rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_field_csv(in);
  };
  CHECK_THROWS_AS(parse(""), DomainError);
  CHECK_THROWS_AS(parse("a,b\n1,2\n"), DomainError);
  CHECK_THROWS_AS(parse("x,u\n0,1\n"), DomainError);  // too few rows
  CHECK_THROWS_AS(parse("x,u\n0,1\n0.5,1\n0.7,1\n"),
                  InvalidRangeError);  // non-uniform spacing
  CHECK_THROWS_AS(parse("x,u\n0,1\n0.5,oops\n1,1\n"), DomainError);
}
