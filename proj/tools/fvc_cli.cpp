#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <vector>

#include "fvc/density.hpp"
#include "fvc/field_io.hpp"
#include "fvc/fracops.hpp"
#include "fvc/specfun.hpp"
#include "fvc/variation.hpp"
#include "fvc/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

std::string fmt(double v) { return fvc::format_double(v); }

fvc::FieldFile load_fields(const std::string& path, bool need_h) {
  fvc::FieldFile ff = fvc::read_field_file(path);
  if (need_h && !ff.h)
    throw fvc::DomainError("field file " + path +
                           " must provide an h column for this command");
  return ff;
}

void print_variation(const fvc::VariationResult& r,
                     const std::string& format, std::ostream& out,
                     double oracle = std::nan(""), double rel_dev = std::nan("")) {
  if (format == "json") {
    json j;
    j["alpha"] = r.alpha.alpha;
    j["value"] = r.value;
    j["method"] = fvc::method_name(r.method);
    j["integrand"] = std::vector<double>(
        r.integrand.values.data(),
        r.integrand.values.data() + r.integrand.values.size());
    if (!std::isnan(oracle)) {
      j["oracle_value"] = oracle;
      j["oracle_rel_dev"] = rel_dev;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "# alpha=" << fmt(r.alpha.alpha) << " value=" << fmt(r.value)
        << " method=" << fvc::method_name(r.method);
    if (!std::isnan(oracle))
      out << " oracle=" << fmt(oracle) << " rel_dev=" << fmt(rel_dev);
    out << "\nx,integrand\n";
    for (Eigen::Index i = 0; i < r.integrand.size(); ++i)
      out << fmt(r.integrand.grid.points(i)) << ','
          << fmt(r.integrand.values(i)) << '\n';
  }
}

struct VariationOptions {
  std::string expr;
  std::string field_path;
  double alpha = 0.5;
  bool oracle = false;
  bool check = false;
  double tolerance = 1e-3;
  int steps = 2048;
  std::string format = "csv";
};

int run_variation(const VariationOptions& opt) {
  const fvc::Density f = fvc::Density::parse(opt.expr);
  const fvc::FieldFile ff = load_fields(opt.field_path, true);
  const fvc::Order order(opt.alpha);

  fvc::VariationResult r =
      f.depends_on_ux() && f.str() == "u*ux" && order.alpha > 0.0
          ? fvc::frac_variation_uux(ff.u, *ff.h, order)
          : fvc::frac_variation(f, ff.u, *ff.h, order);

  double oracle = std::nan("");
  double rel_dev = std::nan("");
  if (opt.oracle) {
    oracle =
        fvc::frac_variation_numeric(f, ff.u, *ff.h, order, opt.steps).value;
    rel_dev = std::abs(r.value - oracle) /
              std::max(std::abs(oracle), 1e-300);
  }
  print_variation(r, opt.format, std::cout, oracle, rel_dev);
  if (opt.check && opt.oracle && rel_dev > opt.tolerance) {
    std::cerr << "tolerance breach: rel_dev=" << fmt(rel_dev) << " > "
              << fmt(opt.tolerance) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_euler_lagrange(const std::string& expr, const std::string& field_path,
                       double alpha, const std::string& format) {
  const fvc::Density f = fvc::Density::parse(expr);
  const fvc::FieldFile ff = load_fields(field_path, false);
  const fvc::Residual res = fvc::fele_residual(f, ff.u, fvc::Order(alpha));
  if (format == "json") {
    json j;
    j["alpha"] = alpha;
    j["residual"] = std::vector<double>(
        res.values.values.data(),
        res.values.values.data() + res.values.values.size());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "x,residual\n";
    for (Eigen::Index i = 0; i < res.values.size(); ++i)
      std::cout << fmt(res.values.grid.points(i)) << ','
                << fmt(res.values.values(i)) << '\n';
  }
  return kExitOk;
}

int run_verify(double tolerance, const std::string& only,
               const std::string& format) {
  fvc::verify::VerifyOptions opts;
  opts.tolerance_override = tolerance;
  opts.only = only;
  const auto checks = fvc::verify::run_checks(opts);
  if (checks.empty()) {
    std::cerr << "no checks match filter '" << only << "'\n";
    return kExitInputError;
  }
  if (format == "json") {
    json j;
    j["checks"] = json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"anchor", c.anchor},
                             {"expected", c.expected},
                             {"computed", c.computed},
                             {"deviation", c.deviation},
                             {"pass", c.pass}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("%-32s %-10s %-24s %-24s %-12s %s\n", "name", "status",
                "expected", "computed", "deviation", "anchor");
    for (const auto& c : checks)
      std::printf("%-32s %-10s %-24s %-24s %-12.3g %s\n", c.name.c_str(),
                  c.pass ? "pass" : "FAIL", fmt(c.expected).c_str(),
                  fmt(c.computed).c_str(), c.deviation, c.anchor.c_str());
  }
  return fvc::verify::all_pass(checks) ? kExitOk : kExitCheckFailed;
}

struct SweepOptions {
  std::string expr;
  std::string field_path;
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  double alpha_step = 0.1;
  bool oracle = false;
  int steps = 1024;
  int lambda_n = 0;
};

int run_sweep(const SweepOptions& opt) {
  if (opt.alpha_step <= 0.0 || opt.alpha_max < opt.alpha_min)
    throw fvc::InvalidRangeError("sweep: empty or invalid alpha range");

  std::vector<double> alphas;
  for (double a = opt.alpha_min; a <= opt.alpha_max + 1e-12;
       a += opt.alpha_step)
    alphas.push_back(std::min(a, opt.alpha_max));
  if (alphas.empty())
    throw fvc::InvalidRangeError("sweep: empty alpha range");

  if (opt.lambda_n > 0) {
    std::cout << "alpha,lambda\n";
    for (double a : alphas)
      std::cout << fmt(a) << ','
                << fmt(fvc::prop1_lambda(fvc::Order(a), opt.lambda_n))
                << '\n';
    return kExitOk;
  }

  const fvc::Density f = fvc::Density::parse(opt.expr);
  const fvc::FieldFile ff = load_fields(opt.field_path, true);
  std::cout << "alpha,value_closed,value_oracle,rel_dev\n";
  for (double a : alphas) {
    const fvc::Order order(a);
    const bool uux_form = f.depends_on_ux() && a > 0.0;
    const double closed =
        uux_form ? fvc::frac_variation_uux(ff.u, *ff.h, order).value
                 : fvc::frac_variation(f, ff.u, *ff.h, order).value;
    std::string oracle_cell = "";
    std::string dev_cell = "";
    if (opt.oracle) {
      double oracle;
      if (a == 0.0) {
        oracle = fvc::quadrature(
            fvc::evaluate(f, ff.u, fvc::derivative_x(ff.u)));
      } else if (a == 1.0) {
        oracle = fvc::first_variation(f, ff.u, *ff.h, false).value;
      } else {
        oracle = fvc::frac_variation_numeric(f, ff.u, *ff.h, order,
                                             opt.steps)
                     .value;
      }
      oracle_cell = fmt(oracle);
      dev_cell = fmt(std::abs(closed - oracle) /
                     std::max(std::abs(oracle), 1e-300));
    }
    std::cout << fmt(a) << ',' << fmt(closed) << ',' << oracle_cell << ','
              << dev_cell << '\n';
  }
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"fractional variational calculus toolkit"};
  app.require_subcommand(1);

  // specfun ---------------------------------------------------------------
  auto* sp = app.add_subcommand("specfun", "evaluate special functions");
  sp->require_subcommand(1);
  double g_x = 1.0;
  auto* sp_gamma = sp->add_subcommand("gamma", "Gamma(x)");
  sp_gamma->add_option("x", g_x)->required();
  double p_z = 1.0;
  int p_k = 0;
  auto* sp_poch = sp->add_subcommand("pochhammer", "(z)_k");
  sp_poch->add_option("z", p_z)->required();
  sp_poch->add_option("k", p_k)->required()->check(CLI::NonNegativeNumber);
  fvc::specfun::HypergeometricArgs hargs{0, 0, 1, 0};
  auto* sp_2f1 = sp->add_subcommand("2f1", "Gauss hypergeometric F(a,b;c;z)");
  sp_2f1->add_option("a", hargs.a)->required();
  sp_2f1->add_option("b", hargs.b)->required();
  sp_2f1->add_option("c", hargs.c)->required();
  sp_2f1->add_option("z", hargs.z)->required();
  int d_k = 1;
  fvc::specfun::HypergeometricArgs dargs{0, 0, 1, 0};
  auto* sp_2f1d = sp->add_subcommand("2f1d", "k-th derivative of F(a,b;c;z)");
  sp_2f1d->add_option("k", d_k)->required()->check(CLI::NonNegativeNumber);
  sp_2f1d->add_option("a", dargs.a)->required();
  sp_2f1d->add_option("b", dargs.b)->required();
  sp_2f1d->add_option("c", dargs.c)->required();
  sp_2f1d->add_option("z", dargs.z)->required();
  double l_alpha = 0.5;
  int l_n = 2;
  auto* sp_lambda = sp->add_subcommand("lambda", "lambda(alpha, n)");
  sp_lambda->add_option("alpha", l_alpha)->required();
  sp_lambda->add_option("n", l_n)->required()->check(CLI::PositiveNumber);

  // deriv -----------------------------------------------------------------
  auto* dv = app.add_subcommand("deriv", "fractional derivative operators");
  dv->require_subcommand(1);
  double da = 0.5, dk = 1.0, dbase = 0.0, dx = 1.0, dcoeff = 1.0;
  bool caputo = false;
  auto* dv_power = dv->add_subcommand("power", "power rule on c (x-a)^k");
  dv_power->add_option("--alpha", da)->required();
  dv_power->add_option("--k", dk)->required();
  dv_power->add_option("--base", dbase);
  dv_power->add_option("--x", dx)->required();
  dv_power->add_option("--coeff", dcoeff);
  dv_power->add_flag("--caputo", caputo);
  double cc = 1.0, cx = 1.0, ca = 0.5;
  auto* dv_const = dv->add_subcommand("constant", "derivative of a constant");
  dv_const->add_option("--alpha", ca)->required();
  dv_const->add_option("--c", cc)->required();
  dv_const->add_option("--x", cx)->required();
  double sa = 0.5, sbeta = 1.0, seps0 = -1.0, seps = 0.0, sgamma = 0.0;
  auto* dv_shift = dv->add_subcommand(
      "shifted", "derivative of (eps-eps0)^beta [eps^gamma]");
  dv_shift->add_option("--alpha", sa)->required();
  dv_shift->add_option("--beta", sbeta)->required();
  dv_shift->add_option("--gamma", sgamma);
  dv_shift->add_option("--eps0", seps0)->required();
  dv_shift->add_option("--eps", seps)->required();
  std::string gl_field;
  double gla = 0.5;
  long gl_index = -1;
  auto* dv_gl = dv->add_subcommand(
      "gl", "Grunwald-Letnikov derivative of a sampled field");
  dv_gl->add_option("--field", gl_field)->required();
  dv_gl->add_option("--alpha", gla)->required();
  dv_gl->add_option("--index", gl_index);

  // variation -------------------------------------------------------------
  VariationOptions vopt;
  auto* var = app.add_subcommand("variation",
                                 "fractional variation of a functional");
  var->add_option("-f,--density", vopt.expr)->required();
  var->add_option("--alpha", vopt.alpha)->required();
  var->add_option("--field", vopt.field_path)->required();
  var->add_flag("--oracle", vopt.oracle);
  var->add_flag("--check", vopt.check);
  var->add_option("--tolerance", vopt.tolerance)->check(CLI::PositiveNumber);
  var->add_option("--steps", vopt.steps);
  var->add_option("--format", vopt.format)
      ->check(CLI::IsMember({"csv", "json"}));

  // euler-lagrange --------------------------------------------------------
  std::string el_expr, el_field, el_format = "csv";
  double el_alpha = 1.0;
  auto* el = app.add_subcommand("euler-lagrange",
                                "fractional Euler-Lagrange residual");
  el->add_option("-f,--density", el_expr)->required();
  el->add_option("--alpha", el_alpha)->required();
  el->add_option("--field", el_field)->required();
  el->add_option("--format", el_format)
      ->check(CLI::IsMember({"csv", "json"}));

  // verify ----------------------------------------------------------------
  double v_tol = -1.0;
  std::string v_only, v_format = "table";
  auto* ver = app.add_subcommand("verify", "run the verification battery");
  ver->add_option("--tolerance", v_tol);
  ver->add_option("--only", v_only);
  ver->add_option("--format", v_format)
      ->check(CLI::IsMember({"table", "json"}));

  // sweep -----------------------------------------------------------------
  SweepOptions swopt;
  auto* sw = app.add_subcommand("sweep", "alpha sweep with plot-ready CSV");
  sw->add_option("-f,--density", swopt.expr);
  sw->add_option("--field", swopt.field_path);
  sw->add_option("--alpha-min", swopt.alpha_min);
  sw->add_option("--alpha-max", swopt.alpha_max);
  sw->add_option("--alpha-step", swopt.alpha_step);
  sw->add_flag("--oracle", swopt.oracle);
  sw->add_option("--steps", swopt.steps);
  sw->add_option("--lambda", swopt.lambda_n,
                 "emit lambda(alpha, n) instead of a functional sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (sp_gamma->parsed()) {
    std::cout << fmt(fvc::specfun::gamma(g_x)) << '\n';
  } else if (sp_poch->parsed()) {
    std::cout << fmt(fvc::specfun::pochhammer(p_z, p_k)) << '\n';
  } else if (sp_2f1->parsed()) {
    std::cout << fmt(fvc::specfun::gauss_2f1(hargs)) << '\n';
  } else if (sp_2f1d->parsed()) {
    std::cout << fmt(fvc::specfun::gauss_2f1_derivative(d_k, dargs)) << '\n';
  } else if (sp_lambda->parsed()) {
    std::cout << fmt(fvc::prop1_lambda(fvc::Order(l_alpha), l_n)) << '\n';
  } else if (dv_power->parsed()) {
    const fvc::fracops::PowerTerm term{dcoeff, dk, dbase};
    const double v =
        caputo ? fvc::fracops::caputo_power_rule(fvc::Order(da), term, dx)
               : fvc::fracops::rl_power_rule(fvc::Order(da), term, dx);
    std::cout << fmt(v) << '\n';
  } else if (dv_const->parsed()) {
    std::cout << fmt(fvc::fracops::rl_constant(fvc::Order(ca), cc, cx))
              << '\n';
  } else if (dv_shift->parsed()) {
    const double v =
        sgamma == 0.0
            ? fvc::fracops::rl_shifted_power(fvc::Order(sa), sbeta, seps0,
                                             seps)
            : fvc::fracops::rl_shifted_product(fvc::Order(sa), sbeta, sgamma,
                                               seps0, seps);
    std::cout << fmt(v) << '\n';
  } else if (dv_gl->parsed()) {
    const fvc::FieldFile ff = load_fields(gl_field, false);
    const Eigen::Index idx =
        gl_index < 0 ? ff.u.size() - 1 : static_cast<Eigen::Index>(gl_index);
    std::cout << fmt(fvc::fracops::gl_fractional_derivative(
                     ff.u, fvc::Order(gla), idx))
              << '\n';
  } else if (var->parsed()) {
    return run_variation(vopt);
  } else if (el->parsed()) {
    return run_euler_lagrange(el_expr, el_field, el_alpha, el_format);
  } else if (ver->parsed()) {
    return run_verify(v_tol, v_only, v_format);
  } else if (sw->parsed()) {
    if (swopt.lambda_n == 0 &&
        (swopt.expr.empty() || swopt.field_path.empty()))
      throw CLI::ValidationError(
          "sweep", "either --lambda or both --density and --field required");
    return run_sweep(swopt);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError&) {
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
