#include "fvc/density.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fvc/specfun.hpp"

namespace fvc {

namespace {

constexpr int kMaxExponent = 12;

void merge_canonical(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  std::vector<Monomial> merged;
  for (const Monomial& t : terms) {
    if (!merged.empty() && merged.back().p == t.p && merged.back().q == t.q)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Monomial& t) { return t.coeff == 0.0; }),
               merged.end());
  terms = std::move(merged);
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("density parse error at byte " + std::to_string(pos) +
                         ": expected " + expected,
                     pos, expected);
  }

  bool starts_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double parse_number() {
    skip_ws();
    const char* begin = src.data() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("a number");
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }

  int parse_exponent() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("a non-negative integer exponent");
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > kMaxExponent)
        throw OverflowError("density: exponent exceeds " +
                            std::to_string(kMaxExponent));
      ++pos;
    }
    return static_cast<int>(v);
  }

  // factor := 'u' ['^' int] | 'ux' ['^' int]; accumulates into (p, q)
  void parse_factor(int& p, int& q) {
    skip_ws();
    if (pos >= src.size() || src[pos] != 'u') fail("'u' or 'ux'");
    ++pos;
    const bool is_ux = pos < src.size() && src[pos] == 'x';
    if (is_ux) ++pos;
    int e = 1;
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      e = parse_exponent();
    }
    int& slot = is_ux ? q : p;
    slot += e;
    if (slot > kMaxExponent)
      throw OverflowError("density: exponent exceeds " +
                          std::to_string(kMaxExponent));
  }

  Monomial parse_term() {
    Monomial m{1.0, 0, 0};
    bool have_factor = false;
    if (starts_number()) {
      m.coeff = parse_number();
      skip_ws();
      if (pos >= src.size() || src[pos] != '*') fail("'*' after coefficient");
      ++pos;
    }
    parse_factor(m.p, m.q);
    have_factor = true;
    while (peek() == '*') {
      ++pos;
      parse_factor(m.p, m.q);
    }
    (void)have_factor;
    return m;
  }

  std::vector<Monomial> parse_sum() {
    std::vector<Monomial> terms;
    double sign = 1.0;
    if (peek() == '+') {
      ++pos;
    } else if (peek() == '-') {
      ++pos;
      sign = -1.0;
    }
    for (;;) {
      Monomial m = parse_term();
      m.coeff *= sign;
      terms.push_back(m);
      if (at_end()) break;
      const char c = peek();
      if (c == '+') {
        sign = 1.0;
        ++pos;
      } else if (c == '-') {
        sign = -1.0;
        ++pos;
      } else {
        fail("'+', '-' or end of expression");
      }
    }
    return terms;
  }
};

std::string format_coeff(double v) {
  // Shortest decimal text that round-trips to the same double.
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void append_term_text(std::string& out, const Monomial& t, bool first) {
  double c = t.coeff;
  if (first) {
    if (c < 0.0) {
      out += "-";
      c = -c;
    }
  } else {
    out += c < 0.0 ? " - " : " + ";
    c = std::abs(c);
  }
  std::string factors;
  if (t.p > 0) factors += t.p == 1 ? "u" : "u^" + std::to_string(t.p);
  if (t.q > 0) {
    if (!factors.empty()) factors += "*";
    factors += t.q == 1 ? "ux" : "ux^" + std::to_string(t.q);
  }
  if (factors.empty()) factors = "u^0";  // constant term
  if (c != 1.0) {
    out += format_coeff(c);
    out += "*";
  }
  out += factors;
}

double checked_pow(double base, double exp, const char* slot, Eigen::Index i) {
  const bool integer_exp = exp == std::rint(exp);
  if (!integer_exp && base < 0.0)
    throw PositivityError(std::string(slot) +
                              " must be non-negative under a "
                              "non-integer exponent",
                          static_cast<std::size_t>(i));
  if (exp < 0.0 && !integer_exp && !(base > 0.0))
    throw PositivityError(std::string(slot) +
                              " must be strictly positive under a negative "
                              "exponent",
                          static_cast<std::size_t>(i));
  return std::pow(base, exp);
}

}  // namespace

Density::Density(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  for (const Monomial& t : terms_) {
    if (!std::isfinite(t.coeff))
      throw DomainError("density: coefficients must be finite");
    if (t.p < 0 || t.q < 0)
      throw DomainError("density: exponents must be non-negative");
  }
  merge_canonical(terms_);
}

Density Density::parse(std::string_view expr) {
  Parser parser{expr};
  if (parser.at_end()) parser.fail("a term");
  auto terms = parser.parse_sum();
  return Density(std::move(terms));
}

Density parse_density(std::string_view expr) { return Density::parse(expr); }

std::string Density::str() const {
  if (terms_.empty()) return "0*u^0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    append_term_text(out, terms_[i], i == 0);
  return out;
}

bool Density::depends_on_ux() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Monomial& t) { return t.q > 0; });
}

int Density::max_u_power() const {
  int m = 0;
  for (const Monomial& t : terms_) m = std::max(m, t.p);
  return m;
}

Density partial_u(const Density& f) {
  std::vector<Monomial> out;
  for (const Monomial& t : f.terms())
    if (t.p > 0) out.push_back({t.coeff * t.p, t.p - 1, t.q});
  return Density(std::move(out));
}

Density partial_ux(const Density& f) {
  std::vector<Monomial> out;
  for (const Monomial& t : f.terms())
    if (t.q > 0) out.push_back({t.coeff * t.q, t.p, t.q - 1});
  return Density(std::move(out));
}

namespace {

FracDensity frac_partial_impl(const Density& f, Order order,
                              ConstantConvention convention, bool in_u) {
  require_unit_interval(order);
  const double a = order.alpha;
  FracDensity out;
  for (const Monomial& t : f.terms()) {
    const int p = in_u ? t.p : t.q;
    const int other = in_u ? t.q : t.p;
    FracMonomial m;
    if (p == 0) {
      if (a == 0.0) {
        m = {t.coeff, 0.0, 0.0};  // identity operator
      } else if (convention == ConstantConvention::caputo) {
        continue;  // Caputo derivative of a constant vanishes
      } else {
        m.coeff = t.coeff / specfun::gamma(1.0 - a);
        (in_u ? m.u_exp : m.ux_exp) = -a;
      }
    } else {
      m.coeff = t.coeff *
                specfun::gamma_ratio(static_cast<double>(p) + 1.0,
                                     static_cast<double>(p) + 1.0 - a);
      (in_u ? m.u_exp : m.ux_exp) = static_cast<double>(p) - a;
    }
    (in_u ? m.ux_exp : m.u_exp) += static_cast<double>(other);
    if (m.coeff != 0.0) out.terms.push_back(m);
  }
  return out;
}

}  // namespace

FracDensity frac_partial_u(const Density& f, Order order,
                           ConstantConvention convention) {
  return frac_partial_impl(f, order, convention, true);
}

FracDensity frac_partial_ux(const Density& f, Order order,
                            ConstantConvention convention) {
  return frac_partial_impl(f, order, convention, false);
}

FracDensity to_frac(const Density& f) {
  FracDensity out;
  for (const Monomial& t : f.terms())
    out.terms.push_back({t.coeff, static_cast<double>(t.p),
                         static_cast<double>(t.q)});
  return out;
}

double evaluate_at(const FracDensity& f, double u, double ux) {
  double sum = 0.0;
  for (const FracMonomial& t : f.terms) {
    double v = t.coeff;
    if (t.u_exp != 0.0) v *= std::pow(u, t.u_exp);
    if (t.ux_exp != 0.0) v *= std::pow(ux, t.ux_exp);
    sum += v;
  }
  return sum;
}

double evaluate_at(const Density& f, double u, double ux) {
  return evaluate_at(to_frac(f), u, ux);
}

Field evaluate(const FracDensity& f, const Field& u, const Field& ux) {
  require_same_grid(u, ux);
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(u.size());
  for (const FracMonomial& t : f.terms) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      double v = t.coeff;
      if (t.u_exp != 0.0) v *= checked_pow(u.values(i), t.u_exp, "u", i);
      if (t.ux_exp != 0.0) v *= checked_pow(ux.values(i), t.ux_exp, "ux", i);
      out(i) += v;
    }
  }
  return Field(u.grid, std::move(out));
}

Field evaluate(const Density& f, const Field& u, const Field& ux) {
  return evaluate(to_frac(f), u, ux);
}

}  // namespace fvc
