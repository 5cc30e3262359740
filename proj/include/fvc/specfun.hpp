#pragma once

#include "fvc/errors.hpp"

namespace fvc::specfun {

/// Parameters of the Gauss hypergeometric series F(a,b;c;z).
/// c must not be zero or a negative integer; the evaluation paths here
/// cover z in [0,1] (any z for terminating series).
struct HypergeometricArgs {
  double a;
  double b;
  double c;
  double z;
};

/// True if x is (numerically) zero or a negative integer.
bool is_nonpositive_integer(double x);

/// Gamma(x) by Lanczos approximation with reflection for x < 0.5.
/// Throws PoleError at non-positive integers, OverflowError above ~171.6.
double gamma(double x);

/// Gamma(num)/Gamma(den), taking the limit 0 when den is a pole of Gamma.
double gamma_ratio(double num, double den);

/// Rising factorial (z)_k = z(z+1)...(z+k-1).
double pochhammer(double z, int k);

double gauss_2f1(const HypergeometricArgs& args);
inline double gauss_2f1(double a, double b, double c, double z) {
  return gauss_2f1(HypergeometricArgs{a, b, c, z});
}

/// k-th z-derivative: (a)_k (b)_k / (c)_k * F(a+k, b+k; c+k; z).
double gauss_2f1_derivative(int k, const HypergeometricArgs& args);

}  // namespace fvc::specfun
