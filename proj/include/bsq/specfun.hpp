#pragma once

#include <utility>

namespace bsq {

// Gamma-family helpers.

// log Gamma(x) for x > 0.
double ln_gamma(double x);

// (log|Gamma(x)|, sign Gamma(x)) for any x that is not a pole.
std::pair<double, int> signed_ln_gamma(double x);

// 1/Gamma(x); exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

// Rising factorial (a)_n = a (a+1) ... (a+n-1).
double pochhammer(double a, unsigned n);

// Logarithmic derivative of Gamma. Throws at the poles.
double digamma(double x);

// True when x is within tol of an integer.
bool near_integer(double x, double tol);

// Bessel functions of real order and non-negative argument.

struct BesselJY {
  double j;
  double y;
};

// J_nu(x) for nu >= -1/2, x >= 0.
double bessel_j(double nu, double x);

// Y_nu(x) for nu >= -1/2, x > 0.
double bessel_y(double nu, double x);

// J_nu and Y_nu together; cheaper than two separate calls.
BesselJY bessel_jy(double nu, double x);

// I_nu(x) for nu >= -1/2, x >= 0.
double bessel_i(double nu, double x);

// exp(-x) I_nu(x); finite for all x >= 0.
double bessel_i_scaled(double nu, double x);

// K_nu(x) for any real nu, x > 0.
double bessel_k(double nu, double x);

// exp(x) K_nu(x); finite for all x > 0.
double bessel_k_scaled(double nu, double x);

// Gauss hypergeometric function.

struct HypArgs {
  double a;
  double b;
  double c;
  double x;
};

// 2F1(a, b; c; x) for x <= 1 (x = 1 only when c - a - b > 0 or the
// series terminates).
double hyp2f1(double a, double b, double c, double x);
double hyp2f1(const HypArgs& args);

// Same, with the complement 1 - x supplied by the caller. Use this when
// 1 - x is known more accurately than x itself.
double hyp2f1(double a, double b, double c, double x, double one_minus_x);

}  // namespace bsq
