#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsq/quadrature.hpp"

namespace bsq {

// Membership in the weighted spaces L1_{n1,n2}: the norm
//   int_0^1 |f| r^n1 dr + int_1^inf |f| r^n2 dr
// is finite iff n1 is above origin_threshold and n2 is below infinity_threshold
// (inclusive variants allow equality).
struct Integrability {
  double origin_threshold = -1.0;
  bool origin_inclusive = false;
  double infinity_threshold = std::numeric_limits<double>::infinity();
  bool infinity_inclusive = false;

  bool in_space(double n1, double n2) const;
  // A declared pair: f is certified to lie in L1_{n1,n2}.
  static Integrability declared(double n1, double n2);
};

enum class RadialKind { gaussian, inverse_quadratic, type_c, power_law, coscusp, tabulated, custom };

const char* to_string(RadialKind kind);

// Data for user-defined profiles.
struct CustomProfile {
  std::string name = "custom";
  std::function<double(double)> f;
  Integrability integrability;
  // |f| ~ r^-origin_exponent as r -> 0.
  double origin_exponent = 0.0;
  // Asymptotic description of f on (R, inf); terms may be empty when f
  // is only used on bounded intervals.
  std::vector<TailTerm> tail_terms;
  std::function<double(double)> abs_tail_bound;
  std::vector<double> breakpoints;
  std::optional<double> integral;
};

// A radial profile f on (0, inf) together with the metadata the transforms
// need: integrability exponents, an asymptotic tail model and a bound on
// the integral of |f| beyond R. Cheap to copy.
class RadialFunction {
 public:
  // exp(-a^2 r^2 / 2).
  static RadialFunction gaussian(double a = 1.0);
  // (1 + r^2)^-1.
  static RadialFunction inverse_quadratic();
  // (1 + r^2)^(-a/2), a > 0.
  static RadialFunction type_c(double a);
  // r^-a, a > 0.
  static RadialFunction power_law(double a);
  // (1 - cos r) / r^2.
  static RadialFunction coscusp();
  // Piecewise-linear interpolation of (r_i, f_i); zero outside [r_0, r_n].
  static RadialFunction tabulated(std::vector<double> r, std::vector<double> f, Integrability integrability);
  // Two-column text file; see README for the header line.
  static RadialFunction from_file(const std::string& path);
  static RadialFunction custom(CustomProfile profile);

  double operator()(double r) const;

  RadialKind kind() const { return kind_; }
  double parameter() const { return a_; }
  double damping() const { return eps_; }
  double scale() const { return scale_; }
  std::string name() const;

  // f(r) exp(-eps r^2).
  RadialFunction damped(double eps) const;
  // c f(r).
  RadialFunction scaled(double c) const;

  Integrability integrability() const;
  bool in_space(double n1, double n2) const { return integrability().in_space(n1, n2); }

  double origin_exponent() const;
  // Largest oscillation frequency present in f itself.
  double max_frequency() const;
  // End of the support, or +inf.
  double support_end() const;
  std::vector<double> breakpoints() const;
  TailModel tail_model(double A) const;
  // Bound on the integral of |f| over (R, inf), if one is known.
  std::optional<double> abs_tail_bound(double R) const;
  // Supremum of |f| over (R, inf), if known.
  std::optional<double> sup_beyond(double R) const;
  // Closed form of the integral of f over (0, inf), if known.
  std::optional<double> integral() const;
  // True for the kinds that are Gaussian mixtures, exp(-a r^2) averaged
  // against a positive measure (Gaussian, inverse quadratic, type C, power law).
  bool is_gaussian_mixture() const;

 private:
  struct Table {
    std::vector<double> r, f;
    Integrability integrability;
  };

  RadialFunction(RadialKind kind, double a) : kind_(kind), a_(a) {}
  double base(double r) const;

  RadialKind kind_;
  double a_ = 0.0;
  double eps_ = 0.0;
  double scale_ = 1.0;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<const CustomProfile> custom_;
};

}  // namespace bsq
