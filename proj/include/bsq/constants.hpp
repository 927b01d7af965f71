#pragma once

#include <functional>
#include <optional>
#include <string>

#include "bsq/quadrature.hpp"
#include "bsq/radial.hpp"
#include "bsq/report.hpp"
#include "bsq/transforms.hpp"

namespace bsq {

enum class PsiKind { power_half, type_a, type_b, custom };

// Smoothing function psi >= 0 on (0, inf).
struct SmoothingFunction {
  PsiKind kind = PsiKind::power_half;
  double a = 0.0;  // exponent parameter of type B
  std::function<double(double)> custom;
  // For custom psi: the limit of psi(r)^2 / r as r -> inf, if finite.
  std::optional<double> custom_limit;

  static SmoothingFunction power_half();            // r^{1/2}
  static SmoothingFunction type_a();                // (1 + r^2)^{1/4}
  static SmoothingFunction type_b(double a);        // r^{(2-a)/2}
  static SmoothingFunction from(std::function<double(double)> psi, std::optional<double> limit_sq_over_r = {});

  double operator()(double r) const;
  // psi(r)^2 / r, the factor in front of T in the constant.
  double sq_over_r(double r) const;
  std::optional<double> sq_over_r_at_infinity() const;
  std::string name() const;
};

struct SmoothingProblem {
  RadialFunction w = RadialFunction::gaussian();
  SmoothingFunction psi;
  int d = 3;
  double m = 0.0;  // mass; 0 for the Schroedinger constant
  int k_max = 12;
  double r_lo = 1e-3;
  double r_hi = 1e3;
  int grid_points = 61;       // log-spaced points of the coarse r grid
  int probe_points = 200;     // rho points of the non-negativity probe
  bool force_scan = false;    // scan k even when the probe passes
  Route route = Route::direct_quadrature;
};

struct ConstantResult {
  double value = 0.0;
  int arg_k = 0;
  // Maximising r; 0 or +inf when the supremum is the limit at that end.
  double arg_r = 0.0;
  bool reduced_by_monotonicity = false;
  bool lower_bound_only = false;
  double error_estimate = 0.0;
  std::string diagnostics;
};

// sup_k sup_r r^-1 psi(r)^2 T_{k+d/2-1} w(r).
ConstantResult schrodinger_constant(const SmoothingProblem& p, const QuadSpec& spec = {});

// sup_k sup_r r^-1 psi(r)^2 (T_nu w + T_{nu+1} w + m/sqrt(r^2+m^2) |T_nu w - T_{nu+1} w|)(r),
// nu = k + d/2 - 1.
ConstantResult dirac_constant(const SmoothingProblem& p, const QuadSpec& spec = {});

// sup_r of the same objective for one fixed k (Dirac form when dirac is set).
ConstantResult inner_supremum(const SmoothingProblem& p, int k, bool dirac = false, const QuadSpec& spec = {});

enum class Family { A, B, C, C_general };

const char* to_string(Family f);
Family parse_family(const std::string& s);

// Closed-form reference values:
//   A: pi (d = 3), pi sup (1+r^2)^{1/2} I_1 K_1 (d = 4), pi/2 (d >= 5)
//   B: sqrt(pi) Gamma((a-1)/2) Gamma((d-a)/2) / (2 Gamma(a/2) Gamma((d+a)/2 - 1))
//   C: Gamma((a-1)/2) / (2 Gamma(a))
//   C_general: int_0^inf (1+r^2)^{-a/2} dr = sqrt(pi) Gamma((a-1)/2) / (2 Gamma(a/2))
double closed_form_constant(Family family, int d, double a = 0.0);

// The (w, psi) pair of a family: A (1+r^2)^-1, (1+r^2)^{1/4}; B r^-a, r^{(2-a)/2};
// C and C_general (1+r^2)^{-a/2}, r^{1/2}.
SmoothingProblem family_problem(Family family, int d, double a = 0.0, double m = 0.0);

// Constants at d, d+1, d+2 and the orderings S_{d+1} <= S_d, S_{d+2} <= S_d.
// With mass set, the Dirac constants are compared instead.
Report dimension_comparison(const RadialFunction& w, const SmoothingFunction& psi, int d, const QuadSpec& spec = {},
                            std::optional<double> mass = std::nullopt);

}  // namespace bsq
