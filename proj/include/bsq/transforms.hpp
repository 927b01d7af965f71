#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bsq/gegenbauer.hpp"
#include "bsq/quadrature.hpp"
#include "bsq/radial.hpp"
#include "bsq/report.hpp"

namespace bsq {

enum class TransformMethod { direct_quadrature, closed_form, kernel_route };

// Which evaluation path a transform may take. automatic uses a closed form
// when the profile has one and falls back to direct quadrature.
enum class Route { automatic, direct_quadrature, closed_form, kernel_route };

const char* to_string(TransformMethod m);

struct TransformValue {
  double value = 0.0;
  double error_estimate = 0.0;
  TransformMethod method = TransformMethod::direct_quadrature;
  bool converged = true;
  long evaluations = 0;
};

// T_nu f(s) = pi int_0^inf r s J_nu(r s)^2 f(r) dr, nu >= -1/2, s > 0.
TransformValue t_transform(double nu, const RadialFunction& f, double s, const QuadSpec& spec = {},
                           Route route = Route::automatic);

// H_nu f(rho) = rho^-nu int_0^inf r^{nu+1} J_nu(r rho) f(r) dr, rho > 0.
// Profiles outside L1_{2nu+1,2nu+1} are accepted when the integral still
// converges as an improper integral (oscillatory tails).
TransformValue hankel(double nu, const RadialFunction& f, double rho, const QuadSpec& spec = {},
                      Route route = Route::automatic);

// H_nu of f(r) exp(-eps r^2). Gaussian-mixture profiles use their mixture
// representation unless direct quadrature is requested.
TransformValue hankel_regularized(double nu, const RadialFunction& f, double eps, double rho,
                                  const QuadSpec& spec = {}, Route route = Route::automatic);

// Closed forms, where known.
std::optional<double> closed_form_t(double nu, const RadialFunction& f, double s);
std::optional<double> closed_form_hankel(double nu, const RadialFunction& f, double rho);

// H_nu f as a radial profile of rho (closed form where known, otherwise
// evaluated by quadrature on demand). At rho = 0 it returns the moment
// int r^{2nu+1} f / (2^nu Gamma(nu+1)).
RadialFunction hankel_image(double nu, const RadialFunction& f, const QuadSpec& spec = {});

// Kernel K_{mu,nu}(r, s); 0 at r = 2s and, for integer mu, for r > 2s.
double kernel_k(const OrderPair& idx, double r, double s);

// U_{mu,nu} g(s) = int_0^inf K_{mu,nu}(r, s) g(r) dr.
TransformValue u_transform(const OrderPair& idx, const RadialFunction& g, double s, const QuadSpec& spec = {});

// The nu = -1/2 operator: sqrt(pi/2) (g(0) + g(2s)) for mu = 0 and
// sqrt(pi/2) (g(0) - g(2s)) for mu = 1.
double u_half(int mu, const std::function<double(double)>& g, double s);

// T_nu f + T_{nu+1} f + m / sqrt(r^2 + m^2) |T_nu f - T_{nu+1} f| at r.
TransformValue dirac_t(double nu, double m, const RadialFunction& f, double r, const QuadSpec& spec = {},
                       Route route = Route::automatic);

enum class ProbeClass { strictly_positive_on_grid, nonnegative_on_grid, violated };

const char* to_string(ProbeClass c);

struct ProbeResult {
  Report report;
  ProbeClass classification = ProbeClass::violated;
  double min_value = 0.0;
  double rho_at_min = 0.0;
  double eps_at_min = 0.0;
};

// Default grids: eps in {1e-1, 1e-2, 1e-3, 1e-4}, rho log-spaced on [1e-2, 1e2] (200 points).
std::vector<double> default_probe_eps();
std::vector<double> default_probe_rho(int points = 200);

// Samples H_nu f_eps(rho) over the grids and classifies the sign pattern.
ProbeResult nonneg_probe(double nu, const RadialFunction& f, const std::vector<double>& eps_grid,
                         const std::vector<double>& rho_grid, const QuadSpec& spec = {},
                         Route route = Route::automatic);

}  // namespace bsq
