#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsq/quadrature.hpp"
#include "bsq/radial.hpp"
#include "bsq/report.hpp"

namespace bsq {

// Every check is deterministic given its arguments. Transforms are evaluated
// by direct quadrature so that closed forms stay independent references.

// T_{mu+nu} f(s) = U_{mu,nu} H_nu f(s) on random (mu, nu, s, f); f is a
// Gaussian of random scale or (1+r^2)^-1. Tolerance max(1e-6, 3 (err_T + err_U)).
Report check_identity_I(int samples = 60, std::uint64_t seed = 7, const QuadSpec& spec = {});

// Direct T_nu against pi s e^{-s^2} I_nu(s^2) (Gaussian) and pi s I_nu K_nu(s)
// ((1+r^2)^-1) at `points` random (nu, s) each; relative error <= 1e-7.
Report check_closed_forms(int points = 20, std::uint64_t seed = 7, const QuadSpec& spec = {});

// f = (1 - cos r)/r^2: H_{1/2} f, T_{1/2} f and T_{3/2} f against their
// piecewise forms on grids straddling r = 1/2 and rho = 1 (absolute 1e-6),
// and the one-sided derivatives of T_{1/2} f + T_{3/2} f at r = 1/2.
Report check_piecewise_example(const QuadSpec& spec = {});

// nu = -1/2 statements for f in {Gaussian, (1+r^2)^-1, coscusp} at s in {0.3, 1, 4}:
// T_{-1/2} f + T_{1/2} f = 2 int f, T_{mu-1/2} f = U_{mu,-1/2} H_{-1/2} f for
// mu in {0, 1}, and T_{1/2} f <= T_{-1/2} f. Absolute tolerance 1e-6.
Report check_half_order(const QuadSpec& spec = {});

// Central difference (h = 1e-4 r) of T_nu f + T_{nu+1} f against
// (2 nu + 1)/r (T_nu f - T_{nu+1} f); relative tolerance 1e-5 against the
// derivative scale max(|rhs|, |T_nu f + T_{nu+1} f| / r).
Report check_derivative_identity(double nu, const RadialFunction& f, const std::vector<double>& r_grid,
                                 const QuadSpec& spec = {});

// The pointwise form d/dr (r (J_nu^2 + J_{nu+1}^2)) = (2 nu + 1)(J_nu^2 - J_{nu+1}^2).
Report check_derivative_pointwise(const std::vector<std::pair<double, double>>& nu_r, const QuadSpec& spec = {});

// The three-Bessel integral int r^{1-nu} J_nu(a r) J_{mu+nu}(b r) J_{mu+nu}(c r) dr by
// quadrature against its Gegenbauer and Legendre closed forms; with b = c also
// against the kernel. Throws DomainError on a degenerate triangle.
Report check_macdonald(double a, double b, double c, double mu, double nu, const QuadSpec& spec = {});

// Numerical value of the three-Bessel integral.
QuadResult triple_bessel_integral(double a, double b, double c, double mu, double nu, const QuadSpec& spec = {});

// Closed form of the same integral (Gegenbauer form).
double macdonald_closed_form(double a, double b, double c, double mu, double nu);

// Gaussian pairs f, g of different scales: int f (H g) r^{2nu+1} against
// int (H f) g r^{2nu+1}, and int f g r^{2nu+1} against int (H f)(H g) rho^{2nu+1}.
Report check_parseval(int pairs = 6, std::uint64_t seed = 7, const QuadSpec& spec = {});

enum class MonotonicityClause { II, III };
enum class ComparisonClause { IV, V };

// (II) s -> T_nu f non-decreasing for nu >= 1/2; (III) s -> T_nu f + T_{nu+1} f
// non-decreasing for nu > -1/2. Requires a passing non-negativity probe of
// H_nu f (DomainError otherwise). Slack 3 (sum of error estimates).
Report check_monotonicity(MonotonicityClause which, const RadialFunction& f, int pairs = 20,
                          std::uint64_t seed = 7, const QuadSpec& spec = {});

// (IV) T_{mu+nu} f <= T_nu f for integer mu >= 1, nu >= 0; (V) the same for
// mu in (0, 1], mu + 2 nu >= 0.
Report check_comparison(ComparisonClause which, const RadialFunction& f, int samples = 20, std::uint64_t seed = 7,
                        const QuadSpec& spec = {});

// Ten Bessel-function consequences (children example_1a .. example_5b) on grids; complete
// monotonicity via divided differences of orders 0..4.
Report check_examples_32_34(const QuadSpec& spec = {});

// For f with r -> f(sqrt r) completely monotone: (1) s -> s^{-nu-1/2} T_nu f(sqrt s)
// completely monotone, (2)/(3) monotone in s, (4) T_{-nu} f < T_nu f for
// nu in (-1/2, 0), (5) nu -> T_nu f(s) decreasing on nu >= 0.
Report check_cm_theorem18(const RadialFunction& f, const std::vector<double>& nu_grid, const QuadSpec& spec = {});

// T_nu f(s) -> int f as s -> inf, at s in {50, 100} within 5 s^{-1/2} |int f|.
Report check_large_s_limit(const RadialFunction& f, const std::vector<double>& nus, const QuadSpec& spec = {});

// K_{mu,nu}(a r, a s) = a^{2 nu} K_{mu,nu}(r, s) and K_{0,nu} against its
// explicit (1 - r^2/(4 s^2)) form.
Report check_kernel_homogeneity(int samples = 40, std::uint64_t seed = 7);

// Named suites: identity, closed-forms, piecewise, half-order, derivative,
// properties, cm, limits, kernel, all.
std::vector<std::string> suite_names();
Report run_suite(const std::string& name, std::uint64_t seed, const QuadSpec& spec = {});

}  // namespace bsq
