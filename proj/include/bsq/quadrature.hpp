#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace bsq {

using Integrand = std::function<double(double)>;

struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  // Tail start for the Bessel-square and Hankel integrands, in units of
  // the oscillation scale: A = max(m, (m + 1.5 nu) / s).
  double tail_cutoff_multiplier = 10.0;
  int max_subdivisions = 20000;
  int max_tail_panels = 4000;

  double tolerance_for(double value) const;
};

// Throws DomainError for non-positive tolerances or max_depth outside [0, 60].
void validate(const QuadSpec& spec);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
  // Estimate of the integral of |f|; sets the round-off floor of sums.
  double l1 = 0.0;

  QuadResult& operator+=(const QuadResult& other);
};

QuadResult operator+(QuadResult a, const QuadResult& b);

// Throws ConvergenceError naming `what` when r did not converge.
void require_converged(const QuadResult& r, const char* what);

// Adaptive 7/15-point Gauss-Kronrod with global bisection.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadSpec& spec);

// Same engine seeded with the panels [p0,p1], [p1,p2], ... ; the error
// budget is shared globally across panels.
QuadResult integrate_panels(const Integrand& f, const std::vector<double>& points, const QuadSpec& spec);

enum class SingularEnd { lower, upper, both };

// Integral of f over (a, b) where f ~ |x - end|^exponent at the singular end(s).
QuadResult integrate_endpoint_singular(const Integrand& f, double a, double b, SingularEnd end, double exponent,
                                       const QuadSpec& spec);

// One piece of an integrand on (A, inf): h(r) ~ r^-decay * cos(frequency r + phase).
// frequency = 0 marks a non-oscillatory piece; decay may be +inf.
struct OscillatoryComponent {
  Integrand h;
  double frequency = 0.0;
  double decay = std::numeric_limits<double>::infinity();
};

// Sum over components of the integral of h over (A, inf). Non-oscillatory
// pieces use an algebraic change of variables; oscillatory pieces are summed
// over half-period panels with Wynn epsilon acceleration.
QuadResult integrate_oscillatory_tail(const std::vector<OscillatoryComponent>& components, double A,
                                      const QuadSpec& spec);

// Asymptotic model of a radial function on (A, inf):
//   f(r) = sum_j amplitude_j(r) cos(omega_j r + phase_j)
// with |amplitude_j(r)| <~ r^-decay_j, plus a bound on the integral of |f| over (R, inf).
struct TailTerm {
  Integrand amplitude;
  double omega = 0.0;
  double phase = 0.0;
  double decay = std::numeric_limits<double>::infinity();
};

struct TailModel {
  std::vector<TailTerm> terms;
  // Upper bound for the integral of |f| over (R, inf); empty if unknown.
  std::function<double(double)> abs_tail_bound;
  bool compact = false;  // f vanishes on (A, inf) for the A in use
};

// Integral over (A, inf) of pi r s J_nu(r s)^2 f(r) for f described by `tail`.
QuadResult integrate_bessel_square_tail(double nu, const TailModel& tail, double s, double A, const QuadSpec& spec);

// Integral over (A, inf) of r^{nu+1} J_nu(r rho) f(r), which may converge
// only conditionally. Components that resonate (rho = omega_j) and do not
// vanish identically must decay faster than 1/r, else IntegrabilityError.
QuadResult integrate_hankel_tail(double nu, const TailModel& tail, double rho, double A, const QuadSpec& spec);

}  // namespace bsq
