#include "bsq/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool same(double x, double y) { return std::fabs(x - y) <= 1e-12; }

void check_order(double nu, const char* what) {
  if (!std::isfinite(nu) || nu < -0.5) throw DomainError(std::string(what) + ": order must be >= -1/2");
}

QuadSpec with_abs_tol(const QuadSpec& spec, double abs_tol) {
  QuadSpec out = spec;
  out.abs_tol = abs_tol;
  return out;
}

TransformValue from_quad(const QuadResult& q, TransformMethod method) {
  return TransformValue{q.value, q.error_estimate, method, q.converged, q.evaluations};
}

TransformValue exact(double v) { return TransformValue{v, 0.0, TransformMethod::closed_form, true, 1}; }

// Integral of g over (0, A) where g ~ r^origin_exp at 0 and oscillates with
// period at least `cap`. The first panel absorbs the origin behaviour, the
// rest are panels of at most `cap` growing geometrically.
QuadResult integrate_head(const Integrand& g, double origin_exp, double A, double cap,
                          const std::vector<double>& breakpoints, const QuadSpec& spec) {
  std::vector<double> bps;
  for (double b : breakpoints) {
    if (b > 0.0 && b < A) bps.push_back(b);
  }
  std::sort(bps.begin(), bps.end());
  double p1 = std::min({cap, 1.0, A});
  if (!bps.empty()) p1 = std::min(p1, bps.front());
  const QuadSpec half = with_abs_tol(spec, 0.5 * spec.abs_tol);
  QuadResult first;
  if (origin_exp >= 0.0 && near_integer(origin_exp, 1e-12)) {
    first = integrate_adaptive(g, 0.0, p1, half);
  } else {
    first = integrate_endpoint_singular(g, 0.0, p1, SingularEnd::lower, origin_exp, half);
  }
  std::vector<double> pts{p1};
  for (double x = p1; x < A;) {
    x = std::min({2.0 * x, x + cap, A});
    pts.push_back(x);
  }
  pts.insert(pts.end(), bps.begin(), bps.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return first + integrate_panels(g, pts, half);
}

double tail_start(double nu, double x, const QuadSpec& spec) {
  const double m = spec.tail_cutoff_multiplier;
  return std::max(m, (m + 1.5 * std::max(nu, 0.0)) / x);
}

TransformValue t_direct(double nu, const RadialFunction& f, double s, const QuadSpec& spec) {
  const double A = std::min(tail_start(nu, s, spec), f.support_end());
  const double wf = f.max_frequency();
  const double cap = std::min(kPi / s, wf > 0.0 ? kPi / wf : kInf);
  const Integrand g = [nu, s, &f](double r) {
    const double v = f(r);
    if (v == 0.0) return 0.0;
    const double j = bessel_j(nu, r * s);
    return kPi * r * s * j * j * v;
  };
  const QuadSpec half = with_abs_tol(spec, 0.5 * spec.abs_tol);
  QuadResult q = integrate_head(g, 2.0 * nu + 1.0 - f.origin_exponent(), A, cap, f.breakpoints(), half);
  if (A < f.support_end()) q += integrate_bessel_square_tail(nu, f.tail_model(A), s, A, half);
  return from_quad(q, TransformMethod::direct_quadrature);
}

TransformValue hankel_direct(double nu, const RadialFunction& f, double rho, const QuadSpec& spec) {
  const double A = std::min(tail_start(nu, rho, spec), f.support_end());
  const double wf = f.max_frequency();
  const double cap = std::min(kPi / rho, wf > 0.0 ? kPi / wf : kInf);
  const Integrand g = [nu, rho, &f](double r) {
    const double v = f(r);
    if (v == 0.0) return 0.0;
    return std::pow(r, nu + 1.0) * bessel_j(nu, r * rho) * v;
  };
  // Work with the unscaled integral; rho^-nu is applied at the end.
  const double pref = std::pow(rho, -nu);
  const QuadSpec half = with_abs_tol(spec, 0.5 * spec.abs_tol / pref);
  QuadResult q = integrate_head(g, 2.0 * nu + 1.0 - f.origin_exponent(), A, cap, f.breakpoints(), half);
  if (A < f.support_end()) q += integrate_hankel_tail(nu, f.tail_model(A), rho, A, half);
  q.value *= pref;
  q.error_estimate *= pref;
  return from_quad(q, TransformMethod::direct_quadrature);
}

// Gaussian-mixture representations:
//   (1 + r^2)^(-a/2) = int_0^inf t^{a/2-1} e^-t / Gamma(a/2) exp(-t r^2) dt,
//   r^-a             = int_0^inf t^{a/2-1} / Gamma(a/2) exp(-t r^2) dt.
// With H_nu exp(-b r^2) = (2b)^{-nu-1} exp(-rho^2 / 4b) this gives H_nu of
// c f(r) exp(-eps r^2) as a single non-oscillatory integral over t.
TransformValue hankel_mixture(double nu, const RadialFunction& f, double rho, const QuadSpec& spec) {
  const double a = f.parameter(), c = f.scale(), eps = f.damping();
  const bool bessel_type = f.kind() != RadialKind::power_law;
  const double lg = ln_gamma(0.5 * a);
  const Integrand g = [nu, a, eps, rho, bessel_type, lg](double t) {
    if (t <= 0.0) return 0.0;
    const double b = t + eps;
    const double lw = (0.5 * a - 1.0) * std::log(t) - (bessel_type ? t : 0.0) - lg;
    return std::exp(lw - (nu + 1.0) * std::log(2.0 * b) - rho * rho / (4.0 * b));
  };
  const QuadSpec part = with_abs_tol(spec, 0.5 * spec.abs_tol / std::max(std::fabs(c), 1e-300));
  const double exponent = 0.5 * a - 1.0;
  QuadResult q;
  if (eps == 0.0) {
    // exp(-rho^2 / 4t) flattens the weight at t = 0.
    q = integrate_adaptive(g, 0.0, 1.0, part);
  } else if (exponent >= 0.0 && near_integer(exponent, 1e-12)) {
    q = integrate_adaptive(g, 0.0, 1.0, part);
  } else {
    q = integrate_endpoint_singular(g, 0.0, 1.0, SingularEnd::lower, exponent, part);
  }
  const double decay = bessel_type ? kInf : nu + 2.0 - 0.5 * a;
  q += integrate_oscillatory_tail({OscillatoryComponent{g, 0.0, decay}}, 1.0, part);
  q.value *= c;
  q.error_estimate *= std::fabs(c);
  return from_quad(q, TransformMethod::closed_form);
}

void check_t_space(double nu, const RadialFunction& f) {
  if (!f.in_space(2.0 * nu + 1.0, 0.0)) {
    throw IntegrabilityError("t_transform: " + f.name() + " is not in L1_{2nu+1,0} for nu = " + std::to_string(nu));
  }
}

void check_hankel_origin(double nu, const RadialFunction& f) {
  if (!f.in_space(2.0 * nu + 1.0, -kInf)) {
    throw IntegrabilityError("hankel: " + f.name() + " is not integrable against r^{2nu+1} at the origin");
  }
}

// Integral of r^{2nu+1} f(r) over (0, inf).
QuadResult moment(double nu, const RadialFunction& f, const QuadSpec& spec) {
  const double A = std::min(10.0, f.support_end());
  const Integrand g = [nu, &f](double r) {
    const double v = f(r);
    return v == 0.0 ? 0.0 : std::pow(r, 2.0 * nu + 1.0) * v;
  };
  const QuadSpec half = with_abs_tol(spec, 0.5 * spec.abs_tol);
  const double wf = f.max_frequency();
  QuadResult q = integrate_head(g, 2.0 * nu + 1.0 - f.origin_exponent(), A, wf > 0.0 ? kPi / wf : kInf,
                                f.breakpoints(), half);
  if (A < f.support_end()) {
    const TailModel tail = f.tail_model(A);
    std::vector<OscillatoryComponent> comps;
    for (const TailTerm& t : tail.terms) {
      const Integrand amp = t.amplitude;
      const double om = t.omega, ph = t.phase;
      comps.push_back({[nu, amp, om, ph](double r) { return std::pow(r, 2.0 * nu + 1.0) * amp(r) * std::cos(om * r + ph); },
                       om, t.decay - 2.0 * nu - 1.0});
    }
    if (comps.empty()) throw IntegrabilityError("moment: no asymptotic model of the tail is available");
    q += integrate_oscillatory_tail(comps, A, half);
  }
  return q;
}

double hankel_at_zero(double nu, const RadialFunction& f, const QuadSpec& spec) {
  if (!f.in_space(2.0 * nu + 1.0, 2.0 * nu + 1.0)) {
    throw IntegrabilityError("hankel at 0: " + f.name() + " has no finite moment of order 2nu+1");
  }
  const QuadResult q = moment(nu, f, spec);
  require_converged(q, "hankel at 0");
  return q.value * std::exp(-nu * std::log(2.0) - ln_gamma(nu + 1.0));
}

}  // namespace

const char* to_string(TransformMethod m) {
  switch (m) {
    case TransformMethod::direct_quadrature:
      return "direct_quadrature";
    case TransformMethod::closed_form:
      return "closed_form";
    case TransformMethod::kernel_route:
      return "kernel_route";
  }
  return "unknown";
}

std::optional<double> closed_form_t(double nu, const RadialFunction& f, double s) {
  const double c = f.scale();
  const double a = f.parameter();
  const bool undamped = f.damping() == 0.0;
  switch (f.kind()) {
    case RadialKind::gaussian: {
      const double x = s / a;
      return c / a * kPi * x * bessel_i_scaled(nu, x * x);
    }
    case RadialKind::inverse_quadratic:
      if (undamped) return c * kPi * s * bessel_i_scaled(nu, s) * bessel_k_scaled(nu, s);
      break;
    case RadialKind::type_c:
      if (undamped && same(a, 2.0)) return c * kPi * s * bessel_i_scaled(nu, s) * bessel_k_scaled(nu, s);
      break;
    case RadialKind::power_law:
      if (undamped && a > 1.0 && a < 2.0 * nu + 2.0) {
        const double lg = ln_gamma(a - 1.0) + ln_gamma(nu + 1.0 - 0.5 * a) - (a - 1.0) * std::log(2.0) -
                          2.0 * ln_gamma(0.5 * a) - ln_gamma(nu + 0.5 * a);
        return c * std::pow(s, a - 1.0) * kPi * std::exp(lg);
      }
      break;
    case RadialKind::coscusp: {
      if (!undamped) break;
      const double t_half = s <= 0.5 ? kPi * s : 0.5 * kPi;
      if (same(nu, 0.5)) return c * t_half;
      if (same(nu, -0.5)) return c * (kPi - t_half);
      if (same(nu, 1.5)) return c * (s <= 0.5 ? kPi * s / 3.0 : 0.5 * kPi - kPi / (12.0 * s * s));
      break;
    }
    default:
      break;
  }
  return std::nullopt;
}

std::optional<double> closed_form_hankel(double nu, const RadialFunction& f, double rho) {
  const double c = f.scale();
  const double a = f.parameter();
  const bool undamped = f.damping() == 0.0;
  switch (f.kind()) {
    case RadialKind::gaussian:
      return c * std::exp(-2.0 * (nu + 1.0) * std::log(a) - rho * rho / (2.0 * a * a));
    case RadialKind::inverse_quadratic:
      if (undamped) return c * std::pow(rho, -nu) * bessel_k(nu, rho);
      break;
    case RadialKind::type_c:
      if (undamped) {
        const double kappa = 0.5 * a - nu - 1.0;
        return c * std::exp(-nu * std::log(2.0) - ln_gamma(0.5 * a) + kappa * std::log(0.5 * rho)) *
               bessel_k(kappa, rho);
      }
      break;
    case RadialKind::power_law:
      if (undamped && a < 2.0 * nu + 2.0) {
        const double lg = (nu + 1.0 - a) * std::log(2.0) + ln_gamma(nu + 1.0 - 0.5 * a) - ln_gamma(0.5 * a);
        return c * std::exp(lg) * std::pow(rho, a - 2.0 * nu - 2.0);
      }
      break;
    case RadialKind::coscusp: {
      if (!undamped) break;
      const double k = std::sqrt(0.5 * kPi);
      if (same(nu, 0.5)) return c * (rho < 1.0 ? k / rho : rho == 1.0 ? 0.5 * k : 0.0);
      if (same(nu, -0.5)) return c * k * std::max(0.0, 1.0 - rho);
      break;
    }
    default:
      break;
  }
  return std::nullopt;
}

TransformValue t_transform(double nu, const RadialFunction& f, double s, const QuadSpec& spec, Route route) {
  check_order(nu, "t_transform");
  validate(spec);
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("t_transform: s must be positive and finite");
  check_t_space(nu, f);
  switch (route) {
    case Route::closed_form: {
      const auto v = closed_form_t(nu, f, s);
      if (!v) throw DomainError("t_transform: no closed form for " + f.name());
      return exact(*v);
    }
    case Route::automatic:
      if (const auto v = closed_form_t(nu, f, s)) return exact(*v);
      return t_direct(nu, f, s, spec);
    case Route::direct_quadrature:
      return t_direct(nu, f, s, spec);
    case Route::kernel_route: {
      const RadialFunction g = hankel_image(nu, f, spec);
      if (same(nu, -0.5)) {
        const double v = u_half(0, [&g](double r) { return g(r); }, s);
        return TransformValue{v, 0.0, TransformMethod::kernel_route, true, 2};
      }
      TransformValue v = u_transform(OrderPair{0.0, nu, false}, g, s, spec);
      v.method = TransformMethod::kernel_route;
      return v;
    }
  }
  return t_direct(nu, f, s, spec);
}

TransformValue hankel(double nu, const RadialFunction& f, double rho, const QuadSpec& spec, Route route) {
  check_order(nu, "hankel");
  validate(spec);
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("hankel: rho must be positive and finite");
  check_hankel_origin(nu, f);
  switch (route) {
    case Route::closed_form: {
      const auto v = closed_form_hankel(nu, f, rho);
      if (!v) throw DomainError("hankel: no closed form for " + f.name());
      return exact(*v);
    }
    case Route::automatic:
      if (const auto v = closed_form_hankel(nu, f, rho)) return exact(*v);
      if (f.is_gaussian_mixture() && f.kind() != RadialKind::gaussian) return hankel_mixture(nu, f, rho, spec);
      return hankel_direct(nu, f, rho, spec);
    case Route::direct_quadrature:
    case Route::kernel_route:
      return hankel_direct(nu, f, rho, spec);
  }
  return hankel_direct(nu, f, rho, spec);
}

TransformValue hankel_regularized(double nu, const RadialFunction& f, double eps, double rho, const QuadSpec& spec,
                                  Route route) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("hankel_regularized: eps must be positive");
  return hankel(nu, f.damped(eps), rho, spec, route);
}

RadialFunction hankel_image(double nu, const RadialFunction& f, const QuadSpec& spec) {
  check_order(nu, "hankel_image");
  validate(spec);
  const double c = f.scale();
  const double a = f.parameter();
  const bool undamped = f.damping() == 0.0;
  if (f.kind() == RadialKind::gaussian) {
    return RadialFunction::gaussian(1.0 / a).scaled(c * std::exp(-2.0 * (nu + 1.0) * std::log(a)));
  }
  if (f.kind() == RadialKind::power_law && undamped && a < 2.0 * nu + 2.0) {
    const double lg = (nu + 1.0 - a) * std::log(2.0) + ln_gamma(nu + 1.0 - 0.5 * a) - ln_gamma(0.5 * a);
    return RadialFunction::power_law(2.0 * nu + 2.0 - a).scaled(c * std::exp(lg));
  }
  CustomProfile p;
  p.name = "H_" + std::to_string(nu) + "[" + f.name() + "]";
  if ((f.kind() == RadialKind::inverse_quadratic || f.kind() == RadialKind::type_c) && undamped) {
    const double kappa = 0.5 * a - nu - 1.0;
    const double at_zero = kappa > 0.0 ? c * std::exp(-nu * std::log(2.0) - ln_gamma(0.5 * a) + ln_gamma(kappa) - std::log(2.0))
                                       : kInf;
    const RadialFunction src = f;
    p.f = [src, nu, at_zero](double rho) { return rho == 0.0 ? at_zero : *closed_form_hankel(nu, src, rho); };
    p.origin_exponent = std::max(0.0, -2.0 * kappa);
    p.integrability = Integrability{p.origin_exponent - 1.0, false, kInf, false};
    const Integrand h = p.f;
    p.tail_terms.push_back(TailTerm{h, 0.0, 0.0, kInf});
    // h ~ rho^(kappa - 1/2) e^-rho, so its tail integral is at most h(R) R / (R - q) for R > q.
    const double q = std::max(kappa - 0.5, 0.0) + 1.0;
    p.abs_tail_bound = [h, q](double R) {
      return R > 2.0 * q ? std::fabs(h(R)) * R / (R - q) : kInf;
    };
    return RadialFunction::custom(std::move(p));
  }
  if (f.kind() == RadialKind::coscusp && undamped && (same(nu, 0.5) || same(nu, -0.5))) {
    const RadialFunction src = f;
    const bool half = same(nu, 0.5);
    const double k = std::sqrt(0.5 * kPi);
    p.f = [src, nu, half, c, k](double rho) {
      if (rho == 0.0) return half ? kInf : c * k;
      return *closed_form_hankel(nu, src, rho);
    };
    p.origin_exponent = half ? 1.0 : 0.0;
    p.integrability = Integrability{p.origin_exponent - 1.0, false, kInf, false};
    p.breakpoints = {1.0};
    const Integrand h = p.f;
    p.tail_terms.push_back(TailTerm{h, 0.0, 0.0, kInf});
    p.abs_tail_bound = [half, c, k](double R) {
      if (R >= 1.0) return 0.0;
      return std::fabs(c) * k * (half ? (R > 0.0 ? -std::log(R) : kInf) : 0.5 * (1.0 - R) * (1.0 - R));
    };
    return RadialFunction::custom(std::move(p));
  }
  const RadialFunction src = f;
  p.f = [src, nu, spec](double rho) {
    if (rho == 0.0) return hankel_at_zero(nu, src, spec);
    const TransformValue v = hankel(nu, src, rho, spec);
    if (!v.converged) throw ConvergenceError("hankel_image: quadrature did not converge at rho = " + std::to_string(rho));
    return v.value;
  };
  p.integrability = Integrability{-1.0, false, kInf, false};
  return RadialFunction::custom(std::move(p));
}

TransformValue dirac_t(double nu, double m, const RadialFunction& f, double r, const QuadSpec& spec, Route route) {
  if (!(m >= 0.0)) throw DomainError("dirac_t: mass must be >= 0");
  const TransformValue a = t_transform(nu, f, r, spec, route);
  const TransformValue b = t_transform(nu + 1.0, f, r, spec, route);
  const double w = std::isinf(m) ? 1.0 : m / std::hypot(r, m);
  TransformValue out;
  out.value = a.value + b.value + w * std::fabs(a.value - b.value);
  out.error_estimate = (1.0 + w) * (a.error_estimate + b.error_estimate);
  out.method = a.method == b.method ? a.method : TransformMethod::direct_quadrature;
  out.converged = a.converged && b.converged;
  out.evaluations = a.evaluations + b.evaluations;
  return out;
}

}  // namespace bsq
