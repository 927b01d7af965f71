#include <cmath>
#include <numbers>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"
#include "bsq/transforms.hpp"

namespace bsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// sin(mu pi) without the rounding error of forming mu * pi for large mu.
double sin_pi(double mu) {
  const double n = std::round(mu);
  const double v = std::sin(kPi * (mu - n));
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

double prefactor(double nu) { return std::exp(0.5 * std::log(kPi) - nu * std::log(2.0) - ln_gamma(nu + 0.5)); }

double power(double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); }

// K at r, with delta = 2s - r supplied by the caller so that the factors
// vanishing or blowing up at r = 2s keep full relative precision.
double kernel_at_gap(const OrderPair& idx, double s, double r, double delta) {
  const double two_s = 2.0 * s;
  if (delta == 0.0) return 0.0;
  const double nu = idx.nu;
  const double e = 0.5 * (2.0 * nu - 1.0);
  const double base = prefactor(nu) * power(r, 2.0 * nu);
  const double gap = delta * (two_s + r);  // 4 s^2 - r^2
  if (delta > 0.0) {
    const double q = gap / (4.0 * s * s);  // 1 - r^2/(4 s^2)
    const double one_plus_x = 2.0 * q;    // x = 1 - r^2/(2 s^2)
    const double c = one_plus_x < 1.0 ? gegenbauer_c_near_minus_one(idx, one_plus_x)
                                      : gegenbauer_c(idx, 1.0 - r * r / (2.0 * s * s));
    return base * power(q, e) * c;
  }
  if (mu_is_integer(idx)) return 0.0;
  const double q = -gap / (4.0 * s * s);  // r^2/(4 s^2) - 1
  const double x_minus_one = 2.0 * q;
  const double d = x_minus_one < 1.0 ? gegenbauer_d_near_one(idx, x_minus_one)
                                     : gegenbauer_d(idx, r * r / (2.0 * s * s) - 1.0);
  return -sin_pi(idx.mu) * base * power(q, e) * d;
}

}  // namespace

double kernel_k(const OrderPair& idx, double r, double s) {
  validate(idx);
  if (idx.half_case) throw DomainError("kernel_k: the nu = -1/2 case has no kernel; use u_half");
  if (!(r > 0.0) || !(s > 0.0)) throw DomainError("kernel_k: need r > 0 and s > 0");
  return kernel_at_gap(idx, s, r, 2.0 * s - r);
}

TransformValue u_transform(const OrderPair& idx, const RadialFunction& g, double s, const QuadSpec& spec) {
  validate(idx);
  validate(spec);
  if (idx.half_case) throw DomainError("u_transform: the nu = -1/2 case is handled by u_half");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("u_transform: s must be positive and finite");
  const bool outer = !mu_is_integer(idx);
  const Integrand h = [&idx, &g, s](double r) {
    const double v = g(r);
    if (v == 0.0) return 0.0;
    return kernel_at_gap(idx, s, r, 2.0 * s - r) * v;
  };
  QuadSpec part = spec;
  part.abs_tol = spec.abs_tol / (outer ? 4.0 : 2.0);
  const double nu = idx.nu;
  const double e = 0.5 * (2.0 * nu - 1.0);
  const double origin = 2.0 * nu - g.origin_exponent();
  if (!(origin > -1.0)) {
    throw IntegrabilityError("u_transform: " + g.name() + " is too singular at the origin for the kernel");
  }
  QuadResult q;
  if (origin >= 0.0 && near_integer(origin, 1e-12)) {
    q = integrate_adaptive(h, 0.0, s, part);
  } else {
    q = integrate_endpoint_singular(h, 0.0, s, SingularEnd::lower, origin, part);
  }
  // Near r = 2s integrate in the distance to 2s.
  const Integrand inner = [&idx, &g, s](double delta) {
    const double r = 2.0 * s - delta;
    const double v = g(r);
    return v == 0.0 ? 0.0 : kernel_at_gap(idx, s, r, delta) * v;
  };
  q += integrate_endpoint_singular(inner, 0.0, s, SingularEnd::lower, e, part);
  if (outer && 2.0 * s < g.support_end()) {
    const Integrand near = [&idx, &g, s](double delta) {
      const double r = 2.0 * s + delta;
      const double v = g(r);
      return v == 0.0 ? 0.0 : kernel_at_gap(idx, s, r, -delta) * v;
    };
    q += integrate_endpoint_singular(near, 0.0, s, SingularEnd::lower, e, part);
    if (3.0 * s < g.support_end()) {
      // K decays like r^{-1-2mu}; combine with the slowest tail term of g.
      const TailModel tail = g.tail_model(3.0 * s);
      if (!tail.compact) {
        double decay = kInf;
        for (const TailTerm& t : tail.terms) decay = std::min(decay, t.decay);
        if (tail.terms.empty()) decay = 0.0;
        q += integrate_oscillatory_tail({OscillatoryComponent{h, 0.0, 1.0 + 2.0 * idx.mu + decay}}, 3.0 * s, part);
      }
    }
  }
  return TransformValue{q.value, q.error_estimate, TransformMethod::kernel_route, q.converged, q.evaluations};
}

double u_half(int mu, const std::function<double(double)>& g, double s) {
  if (mu != 0 && mu != 1) throw DomainError("u_half: mu must be 0 or 1");
  if (!(s > 0.0)) throw DomainError("u_half: s must be positive");
  const double g0 = g(0.0);
  if (!std::isfinite(g0)) throw DomainError("u_half: g(0) is not finite");
  const double g2 = g(2.0 * s);
  const double k = std::sqrt(0.5 * kPi);
  return mu == 0 ? k * (g0 + g2) : k * (g0 - g2);
}

}  // namespace bsq
