#include <cmath>
#include <complex>
#include <numbers>

#include "bsq/errors.hpp"
#include "bsq/quadrature.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResonanceTol = 1e-12;

std::complex<double> hankel1(double nu, double x) {
  const BesselJY v = bessel_jy(nu, x);
  return {v.j, v.y};
}

// (pi x / 2) (J^2 + Y^2); tends to 1 as x -> inf.
double modulus_factor(double nu, double x) {
  const BesselJY v = bessel_jy(nu, x);
  return 0.5 * kPi * x * (v.j * v.j + v.y * v.y);
}

bool is_resonant(double freq) { return std::fabs(freq) <= kResonanceTol; }

// True when the sampled component is identically zero up to round-off
// relative to the reference magnitude.
bool vanishes(const Integrand& h, const Integrand& reference, double A) {
  for (int k = 0; k < 6; ++k) {
    const double r = A * std::pow(2.0, k) + 0.37 * k;
    const double ref = std::fabs(reference(r));
    if (ref == 0.0) continue;
    if (std::fabs(h(r)) > 1e-11 * ref) return false;
  }
  return true;
}

}  // namespace

QuadResult integrate_bessel_square_tail(double nu, const TailModel& tail, double s, double A, const QuadSpec& spec) {
  validate(spec);
  if (!(A > 0.0) || !(s > 0.0)) throw DomainError("integrate_bessel_square_tail: need A > 0 and s > 0");
  if (tail.compact) return QuadResult{};
  if (!tail.abs_tail_bound) {
    throw IntegrabilityError("integrate_bessel_square_tail: no bound for the tail of |f| is available");
  }
  // pi x J^2 <= 2 P(x), and P is monotone on the tail, so its sup is at an end.
  const double pmax = std::max(1.0, modulus_factor(nu, A * s));
  const double bound = 2.0 * pmax * tail.abs_tail_bound(A);
  if (bound <= 0.1 * spec.abs_tol) {
    QuadResult r;
    r.error_estimate = bound;
    return r;
  }
  std::vector<OscillatoryComponent> comps;
  for (const TailTerm& t : tail.terms) {
    const Integrand a = t.amplitude;
    const double om = t.omega, ph = t.phase;
    comps.push_back({[nu, s, a, om, ph](double r) { return modulus_factor(nu, r * s) * a(r) * std::cos(om * r + ph); },
                     om, t.decay});
    if (om == 0.0) {
      // P cos(2 theta) a(r) = (pi x / 2)(J^2 - Y^2) a(r).
      comps.push_back({[nu, s, a, ph](double r) {
                         const BesselJY v = bessel_jy(nu, r * s);
                         return 0.5 * kPi * r * s * (v.j * v.j - v.y * v.y) * a(r) * std::cos(ph);
                       },
                       2.0 * s, t.decay});
      continue;
    }
    for (int sign : {+1, -1}) {
      const double freq = 2.0 * s + sign * om;
      comps.push_back({[nu, s, a, om, ph, sign](double r) {
                         const std::complex<double> h = hankel1(nu, r * s);
                         const std::complex<double> rot = std::polar(1.0, sign * (om * r + ph));
                         return 0.25 * kPi * r * s * a(r) * std::real(h * h * rot);
                       },
                       std::fabs(freq), t.decay});
    }
  }
  return integrate_oscillatory_tail(comps, A, spec);
}

QuadResult integrate_hankel_tail(double nu, const TailModel& tail, double rho, double A, const QuadSpec& spec) {
  validate(spec);
  if (!(A > 0.0) || !(rho > 0.0)) throw DomainError("integrate_hankel_tail: need A > 0 and rho > 0");
  if (tail.compact) return QuadResult{};
  if (tail.terms.empty()) {
    throw IntegrabilityError("integrate_hankel_tail: no asymptotic model of the tail is available");
  }
  std::vector<OscillatoryComponent> comps;
  for (const TailTerm& t : tail.terms) {
    const Integrand a = t.amplitude;
    const double om = t.omega, ph = t.phase;
    const double decay = t.decay - nu - 0.5;
    if (om == 0.0) {
      comps.push_back({[nu, rho, a, ph](double r) {
                         return std::pow(r, nu + 1.0) * bessel_j(nu, r * rho) * a(r) * std::cos(ph);
                       },
                       rho, decay});
      continue;
    }
    for (int sign : {+1, -1}) {
      const double freq = rho + sign * om;
      const Integrand h = [nu, rho, a, om, ph, sign](double r) {
        const std::complex<double> hv = hankel1(nu, r * rho);
        return 0.5 * std::pow(r, nu + 1.0) * a(r) * std::real(hv * std::polar(1.0, sign * (om * r + ph)));
      };
      if (is_resonant(freq)) {
        const Integrand ref = [nu, rho, a](double r) {
          return 0.5 * std::pow(r, nu + 1.0) * a(r) * std::abs(hankel1(nu, r * rho));
        };
        if (vanishes(h, ref, A)) continue;
        if (!(decay > 1.0)) {
          throw IntegrabilityError("integrate_hankel_tail: resonant tail component is not integrable");
        }
      }
      comps.push_back({h, std::fabs(freq), decay});
    }
  }
  for (const OscillatoryComponent& c : comps) {
    if (!(c.decay > 0.0)) throw IntegrabilityError("integrate_hankel_tail: integrand does not decay");
  }
  return integrate_oscillatory_tail(comps, A, spec);
}

}  // namespace bsq
