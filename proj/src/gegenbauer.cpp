#include "bsq/gegenbauer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr double kPi = std::numbers::pi;

double snapped_mu(const OrderPair& idx) {
  return mu_is_integer(idx) ? std::round(idx.mu) : idx.mu;
}

void require_gegenbauer(const OrderPair& idx) {
  validate(idx);
  if (idx.half_case) throw DomainError("Gegenbauer functions need nu > -1/2");
}

// C from z = (1-x)/2 and w = 1 - z = (1+x)/2.
double c_from(const OrderPair& idx, double z, double w) {
  const double mu = snapped_mu(idx);
  return hyp2f1(-mu, mu + 2.0 * idx.nu, idx.nu + 0.5, z, w);
}

// D from x and w = 1 - 1/x^2.
double d_from(const OrderPair& idx, double x, double w) {
  const double mu = snapped_mu(idx);
  const double nu = idx.nu;
  const double f = hyp2f1(0.5 * mu + nu, 0.5 * (mu + 2.0 * nu + 1.0), mu + nu + 1.0, 1.0 / (x * x), w);
  return gegenbauer_d_infinity_coefficient(idx) * std::pow(x, -(mu + 2.0 * nu)) * f;
}

}  // namespace

void validate(const OrderPair& idx) {
  if (!std::isfinite(idx.mu) || !std::isfinite(idx.nu)) throw DomainError("OrderPair: non-finite index");
  if (idx.mu < 0.0) throw DomainError("OrderPair: mu must be >= 0");
  if (idx.half_case) {
    if (idx.nu != -0.5) throw DomainError("OrderPair: half_case requires nu = -1/2");
    return;
  }
  if (!(idx.nu > -0.5)) throw DomainError("OrderPair: nu must be > -1/2");
}

bool mu_is_integer(const OrderPair& idx) { return near_integer(idx.mu, kIntegerMuTol); }

double gegenbauer_c(const OrderPair& idx, double x) {
  require_gegenbauer(idx);
  if (!(x > -1.0 && x <= 1.0)) throw DomainError("gegenbauer_c: x must lie in (-1, 1]");
  if (x == 1.0) return 1.0;
  if (x < 0.0) return c_from(idx, 0.5 * (1.0 - x), 0.5 * (1.0 + x));
  return c_from(idx, 0.5 * (1.0 - x), 1.0 - 0.5 * (1.0 - x));
}

double gegenbauer_c_near_minus_one(const OrderPair& idx, double one_plus_x) {
  require_gegenbauer(idx);
  if (!(one_plus_x > 0.0 && one_plus_x <= 2.0)) {
    throw DomainError("gegenbauer_c_near_minus_one: distance must lie in (0, 2]");
  }
  const double w = 0.5 * one_plus_x;
  return c_from(idx, 1.0 - w, w);
}

double gegenbauer_d(const OrderPair& idx, double x) {
  require_gegenbauer(idx);
  if (!(x > 1.0)) throw DomainError("gegenbauer_d: x must be > 1");
  if (std::isinf(x)) return 0.0;
  const double w = (x - 1.0) * (x + 1.0) / (x * x);
  return d_from(idx, x, w);
}

double gegenbauer_d_near_one(const OrderPair& idx, double x_minus_one) {
  require_gegenbauer(idx);
  if (!(x_minus_one > 0.0)) throw DomainError("gegenbauer_d_near_one: distance must be > 0");
  const double x = 1.0 + x_minus_one;
  const double w = x_minus_one * (x + 1.0) / (x * x);
  return d_from(idx, x, w);
}

double gegenbauer_d_infinity_coefficient(const OrderPair& idx) {
  const double mu = snapped_mu(idx);
  const double nu = idx.nu;
  return std::exp(ln_gamma(mu + 1.0) + ln_gamma(nu + 0.5) - ln_gamma(mu + nu + 1.0) - 0.5 * std::log(kPi) -
                  mu * std::numbers::ln2);
}

double legendre_p(double deg, double ord, double x) {
  if (!(x > -1.0 && x < 1.0)) throw DomainError("legendre_p: x must lie in (-1, 1)");
  const double c = 1.0 - ord;
  if (c <= 0.0 && c == std::floor(c)) throw DomainError("legendre_p: integer order >= 1 is not supported");
  const double z = 0.5 * (1.0 - x);
  const double w = 0.5 * (1.0 + x);
  const double f = hyp2f1(deg + 1.0, -deg, c, z, w);
  return rgamma(c) * std::pow((1.0 + x) / (1.0 - x), 0.5 * ord) * f;
}

double legendre_q(double deg, double ord, double x) {
  if (!(x > 1.0)) throw DomainError("legendre_q: x must be > 1");
  if (!(ord + deg + 1.0 > 0.0) || !(deg + 1.5 > 0.0)) {
    throw DomainError("legendre_q: need ord + deg + 1 > 0 and deg + 3/2 > 0");
  }
  const double w = (x - 1.0) * (x + 1.0) / (x * x);
  const double f = hyp2f1(0.5 * (ord + deg + 2.0), 0.5 * (ord + deg + 1.0), deg + 1.5, 1.0 / (x * x), w);
  const double log_pref = 0.5 * std::log(kPi) + ln_gamma(ord + deg + 1.0) - (deg + 1.0) * std::numbers::ln2 -
                          ln_gamma(deg + 1.5);
  return std::exp(log_pref) * std::pow((x - 1.0) * (x + 1.0), 0.5 * ord) * std::pow(x, -(ord + deg + 1.0)) * f;
}

double AsymptoteDescriptor::evaluate_at_distance(double delta) const {
  switch (form) {
    case Form::constant:
      return coefficient;
    case Form::log_singular:
      return coefficient * std::log(2.0 / delta);
    case Form::power_singular:
      return coefficient * std::pow(2.0 / delta, exponent);
    case Form::power_decay:
      return coefficient * std::pow(delta, -exponent);
  }
  return coefficient;
}

double AsymptoteDescriptor::evaluate(double x) const {
  switch (regime) {
    case Regime::x_to_minus1:
      return evaluate_at_distance(x + 1.0);
    case Regime::x_to_1_from_below:
      return evaluate_at_distance(1.0 - x);
    case Regime::x_to_1_from_above:
      return evaluate_at_distance(x - 1.0);
    case Regime::x_to_inf:
      return evaluate_at_distance(x);
  }
  return coefficient;
}

AsymptoteDescriptor cd_limit(const OrderPair& idx, Regime regime) {
  require_gegenbauer(idx);
  const double mu = snapped_mu(idx);
  const double nu = idx.nu;
  const bool mu_int = mu_is_integer(idx);
  const bool nu_half = std::fabs(nu - 0.5) < 1e-12;
  AsymptoteDescriptor d;
  d.regime = regime;
  std::ostringstream text;
  switch (regime) {
    case Regime::x_to_minus1:
      d.function = 'C';
      if (mu_int) {
        d.form = AsymptoteDescriptor::Form::constant;
        d.coefficient = (static_cast<long>(mu) % 2 == 0) ? 1.0 : -1.0;
        text << "C -> (-1)^mu";
      } else if (nu_half) {
        d.form = AsymptoteDescriptor::Form::log_singular;
        d.coefficient = -std::sin(mu * kPi) / kPi;
        text << "C ~ -sin(mu pi)/pi * log(2/(1+x))";
      } else if (nu < 0.5) {
        d.form = AsymptoteDescriptor::Form::constant;
        d.coefficient = std::cos((mu + nu) * kPi) / std::cos(nu * kPi);
        text << "C -> cos((mu+nu) pi)/cos(nu pi)";
      } else {
        d.form = AsymptoteDescriptor::Form::power_singular;
        d.exponent = nu - 0.5;
        d.coefficient = std::tgamma(nu + 0.5) * std::tgamma(nu - 0.5) * rgamma(-mu) * rgamma(mu + 2.0 * nu);
        text << "C ~ G(nu+1/2) G(nu-1/2) / (G(-mu) G(mu+2nu)) * (2/(1+x))^(nu-1/2)";
      }
      break;
    case Regime::x_to_1_from_below:
      d.function = 'C';
      d.form = AsymptoteDescriptor::Form::constant;
      d.coefficient = 1.0;
      text << "C -> 1";
      break;
    case Regime::x_to_1_from_above:
      d.function = 'D';
      if (nu_half) {
        d.form = AsymptoteDescriptor::Form::log_singular;
        d.coefficient = 1.0 / kPi;
        text << "D ~ (1/pi) log(2/(x-1))";
      } else if (nu < 0.5) {
        d.form = AsymptoteDescriptor::Form::constant;
        d.coefficient = 1.0 / std::cos(nu * kPi);
        text << "D -> 1/cos(nu pi)";
      } else {
        d.form = AsymptoteDescriptor::Form::power_singular;
        d.exponent = nu - 0.5;
        d.coefficient = std::exp(ln_gamma(mu + 1.0) + ln_gamma(nu + 0.5) + ln_gamma(nu - 0.5) -
                                 ln_gamma(mu + 2.0 * nu)) /
                        kPi;
        text << "D ~ G(mu+1) G(nu+1/2) G(nu-1/2) / (pi G(mu+2nu)) * (2/(x-1))^(nu-1/2)";
      }
      break;
    case Regime::x_to_inf:
      d.function = 'D';
      d.form = AsymptoteDescriptor::Form::power_decay;
      d.exponent = mu + 2.0 * nu;
      d.coefficient = gegenbauer_d_infinity_coefficient(idx);
      text << "D ~ G(mu+1) G(nu+1/2) / (sqrt(pi) 2^mu G(mu+nu+1)) * x^-(mu+2nu)";
      break;
  }
  d.description = text.str();
  return d;
}

}  // namespace bsq
