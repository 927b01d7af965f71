#pragma once

#include <string>

namespace bsq {

// Indices (mu, nu) of the Gegenbauer functions and of the kernel transform.
// half_case marks the separate nu = -1/2 path, which has no Gegenbauer form.
struct OrderPair {
  double mu = 0.0;
  double nu = 0.0;
  bool half_case = false;
};

// Throws DomainError unless mu >= 0 and nu > -1/2 (or half_case with nu = -1/2).
void validate(const OrderPair& idx);

// mu counts as an integer when it is within this distance of one.
inline constexpr double kIntegerMuTol = 1e-9;

bool mu_is_integer(const OrderPair& idx);

// C_{mu,nu}(x) = 2F1(-mu, mu+2nu; nu+1/2; (1-x)/2) on (-1, 1].
double gegenbauer_c(const OrderPair& idx, double x);

// C_{mu,nu}(-1 + one_plus_x) for one_plus_x in (0, 2]; keeps full relative
// precision in the distance to -1.
double gegenbauer_c_near_minus_one(const OrderPair& idx, double one_plus_x);

// D_{mu,nu}(x) on (1, inf).
double gegenbauer_d(const OrderPair& idx, double x);

// D_{mu,nu}(1 + x_minus_one) for x_minus_one > 0.
double gegenbauer_d_near_one(const OrderPair& idx, double x_minus_one);

// Leading coefficient of D at infinity: D(x) x^{mu+2nu} -> this value.
double gegenbauer_d_infinity_coefficient(const OrderPair& idx);

// Legendre functions with order `ord` (superscript) and degree `deg`.
// P is defined on (-1, 1) and requires 1 - ord not a non-positive integer.
double legendre_p(double deg, double ord, double x);
// Q is defined on (1, inf) and requires ord + deg + 1 > 0.
double legendre_q(double deg, double ord, double x);

enum class Regime { x_to_minus1, x_to_1_from_below, x_to_1_from_above, x_to_inf };

// Leading-order behaviour of C or D in one regime:
//   constant:          coefficient
//   log_singular:      coefficient * log(2 / delta)
//   power_singular:    coefficient * (2 / delta)^exponent
//   power_decay:       coefficient * x^(-exponent)
// where delta is the distance from x to the regime's endpoint.
struct AsymptoteDescriptor {
  enum class Form { constant, log_singular, power_singular, power_decay };
  char function = 'C';  // 'C' or 'D'
  Regime regime = Regime::x_to_1_from_below;
  Form form = Form::constant;
  double coefficient = 1.0;
  double exponent = 0.0;
  std::string description;

  double evaluate(double x) const;
  // Same, with the distance to the endpoint given directly.
  double evaluate_at_distance(double delta) const;
};

AsymptoteDescriptor cd_limit(const OrderPair& idx, Regime regime);

}  // namespace bsq
