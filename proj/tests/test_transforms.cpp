#include <cmath>
#include <numbers>
#include <vector>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"
#include "bsq/transforms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsq;
using bsq::test::Gen;
using bsq::test::rel_diff;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double direct_t(double nu, const RadialFunction& f, double s) {
  return t_transform(nu, f, s, QuadSpec{}, Route::direct_quadrature).value;
}

// exp(-r^2/2) - 2 exp(-2 r^2): its order-0 Hankel image is negative at 0 and
// positive for large rho.
RadialFunction sign_changing_profile() {
  CustomProfile p;
  p.name = "gauss_difference";
  p.f = [](double r) { return std::exp(-0.5 * r * r) - 2.0 * std::exp(-2.0 * r * r); };
  p.integrability = Integrability{-1.0, false, kInf, false};
  p.tail_terms.push_back(TailTerm{p.f, 0.0, 0.0, kInf});
  p.abs_tail_bound = [](double R) { return 3.0 * std::exp(-0.5 * R * R) / R; };
  return RadialFunction::custom(std::move(p));
}

}  // namespace

TEST_CASE("direct T of the Gaussian matches pi s exp(-s^2) I_nu(s^2)") {
  Gen gen(41);
  const RadialFunction g = RadialFunction::gaussian();
  for (int i = 0; i < 25; ++i) {
    const double nu = gen.uniform(-0.5, 4.0);
    const double s = gen.log_uniform(0.05, 10.0);
    CAPTURE(nu);
    CAPTURE(s);
    const double exact = kPi * s * bessel_i_scaled(nu, s * s);
    CHECK(rel_diff(direct_t(nu, g, s), exact) < 1e-8);
    CHECK(rel_diff(*closed_form_t(nu, g, s), exact) < 1e-14);
  }
}

TEST_CASE("direct T of the inverse quadratic matches pi s I_nu(s) K_nu(s)") {
  Gen gen(42);
  const RadialFunction f = RadialFunction::inverse_quadratic();
  for (int i = 0; i < 25; ++i) {
    const double nu = gen.uniform(-0.5, 4.0);
    const double s = gen.log_uniform(0.05, 10.0);
    CAPTURE(nu);
    CAPTURE(s);
    const double exact = kPi * s * bessel_i_scaled(nu, s) * bessel_k_scaled(nu, s);
    CHECK(rel_diff(direct_t(nu, f, s), exact) < 1e-8);
  }
}

TEST_CASE("the automatic route reports the method it used") {
  const TransformValue a = t_transform(0.5, RadialFunction::gaussian(), 1.0);
  CHECK(a.method == TransformMethod::closed_form);
  CHECK(rel_diff(a.value, kPi * std::exp(-1.0) * bessel_i(0.5, 1.0)) < 1e-14);
  const TransformValue b = t_transform(0.5, sign_changing_profile(), 1.0);
  CHECK(b.method == TransformMethod::direct_quadrature);
  CHECK(b.converged);
}

TEST_CASE("Hankel transforms of the Gaussian and the inverse quadratic") {
  Gen gen(43);
  for (int i = 0; i < 20; ++i) {
    const double nu = gen.uniform(-0.5, 1.4);
    const double rho = gen.log_uniform(0.05, 8.0);
    CAPTURE(nu);
    CAPTURE(rho);
    const double hg = hankel(nu, RadialFunction::gaussian(), rho, QuadSpec{}, Route::direct_quadrature).value;
    CHECK(std::fabs(hg - std::exp(-0.5 * rho * rho)) < 1e-9);
    const double hq = hankel(nu, RadialFunction::inverse_quadratic(), rho, QuadSpec{}, Route::direct_quadrature).value;
    const double kq = std::pow(rho, -nu) * bessel_k(nu, rho);
    CHECK(std::fabs(hq - kq) < 1e-8 * std::fmax(1.0, kq));
  }
}

TEST_CASE("Hankel image at the origin is the normalised moment") {
  // int r^{2nu+1} exp(-r^2/2) / (2^nu Gamma(nu+1)) = 1
  for (double nu : {-0.5, 0.0, 0.7, 2.0}) {
    CHECK(hankel_image(nu, RadialFunction::gaussian())(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("T scales like the transform of a dilated profile") {
  // T_nu [f(a r)](s) = T_nu f(s / a) / a
  Gen gen(44);
  for (int i = 0; i < 10; ++i) {
    const double a = gen.uniform(0.3, 3.0), nu = gen.uniform(0.0, 3.0), s = gen.log_uniform(0.1, 5.0);
    const double lhs = direct_t(nu, RadialFunction::gaussian(a), s);
    const double rhs = direct_t(nu, RadialFunction::gaussian(), s / a) / a;
    CHECK(rel_diff(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("kernel vanishes where it must") {
  Gen gen(45);
  for (int i = 0; i < 50; ++i) {
    const double nu = gen.uniform(-0.4, 3.0), s = gen.log_uniform(0.1, 10.0);
    const double mu = static_cast<double>(gen.next() % 4);
    CHECK(kernel_k({mu, nu}, 2.0 * s, s) == 0.0);
    if (mu > 0.0) CHECK(kernel_k({mu, nu}, 2.0 * s * gen.uniform(1.01, 5.0), s) == 0.0);
  }
  CHECK(kernel_k({0.5, 0.5}, 3.0, 1.0) != 0.0);
}

TEST_CASE("the order -1/2 operator acts on the two endpoints") {
  auto g = [](double r) { return std::exp(-r); };
  const double c = std::sqrt(0.5 * kPi);
  CHECK(u_half(0, g, 1.5) == doctest::Approx(c * (1.0 + std::exp(-3.0))));
  CHECK(u_half(1, g, 1.5) == doctest::Approx(c * (1.0 - std::exp(-3.0))));
}

TEST_CASE("U of the Hankel image reproduces T on random orders") {
  Gen gen(46);
  for (int i = 0; i < 8; ++i) {
    const double mu = gen.uniform(0.0, 2.0), nu = gen.uniform(-0.3, 2.0), s = gen.log_uniform(0.2, 5.0);
    CAPTURE(mu);
    CAPTURE(nu);
    CAPTURE(s);
    const RadialFunction f = RadialFunction::gaussian(gen.uniform(0.5, 2.0));
    const TransformValue u = u_transform({mu, nu}, hankel_image(nu, f), s);
    CHECK(std::fabs(u.value - direct_t(mu + nu, f, s)) < 1e-7);
  }
}

TEST_CASE("the Dirac combination reduces to the sum at zero mass") {
  const RadialFunction f = RadialFunction::inverse_quadratic();
  const double sum = t_transform(0.5, f, 1.3).value + t_transform(1.5, f, 1.3).value;
  CHECK(rel_diff(dirac_t(0.5, 0.0, f, 1.3).value, sum) < 1e-12);
  const double diff = std::fabs(t_transform(0.5, f, 1.3).value - t_transform(1.5, f, 1.3).value);
  CHECK(rel_diff(dirac_t(0.5, 2.0, f, 1.3).value, sum + 2.0 / std::sqrt(1.69 + 4.0) * diff) < 1e-12);
}

TEST_CASE("non-negativity probe classifies sign patterns") {
  const auto eps = default_probe_eps();
  const auto rho = default_probe_rho(60);
  // exp(-rho^2/2) falls below the rounding band on the far end of the default grid.
  std::vector<double> near;
  for (double r : rho) {
    if (r <= 5.0) near.push_back(r);
  }
  CHECK(nonneg_probe(0.5, RadialFunction::gaussian(), eps, near).classification ==
        ProbeClass::strictly_positive_on_grid);
  CHECK(nonneg_probe(0.5, RadialFunction::gaussian(), eps, rho).classification == ProbeClass::nonnegative_on_grid);
  const ProbeResult bad = nonneg_probe(0.0, sign_changing_profile(), eps, rho);
  CHECK(bad.classification == ProbeClass::violated);
  CHECK(bad.min_value < 0.0);
  CHECK_FALSE(bad.report.passed);
}

TEST_CASE("transforms reject inputs outside their domain") {
  CHECK_THROWS_AS(t_transform(-0.7, RadialFunction::gaussian(), 1.0), DomainError);
  CHECK_THROWS_AS(t_transform(0.5, RadialFunction::gaussian(), -1.0), DomainError);
  CHECK_THROWS_AS(t_transform(0.5, RadialFunction::power_law(0.5), 1.0), IntegrabilityError);
  CHECK_THROWS_AS(hankel(0.5, RadialFunction::gaussian(), 0.0), DomainError);
  CHECK_THROWS(RadialFunction::type_c(-1.0));
}

TEST_CASE("Hankel transforms of (1 - cos r)/r^2 at orders -1/2 and 1/2") {
  const RadialFunction f = RadialFunction::coscusp();
  const double c = std::sqrt(0.5 * kPi);
  for (double rho : {0.25, 0.5, 0.8, 1.5, 3.0}) {
    CAPTURE(rho);
    CHECK(std::fabs(hankel(-0.5, f, rho).value - c * std::fmax(0.0, 1.0 - rho)) < 1e-7);
    CHECK(std::fabs(hankel(0.5, f, rho).value - (rho < 1.0 ? c / rho : 0.0)) < 1e-7);
  }
}
