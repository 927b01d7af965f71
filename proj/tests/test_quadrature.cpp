#include <cmath>
#include <numbers>

#include "bsq/errors.hpp"
#include "bsq/quadrature.hpp"
#include "bsq/specfun.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsq;
using bsq::test::Gen;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// The true error must not exceed a small multiple of the reported estimate.
void check_honest(const QuadResult& r, double exact, double floor = 1e-14) {
  CAPTURE(r.value);
  CAPTURE(exact);
  CAPTURE(r.error_estimate);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - exact) <= 10.0 * r.error_estimate + floor * std::fmax(1.0, std::fabs(exact)));
}
}  // namespace

TEST_CASE("adaptive rule integrates smooth functions") {
  const QuadSpec spec;
  check_honest(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, spec), 2.0);
  check_honest(integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0, spec), std::sqrt(kPi));
  check_honest(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1e3, spec),
               std::atan(1e3));
}

TEST_CASE("adaptive rule is exact on random polynomials") {
  Gen gen(31);
  for (int i = 0; i < 50; ++i) {
    const double a = gen.uniform(-3.0, 0.0), b = gen.uniform(0.0, 3.0);
    double c[6];
    for (double& ci : c) ci = gen.uniform(-1.0, 1.0);
    auto p = [&c](double x) {
      double v = 0.0;
      for (int k = 5; k >= 0; --k) v = v * x + c[k];
      return v;
    };
    auto prim = [&c](double x) {
      double v = 0.0;
      for (int k = 5; k >= 0; --k) v = v * x + c[k] / (k + 1);
      return v * x;
    };
    const QuadResult r = integrate_adaptive(p, a, b, QuadSpec{});
    CHECK(std::fabs(r.value - (prim(b) - prim(a))) < 1e-12);
  }
}

TEST_CASE("panel rule matches a single interval") {
  auto f = [](double x) { return std::fabs(x - 1.0) * std::cos(x); };
  const QuadResult r = integrate_panels(f, {0.0, 1.0, 2.5}, QuadSpec{});
  check_honest(r, (1.0 - std::cos(1.0)) + (1.5 * std::sin(2.5) + std::cos(2.5) - std::cos(1.0)));
}

TEST_CASE("endpoint-singular rule handles algebraic singularities") {
  const QuadSpec spec;
  for (double e : {-0.5, -0.9, -0.95, 0.5}) {
    CAPTURE(e);
    check_honest(integrate_endpoint_singular([e](double x) { return std::pow(x, e); }, 0.0, 1.0, SingularEnd::lower, e,
                                             spec),
                 1.0 / (e + 1.0), 1e-12);
  }
  // 1 - x rounds near the upper end, so only mild singularities are resolvable there.
  for (double e : {-0.5, 0.5}) {
    CAPTURE(e);
    check_honest(integrate_endpoint_singular([e](double x) { return std::pow(1.0 - x, e); }, 0.0, 1.0,
                                             SingularEnd::upper, e, spec),
                 1.0 / (e + 1.0), 1e-7);
  }
  // Beta(1/2, 1/2) = pi
  check_honest(integrate_endpoint_singular([](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, 0.0, 1.0,
                                           SingularEnd::both, -0.5, spec),
               kPi, 1e-12);
}

TEST_CASE("oscillatory tails sum to the known improper integrals") {
  const QuadSpec spec;
  // int_0^inf sin x / x = pi/2
  const double A = 10.0;
  const QuadResult head = integrate_adaptive([](double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }, 0.0, A, spec);
  const QuadResult tail = integrate_oscillatory_tail(
      {OscillatoryComponent{[](double x) { return std::sin(x) / x; }, 1.0, 1.0}}, A, spec);
  check_honest(head + tail, 0.5 * kPi, 1e-12);
  // int_0^inf J_0 = 1
  const QuadResult jh = integrate_adaptive([](double x) { return bessel_j(0.0, x); }, 0.0, 20.0, spec);
  const QuadResult jt =
      integrate_oscillatory_tail({OscillatoryComponent{[](double x) { return bessel_j(0.0, x); }, 1.0, 0.5}}, 20.0, spec);
  check_honest(jh + jt, 1.0, 1e-10);
  // Non-oscillatory piece: int_1^inf x^-3 = 1/2
  check_honest(integrate_oscillatory_tail({OscillatoryComponent{[](double x) { return std::pow(x, -3.0); }, 0.0, 3.0}},
                                          1.0, spec),
               0.5, 1e-12);
}

TEST_CASE("bessel-square tail of a power law matches the closed form") {
  // pi s int_0^inf r J_nu(r s)^2 r^-a dr has a closed form; compare head + tail.
  const double nu = 0.5, a = 1.5, s = 2.0;
  TailModel tail;
  tail.terms.push_back(TailTerm{[a](double r) { return std::pow(r, -a); }, 0.0, 0.0, a});
  tail.abs_tail_bound = [a](double R) { return std::pow(R, 1.0 - a) / (a - 1.0); };
  const QuadSpec spec;
  const double A = 15.0;
  const QuadResult head = integrate_endpoint_singular(
      [&](double r) {
        const double j = bessel_j(nu, r * s);
        return kPi * s * r * j * j * std::pow(r, -a);
      },
      0.0, A, SingularEnd::lower, 2.0 * nu + 1.0 - a, spec);
  const QuadResult t = integrate_bessel_square_tail(nu, tail, s, A, spec);
  // int_0^inf t^{1-a} J_nu(t)^2 dt = Gamma(a-1) Gamma(nu+1-a/2) / (2^{a-1} Gamma(a/2)^2 Gamma(nu+a/2))
  const double m = std::exp(ln_gamma(a - 1.0) + ln_gamma(nu + 1.0 - 0.5 * a) - (a - 1.0) * std::log(2.0) -
                            2.0 * ln_gamma(0.5 * a) - ln_gamma(nu + 0.5 * a));
  check_honest(head + t, kPi * std::pow(s, a - 1.0) * m, 1e-9);
}

TEST_CASE("hankel tail rejects resonant slowly decaying components") {
  TailModel tail;
  tail.terms.push_back(TailTerm{[](double r) { return 1.0 / r; }, 1.0, 0.0, 1.0});
  CHECK_THROWS_AS(integrate_hankel_tail(0.5, tail, 1.0, 10.0, QuadSpec{}), IntegrabilityError);
}

TEST_CASE("invalid quadrature specs are rejected") {
  QuadSpec s;
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(validate(s), DomainError);
  s = QuadSpec{};
  s.rel_tol = -1.0;
  CHECK_THROWS_AS(validate(s), DomainError);
  s = QuadSpec{};
  s.max_depth = 61;
  CHECK_THROWS_AS(validate(s), DomainError);
  CHECK_NOTHROW(validate(QuadSpec{}));
}

TEST_CASE("non-finite integrands are reported") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x > 0.5 ? kInf : 0.0; }, 0.0, 1.0, QuadSpec{}),
                  NonFiniteIntegrand);
}

TEST_CASE("non-converged results are reported by require_converged") {
  QuadResult r;
  r.converged = false;
  CHECK_THROWS_AS(require_converged(r, "test"), ConvergenceError);
  r.converged = true;
  CHECK_NOTHROW(require_converged(r, "test"));
}
