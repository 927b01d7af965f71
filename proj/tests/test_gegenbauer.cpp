#include <cmath>

#include "bsq/errors.hpp"
#include "bsq/gegenbauer.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsq;
using bsq::test::Gen;
using bsq::test::rel_diff;

namespace {

// Gegenbauer polynomial C_k^lambda(x) by its recurrence, normalised to 1 at x = 1.
double normalized_gegenbauer_poly(int k, double lambda, double x) {
  auto eval = [k, lambda](double t) {
    double p0 = 1.0, p1 = 2.0 * lambda * t;
    if (k == 0) return p0;
    for (int n = 1; n < k; ++n) {
      const double p2 = (2.0 * t * (n + lambda) * p1 - (n + 2.0 * lambda - 1.0) * p0) / (n + 1.0);
      p0 = p1;
      p1 = p2;
    }
    return p1;
  };
  return eval(x) / eval(1.0);
}

}  // namespace

TEST_CASE("C matches references") {
  CHECK(rel_diff(gegenbauer_c({0.5, 0.75}, 0.3), 0.67776489490646011307) < 1e-12);
  CHECK(rel_diff(gegenbauer_c({1.3, 0.2}, -0.8), -0.78757993855714222766) < 1e-12);
  CHECK(rel_diff(gegenbauer_c({2.5, 1.0}, 0.999), 0.99625309327115546781) < 1e-12);
  CHECK(rel_diff(gegenbauer_c({0.7, -0.3}, -0.99), 0.53416101999869561633) < 1e-11);
}

TEST_CASE("C at integer mu is the normalised Gegenbauer polynomial") {
  Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const int k = static_cast<int>(gen.next() % 7);
    const double nu = gen.uniform(-0.45, 3.0);
    const double x = gen.uniform(-0.999, 1.0);
    CAPTURE(k);
    CAPTURE(nu);
    CAPTURE(x);
    CHECK(std::fabs(gegenbauer_c({double(k), nu}, x) - normalized_gegenbauer_poly(k, nu, x)) < 1e-11);
  }
}

TEST_CASE("C reduces to Legendre and Chebyshev polynomials") {
  for (int k = 0; k <= 6; ++k) {
    for (double x : {-0.9, -0.3, 0.1, 0.77}) {
      CHECK(std::fabs(gegenbauer_c({double(k), 0.5}, x) - std::legendre(k, x)) < 1e-13);
      CHECK(std::fabs(gegenbauer_c({double(k), 0.0}, x) - std::cos(k * std::acos(x))) < 1e-12);
    }
  }
}

TEST_CASE("C is one at x = 1 and the near minus one form is consistent") {
  Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const OrderPair idx{gen.uniform(0.0, 4.0), gen.uniform(-0.45, 3.0)};
    CHECK(gegenbauer_c(idx, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double t = gen.uniform(0.05, 1.95);
    CHECK(rel_diff(gegenbauer_c_near_minus_one(idx, t), gegenbauer_c(idx, -1.0 + t)) < 1e-9);
  }
}

TEST_CASE("D near one and plain forms agree, and D decays with its infinity coefficient") {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const OrderPair idx{gen.uniform(0.05, 3.0), gen.uniform(-0.4, 2.5)};
    CAPTURE(idx.mu);
    CAPTURE(idx.nu);
    const double xm1 = gen.log_uniform(0.01, 5.0);
    CHECK(rel_diff(gegenbauer_d_near_one(idx, xm1), gegenbauer_d(idx, 1.0 + xm1)) < 1e-9);
    const double big = 1e4;
    CHECK(rel_diff(gegenbauer_d(idx, big) * std::pow(big, idx.mu + 2.0 * idx.nu),
                   gegenbauer_d_infinity_coefficient(idx)) < 1e-4);
  }
}

TEST_CASE("asymptote descriptors track the functions near each endpoint") {
  const OrderPair idx{0.6, 0.8};
  CHECK(rel_diff(cd_limit(idx, Regime::x_to_1_from_below).evaluate_at_distance(1e-7),
                 gegenbauer_c(idx, 1.0 - 1e-7)) < 1e-5);
  CHECK(rel_diff(cd_limit(idx, Regime::x_to_inf).evaluate(1e6), gegenbauer_d(idx, 1e6)) < 1e-5);
  // The singular regimes converge at a sub-linear rate; check the trend.
  auto minus1 = [&](double d) {
    return rel_diff(cd_limit(idx, Regime::x_to_minus1).evaluate_at_distance(d), gegenbauer_c_near_minus_one(idx, d));
  };
  auto above1 = [&](double d) {
    return rel_diff(cd_limit(idx, Regime::x_to_1_from_above).evaluate_at_distance(d), gegenbauer_d_near_one(idx, d));
  };
  CHECK(minus1(1e-10) < 0.1 * minus1(1e-4));
  CHECK(minus1(1e-10) < 1e-3);
  CHECK(above1(1e-10) < 0.1 * above1(1e-4));
  CHECK(above1(1e-10) < 1e-2);
}

TEST_CASE("Legendre functions match references") {
  CHECK(rel_diff(legendre_p(0.5, 0.25, 0.3), 0.52277082193375031586) < 1e-12);
  CHECK(rel_diff(legendre_p(1.7, -0.6, -0.5), -0.34975322179132519866) < 1e-12);
  CHECK(rel_diff(legendre_q(0.5, 0.25, 1.3), 0.57887492195431959983) < 1e-12);
  CHECK(rel_diff(legendre_q(1.7, -0.6, 4.0), 0.0029375235319061963611) < 1e-12);
  for (int k = 0; k <= 5; ++k) CHECK(std::fabs(legendre_p(k, 0.0, 0.4) - std::legendre(k, 0.4)) < 1e-13);
}

TEST_CASE("orders outside the admissible range are rejected") {
  CHECK_THROWS_AS(validate(OrderPair{-0.1, 0.5}), DomainError);
  CHECK_THROWS_AS(validate(OrderPair{0.5, -0.5}), DomainError);
  CHECK_NOTHROW(validate(OrderPair{0.0, -0.5, true}));
  CHECK_THROWS_AS(legendre_p(0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(legendre_q(0.5, 0.0, 0.5), DomainError);
  CHECK(mu_is_integer(OrderPair{2.0 + 1e-12, 0.3}));
  CHECK_FALSE(mu_is_integer(OrderPair{2.1, 0.3}));
}
