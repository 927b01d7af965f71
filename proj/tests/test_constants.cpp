#include <cmath>
#include <numbers>

#include "bsq/constants.hpp"
#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsq;
using bsq::test::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("family A constants in dimensions 3 to 7") {
  CHECK(rel_diff(schrodinger_constant(family_problem(Family::A, 3)).value, kPi) < 1e-9);
  for (int d : {5, 6, 7}) {
    CAPTURE(d);
    CHECK(rel_diff(schrodinger_constant(family_problem(Family::A, d)).value, 0.5 * kPi) < 1e-9);
  }
  const ConstantResult d4 = schrodinger_constant(family_problem(Family::A, 4));
  CHECK(rel_diff(d4.value, closed_form_constant(Family::A, 4)) < 1e-9);
  CHECK(std::fabs(d4.value / kPi - 0.50239) < 5e-5);
}

TEST_CASE("family A in dimension 4 is the supremum of the I_1 K_1 profile") {
  // Independent maximisation of pi (1+r^2)^{1/2} I_1(r) K_1(r) by golden-section search.
  auto g = [](double r) { return kPi * std::sqrt(1.0 + r * r) * bessel_i_scaled(1.0, r) * bessel_k_scaled(1.0, r); };
  double a = 1.0, b = 10.0;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 200; ++i) {
    const double c = b - phi * (b - a), d = a + phi * (b - a);
    if (g(c) > g(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  CHECK(rel_diff(closed_form_constant(Family::A, 4), g(0.5 * (a + b))) < 1e-12);
}

TEST_CASE("family B matches its closed form on a grid") {
  for (int d : {3, 4, 5, 6}) {
    for (double a : {1.3, 2.0, 2.7}) {
      if (a >= d) continue;
      CAPTURE(d);
      CAPTURE(a);
      CHECK(rel_diff(schrodinger_constant(family_problem(Family::B, d, a)).value,
                     closed_form_constant(Family::B, d, a)) < 1e-8);
    }
  }
}

TEST_CASE("family C equals the integral of its weight") {
  for (int d : {3, 4}) {
    for (double a : {1.5, 3.0}) {
      CAPTURE(d);
      CAPTURE(a);
      CHECK(rel_diff(schrodinger_constant(family_problem(Family::C, d, a)).value,
                     closed_form_constant(Family::C_general, d, a)) < 1e-8);
    }
  }
  // int (1 + r^2)^{-3/2} dr = 1
  CHECK(closed_form_constant(Family::C_general, 3, 3.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Gaussian weight with r^{1/2} gives sqrt(pi/2) in dimension 3") {
  SmoothingProblem p;
  p.w = RadialFunction::gaussian();
  p.psi = SmoothingFunction::power_half();
  p.d = 3;
  CHECK(rel_diff(schrodinger_constant(p).value, std::sqrt(0.5 * kPi)) < 1e-9);
}

TEST_CASE("constants do not increase with the dimension") {
  CHECK(dimension_comparison(RadialFunction::inverse_quadratic(), SmoothingFunction::type_a(), 3).passed);
  CHECK(dimension_comparison(RadialFunction::power_law(2.0), SmoothingFunction::type_b(2.0), 3).passed);
  CHECK(dimension_comparison(RadialFunction::inverse_quadratic(), SmoothingFunction::type_a(), 3, {}, 1.0).passed);
}

TEST_CASE("Dirac constant at zero mass dominates the Schroedinger constant") {
  const SmoothingProblem p = family_problem(Family::A, 3);
  CHECK(dirac_constant(p).value >= schrodinger_constant(p).value - 1e-12);
}

TEST_CASE("the inner supremum at k = 0 attains the constant for family A") {
  const SmoothingProblem p = family_problem(Family::A, 4);
  CHECK(rel_diff(inner_supremum(p, 0).value, schrodinger_constant(p).value) < 1e-12);
  CHECK(inner_supremum(p, 3).value <= inner_supremum(p, 0).value);
}

TEST_CASE("family names round trip and bad inputs are rejected") {
  for (Family f : {Family::A, Family::B, Family::C, Family::C_general}) CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS(parse_family("Z"));
  CHECK_THROWS_AS(family_problem(Family::A, 2), DomainError);
  CHECK_THROWS_AS(family_problem(Family::B, 3, 3.5), DomainError);
}
