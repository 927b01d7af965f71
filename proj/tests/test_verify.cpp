#include <cmath>
#include <string>

#include "bsq/errors.hpp"
#include "bsq/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsq;
using bsq::test::rel_diff;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

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

TEST_CASE("every named suite passes at the default seed") {
  for (const std::string& name : suite_names()) {
    if (name == "all" || name == "properties") continue;
    CAPTURE(name);
    const Report r = run_suite(name, 7);
    INFO(to_text(r));
    CHECK(r.passed);
  }
}

TEST_CASE("suites are deterministic for a fixed seed and vary with it") {
  const std::string a = to_json(check_identity_I(12, 5));
  CHECK(a == to_json(check_identity_I(12, 5)));
  CHECK(a != to_json(check_identity_I(12, 6)));
}

TEST_CASE("the identity report records its worst case") {
  const Report r = check_identity_I(10, 3);
  REQUIRE(r.passed);
  REQUIRE_FALSE(r.witness.empty());
  CHECK(r.cases == 10);
}

TEST_CASE("three-Bessel integral agrees with its closed form in both regimes") {
  // inner (|b - c| < a < b + c) and outer (a > b + c)
  for (auto [a, b, c] : {std::tuple{1.0, 1.0, 1.5}, std::tuple{3.0, 1.0, 1.0}}) {
    const QuadResult q = triple_bessel_integral(a, b, c, 0.5, 0.75);
    CHECK(q.converged);
    const double cf = macdonald_closed_form(a, b, c, 0.5, 0.75);
    CHECK(std::fabs(q.value - cf) < 1e-7 * std::fmax(1.0, std::fabs(cf)));
  }
  // Integer mu vanishes outside the triangle.
  CHECK(macdonald_closed_form(3.0, 1.0, 1.0, 1.0, 0.5) == 0.0);
  CHECK(check_macdonald(3.0, 1.0, 1.0, 0.5, 0.75).passed);
}

TEST_CASE("degenerate triangles are rejected") {
  CHECK_THROWS_AS(check_macdonald(2.0, 1.0, 1.0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(check_macdonald(0.0, 1.0, 1.0, 0.5, 0.5), DomainError);
}

TEST_CASE("property checks refuse profiles whose Hankel image changes sign") {
  CHECK_THROWS_AS(check_monotonicity(MonotonicityClause::III, sign_changing_profile(), 4), DomainError);
}

TEST_CASE("monotonicity and comparison hold for Gaussian-mixture profiles") {
  for (const RadialFunction& f : {RadialFunction::gaussian(), RadialFunction::inverse_quadratic()}) {
    CHECK(check_monotonicity(MonotonicityClause::II, f, 8, 11).passed);
    CHECK(check_monotonicity(MonotonicityClause::III, f, 8, 11).passed);
    CHECK(check_comparison(ComparisonClause::IV, f, 8, 11).passed);
    CHECK(check_comparison(ComparisonClause::V, f, 8, 11).passed);
  }
}

TEST_CASE("large-s limit approaches the integral") {
  CHECK(check_large_s_limit(RadialFunction::gaussian(), {0.0, 1.0, 2.5}).passed);
}

TEST_CASE("report aggregation fails when any child fails") {
  ResidualTracker t("parent");
  t.add(1e-12, 1e-6, {{"x", 1.0}});
  Report bad;
  bad.check_name = "child";
  bad.passed = false;
  t.add_child(bad);
  CHECK_FALSE(t.finish().passed);
  ResidualTracker ok("parent");
  ok.add(1e-12, 1e-6, {});
  CHECK(ok.finish().passed);
  CHECK_FALSE(combine("c", {ok.finish(), bad}).passed);
  const std::string text = to_text(ok.finish());
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS(run_suite("nope", 1));
}
