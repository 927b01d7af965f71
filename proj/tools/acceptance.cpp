// Acceptance checks. Prints one PASS/FAIL line per criterion; exits 1 if any
// requested criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsq/constants.hpp"
#include "bsq/verify.hpp"

namespace {

using namespace bsq;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [fail]");
  }
};

std::string g(double x, int digits = 10) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One Schroedinger constant against a target, with its runtime.
ConstantResult family_constant(Family f, int d, double a, double& secs) {
  const auto t0 = std::chrono::steady_clock::now();
  const ConstantResult r = schrodinger_constant(family_problem(f, d, a));
  secs = seconds_since(t0);
  return r;
}

Outcome criterion1() {
  Outcome o;
  struct Case {
    int d;
    double target, tol;
    const char* label;
  };
  const Case cases[] = {{3, kPi, 1e-3, "pi"},
                        {5, 0.5 * kPi, 1e-3, "pi/2"},
                        {7, 0.5 * kPi, 1e-3, "pi/2"},
                        {4, kPi * 0.50239, 5e-4, "pi*0.50239"}};
  for (const Case& c : cases) {
    double secs = 0.0;
    const ConstantResult r = family_constant(Family::A, c.d, 0.0, secs);
    const double rel = std::fabs(r.value - c.target) / c.target;
    o.require(rel <= c.tol && secs <= 10.0, "A d=" + std::to_string(c.d) + ": " + g(r.value) + " vs " + c.label +
                                                " rel=" + g(rel, 3) + " (" + g(secs, 3) + " s)");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  double total = 0.0;
  for (auto [d, a] : {std::pair{3, 2.0}, std::pair{4, 2.5}, std::pair{5, 1.5}}) {
    double secs = 0.0;
    const ConstantResult r = family_constant(Family::B, d, a, secs);
    total += secs;
    const double cf = closed_form_constant(Family::B, d, a);
    const double rel = std::fabs(r.value - cf) / cf;
    o.require(rel <= 1e-3, "B (d,a)=(" + std::to_string(d) + "," + g(a, 3) + "): " + g(r.value) + " vs " + g(cf) +
                               " rel=" + g(rel, 3));
  }
  o.require(total <= 30.0, "runtime " + g(total, 3) + " s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto [d, a] : {std::pair{3, 1.5}, std::pair{4, 3.0}}) {
    double secs = 0.0;
    const ConstantResult r = family_constant(Family::C, d, a, secs);
    const double cf = closed_form_constant(Family::C, d, a);
    const double integral = closed_form_constant(Family::C_general, d, a);
    const double rel = std::fabs(r.value - cf) / cf;
    o.require(rel <= 1e-3, "C (d,a)=(" + std::to_string(d) + "," + g(a, 3) + "): " + g(r.value) +
                               " vs Gamma((a-1)/2)/(2 Gamma(a)) = " + g(cf) + " rel=" + g(rel, 3) +
                               " (int w = " + g(integral) + ")");
  }
  SmoothingProblem p;
  p.w = RadialFunction::gaussian();
  p.psi = SmoothingFunction::power_half();
  p.d = 3;
  const ConstantResult r = schrodinger_constant(p);
  const double target = std::sqrt(0.5 * kPi);
  const double rel = std::fabs(r.value - target) / target;
  o.require(rel <= 1e-3, "Gaussian d=3: " + g(r.value) + " vs sqrt(pi/2) rel=" + g(rel, 3));
  return o;
}

Outcome from_report(const Report& r, double secs, double limit = 0.0) {
  Outcome o;
  o.require(r.passed, r.check_name + " residual=" + g(r.max_residual, 3) + " tol=" + g(r.tolerance_used, 3) +
                          (r.normalized ? " (normalized)" : "") + " cases=" + std::to_string(r.cases));
  if (limit > 0.0) o.require(secs <= limit, "runtime " + g(secs, 3) + " s");
  return o;
}

template <class F>
Outcome timed_report(F f, double limit = 0.0) {
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = f();
  return from_report(r, seconds_since(t0), limit);
}

Outcome criterion4() {
  return timed_report([] { return check_identity_I(60, 7); }, 60.0);
}

Outcome criterion5() {
  return timed_report([] { return check_closed_forms(20, 7); });
}

Outcome criterion6() {
  return timed_report([] { return check_piecewise_example(); });
}

Outcome criterion7() {
  const Report r = check_half_order();
  Outcome o = from_report(r.children.at(0), 0.0);
  o.detail += "; companion checks " + std::string(r.passed ? "pass" : "fail") + " (kernel form, comparison)";
  return o;
}

Outcome criterion8() {
  return timed_report([] { return run_suite("derivative", 7); });
}

Outcome criterion9() {
  Outcome o;
  auto add = [&o](const std::string& label, const Report& r) {
    o.require(r.passed, label + " residual=" + g(r.max_residual, 3) + " tol=" + g(r.tolerance_used, 3));
  };
  add("A d=3", dimension_comparison(RadialFunction::inverse_quadratic(), SmoothingFunction::type_a(), 3));
  add("B d=3 a=2", dimension_comparison(RadialFunction::power_law(2.0), SmoothingFunction::type_b(2.0), 3));
  add("C d=3 a=1.5", dimension_comparison(RadialFunction::type_c(1.5), SmoothingFunction::power_half(), 3));
  for (double m : {0.0, 1.0}) {
    add("Dirac A d=3 m=" + g(m, 2),
        dimension_comparison(RadialFunction::inverse_quadratic(), SmoothingFunction::type_a(), 3, {}, m));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (std::uint64_t seed : {1u, 7u, 42u}) {
    const Report r = run_suite("properties", seed);
    std::string failed;
    for (const Report& c : r.children) {
      if (!c.passed) failed += " " + c.check_name;
    }
    o.require(r.passed, "seed " + std::to_string(seed) + ": " + std::to_string(r.children.size()) + " suites" +
                            (failed.empty() ? "" : ", failing:" + failed));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria", "acceptance"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10); 0 runs all")->check(CLI::Range(0, 10));
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::function<Outcome()>> all = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9, criterion10};
  bool ok = true;
  for (int i = 1; i <= 10; ++i) {
    if (only != 0 && only != i) continue;
    Outcome o;
    try {
      o = all[static_cast<std::size_t>(i - 1)]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    ok = ok && o.pass;
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return ok ? 0 : 1;
}
