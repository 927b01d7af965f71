#include "bsq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/parallel.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double r = 0.0;
  double value = -kInf;
  double error = 0.0;
};

// Maximum of F on [lo, hi] in the variable log r, assuming one peak inside.
template <class F>
Point golden_max(const F& eval, double lo, double hi, double tol_log) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::log(lo), b = std::log(hi);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  Point p1 = eval(std::exp(x1)), p2 = eval(std::exp(x2));
  while (b - a > tol_log) {
    if (p1.value >= p2.value) {
      b = x2;
      x2 = x1;
      p2 = p1;
      x1 = b - g * (b - a);
      p1 = eval(std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      p1 = p2;
      x2 = a + g * (b - a);
      p2 = eval(std::exp(x2));
    }
  }
  return p1.value >= p2.value ? p1 : p2;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Integral of w over (0, inf), from the closed form when known.
std::optional<double> integral_of(const RadialFunction& w, const QuadSpec& spec) {
  if (const auto v = w.integral()) return v;
  if (!w.in_space(0.0, 0.0)) return std::nullopt;
  const double A = std::min(1.0, w.support_end());
  QuadResult q;
  const double e = -w.origin_exponent();
  q = e >= 0.0 && near_integer(e, 1e-12) ? integrate_adaptive(w, 0.0, A, spec)
                                         : integrate_endpoint_singular(w, 0.0, A, SingularEnd::lower, e, spec);
  if (A < w.support_end()) {
    const double end = w.support_end();
    if (std::isfinite(end)) {
      std::vector<double> pts{A};
      for (double b : w.breakpoints()) {
        if (b > A && b < end) pts.push_back(b);
      }
      pts.push_back(end);
      q += integrate_panels(w, pts, spec);
    } else {
      const TailModel tail = w.tail_model(A);
      std::vector<OscillatoryComponent> comps;
      for (const TailTerm& t : tail.terms) {
        const Integrand amp = t.amplitude;
        const double om = t.omega, ph = t.phase;
        comps.push_back({[amp, om, ph](double r) { return amp(r) * std::cos(om * r + ph); }, om, t.decay});
      }
      if (comps.empty()) return std::nullopt;
      q += integrate_oscillatory_tail(comps, A, spec);
    }
  }
  if (!q.converged) return std::nullopt;
  return q.value;
}

class Search {
 public:
  Search(const SmoothingProblem& p, const QuadSpec& spec, bool dirac) : p_(p), spec_(spec), dirac_(dirac) {}

  ConstantResult run() {
    validate_problem();
    ConstantResult out;
    const double nu0 = 0.5 * p_.d - 1.0;
    bool probe_ok = true;
    std::vector<double> orders{nu0};
    if (dirac_) orders.push_back(nu0 + 1.0);
    for (double nu : orders) {
      const ProbeResult pr = nonneg_probe(nu, p_.w, default_probe_eps(), default_probe_rho(p_.probe_points), spec_,
                                          Route::automatic);
      note("probe nu=" + fmt(nu) + ": " + to_string(pr.classification) + " (min " + fmt(pr.min_value) + ")");
      if (pr.classification == ProbeClass::violated) probe_ok = false;
    }
    out.reduced_by_monotonicity = probe_ok && !p_.force_scan;
    const int k_last = out.reduced_by_monotonicity ? 0 : p_.k_max;
    Point best;
    int best_k = 0;
    std::vector<double> sups;
    bool aborted = false;
    for (int k = 0; k <= k_last; ++k) {
      const Point s = inner_sup(k);
      sups.push_back(s.value);
      note("k=" + std::to_string(k) + " sup=" + fmt(s.value) + " at r=" + fmt(s.r));
      if (s.value > best.value) {
        best = s;
        best_k = k;
      }
      const std::size_t n = sups.size();
      if (n >= 4) {
        bool falling = true;
        for (std::size_t i = n - 3; i < n; ++i) falling = falling && sups[i] < 0.9 * sups[i - 1];
        if (falling) {
          aborted = true;
          note("k scan stopped early at k=" + std::to_string(k) + ": three consecutive drops above 10%");
          break;
        }
      }
    }
    out.value = best.value;
    out.arg_k = best_k;
    out.arg_r = best.r;
    out.error_estimate = best.error;
    out.lower_bound_only = !out.reduced_by_monotonicity && !aborted && !p_.force_scan;
    if (out.lower_bound_only) note("k scan exhausted k_max without a decreasing trend: value is a lower bound");
    out.diagnostics = diag_;
    return out;
  }

  void validate_problem() const {
    if (p_.d < 2) throw DomainError("smoothing constant: d must be >= 2");
    if (!(p_.m >= 0.0)) throw DomainError("smoothing constant: mass must be >= 0");
    if (!dirac_ && p_.m != 0.0) throw DomainError("schrodinger_constant: mass must be 0");
    if (p_.k_max < 0) throw DomainError("smoothing constant: k_max must be >= 0");
    if (!(p_.r_lo > 0.0) || !(p_.r_hi > p_.r_lo)) throw DomainError("smoothing constant: need 0 < r_lo < r_hi");
    if (p_.grid_points < 3) throw DomainError("smoothing constant: need at least 3 grid points");
    if (!p_.w.in_space(p_.d - 1.0, 0.0)) {
      throw IntegrabilityError("smoothing constant: weight " + p_.w.name() + " is not in L1_{d-1,0}");
    }
  }

 private:
  void note(const std::string& s) {
    if (!diag_.empty()) diag_ += "; ";
    diag_ += s;
  }

  Point eval(int k, double r) const {
    const double nu = k + 0.5 * p_.d - 1.0;
    const double factor = p_.psi.sq_over_r(r);
    // Target the absolute tolerance on the objective, not on T.
    QuadSpec spec = spec_;
    spec.abs_tol = spec_.abs_tol / std::max(factor, 1e-300);
    const TransformValue v = dirac_ ? dirac_t(nu, p_.m, p_.w, r, spec, p_.route) : t_transform(nu, p_.w, r, spec, p_.route);
    if (!v.converged) {
      throw ConvergenceError("smoothing constant: transform did not converge at k=" + std::to_string(k) + ", r=" + fmt(r));
    }
    return Point{r, factor * v.value, factor * v.error_estimate};
  }

 public:
  Point inner_sup(int k) {
    const int n = p_.grid_points;
    const double l0 = std::log(p_.r_lo), l1 = std::log(p_.r_hi);
    const auto grid = parallel_map(static_cast<std::size_t>(n), [&](std::size_t i) {
      return eval(k, std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (n - 1)));
    });
    Point best;
    for (const Point& q : grid) {
      if (q.value > best.value) best = q;
    }
    double lo_v = kInf;
    for (const Point& q : grid) lo_v = std::min(lo_v, q.value);
    const bool flat = best.value - lo_v <= 1e-9 * std::fabs(best.value);
    if (!flat) {
      // Refine every interior local maximum that could compete with the grid maximum.
      std::vector<std::size_t> peaks;
      for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const bool peak = grid[i].value >= grid[i - 1].value && grid[i].value >= grid[i + 1].value;
        if (peak && grid[i].value >= best.value - 0.05 * std::fabs(best.value)) peaks.push_back(i);
      }
      const auto refined = parallel_map(peaks.size(), [&](std::size_t j) {
        const std::size_t i = peaks[j];
        return golden_max([&](double r) { return eval(k, r); }, grid[i - 1].r, grid[i + 1].r, 1e-7);
      });
      for (const Point& q : refined) {
        if (q.value > best.value) best = q;
      }
    }
    // r -> 0: values below the window, extrapolated when they converge linearly.
    std::vector<Point> small;
    for (int j = 1; j <= 4; ++j) small.push_back(eval(k, p_.r_lo * std::pow(10.0, -j)));
    for (const Point& q : small) {
      if (q.value > best.value) best = q;
    }
    const double d1 = small[1].value - small[0].value, d2 = small[2].value - small[1].value,
                 d3 = small[3].value - small[2].value;
    if (d1 != 0.0 && std::fabs(d2) <= 0.2 * std::fabs(d1) && std::fabs(d3) <= 0.2 * std::fabs(d2)) {
      const Point lim{0.0, small[3].value + d3 / 9.0, small[3].error + std::fabs(d3) / 9.0};
      if (lim.value > best.value) best = lim;
    }
    // r -> inf: T_nu w -> int w, so the objective tends to lim psi^2/r times that.
    if (const auto c = p_.psi.sq_over_r_at_infinity()) {
      if (const auto iw = integral_of(p_.w, spec_)) {
        const double lim = (dirac_ ? 2.0 : 1.0) * *c * *iw;
        if (lim > best.value) best = Point{kInf, lim, 0.0};
      }
    }
    return best;
  }

 private:
  const SmoothingProblem& p_;
  QuadSpec spec_;
  bool dirac_;
  std::string diag_;
};

double sup_i1k1() {
  const auto f = [](double r) {
    return Point{r, std::sqrt(1.0 + r * r) * bessel_i_scaled(1.0, r) * bessel_k_scaled(1.0, r), 0.0};
  };
  Point best;
  std::size_t at = 0;
  std::vector<Point> grid;
  for (int i = 0; i <= 80; ++i) grid.push_back(f(std::pow(10.0, -2.0 + 4.0 * i / 80.0)));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].value > best.value) {
      best = grid[i];
      at = i;
    }
  }
  if (at == 0 || at + 1 == grid.size()) throw ConvergenceError("sup of (1+r^2)^{1/2} I_1 K_1 not bracketed");
  return golden_max(f, grid[at - 1].r, grid[at + 1].r, 1e-10).value;
}

}  // namespace

SmoothingFunction SmoothingFunction::power_half() { return SmoothingFunction{}; }

SmoothingFunction SmoothingFunction::type_a() {
  SmoothingFunction s;
  s.kind = PsiKind::type_a;
  return s;
}

SmoothingFunction SmoothingFunction::type_b(double a) {
  if (!std::isfinite(a)) throw DomainError("type_b: a must be finite");
  SmoothingFunction s;
  s.kind = PsiKind::type_b;
  s.a = a;
  return s;
}

SmoothingFunction SmoothingFunction::from(std::function<double(double)> psi, std::optional<double> limit_sq_over_r) {
  if (!psi) throw DomainError("SmoothingFunction: empty function");
  SmoothingFunction s;
  s.kind = PsiKind::custom;
  s.custom = std::move(psi);
  s.custom_limit = limit_sq_over_r;
  return s;
}

double SmoothingFunction::operator()(double r) const {
  switch (kind) {
    case PsiKind::power_half:
      return std::sqrt(r);
    case PsiKind::type_a:
      return std::pow(1.0 + r * r, 0.25);
    case PsiKind::type_b:
      return std::pow(r, 0.5 * (2.0 - a));
    case PsiKind::custom:
      return custom(r);
  }
  return 0.0;
}

double SmoothingFunction::sq_over_r(double r) const {
  switch (kind) {
    case PsiKind::power_half:
      return 1.0;
    case PsiKind::type_a:
      return std::sqrt(1.0 + r * r) / r;
    case PsiKind::type_b:
      return std::pow(r, 1.0 - a);
    case PsiKind::custom: {
      const double v = custom(r);
      return v * v / r;
    }
  }
  return 0.0;
}

std::optional<double> SmoothingFunction::sq_over_r_at_infinity() const {
  switch (kind) {
    case PsiKind::power_half:
    case PsiKind::type_a:
      return 1.0;
    case PsiKind::type_b:
      if (a > 1.0) return 0.0;
      if (a == 1.0) return 1.0;
      return std::nullopt;
    case PsiKind::custom:
      return custom_limit;
  }
  return std::nullopt;
}

std::string SmoothingFunction::name() const {
  switch (kind) {
    case PsiKind::power_half:
      return "r^(1/2)";
    case PsiKind::type_a:
      return "(1+r^2)^(1/4)";
    case PsiKind::type_b:
      return "r^((2-" + fmt(a) + ")/2)";
    case PsiKind::custom:
      return "custom";
  }
  return "unknown";
}

ConstantResult schrodinger_constant(const SmoothingProblem& p, const QuadSpec& spec) {
  validate(spec);
  return Search(p, spec, false).run();
}

ConstantResult dirac_constant(const SmoothingProblem& p, const QuadSpec& spec) {
  validate(spec);
  return Search(p, spec, true).run();
}

ConstantResult inner_supremum(const SmoothingProblem& p, int k, bool dirac, const QuadSpec& spec) {
  validate(spec);
  if (k < 0) throw DomainError("inner_supremum: k must be >= 0");
  Search search(p, spec, dirac);
  search.validate_problem();
  const Point q = search.inner_sup(k);
  ConstantResult out;
  out.value = q.value;
  out.arg_k = k;
  out.arg_r = q.r;
  out.error_estimate = q.error;
  return out;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::C:
      return "C";
    case Family::C_general:
      return "C_general";
  }
  return "unknown";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "C_general" || s == "c_general" || s == "Cg") return Family::C_general;
  throw DomainError("unknown family '" + s + "' (expected A, B, C or C_general)");
}

double closed_form_constant(Family family, int d, double a) {
  switch (family) {
    case Family::A:
      if (d < 3) throw DomainError("family A needs d >= 3");
      if (d == 3) return kPi;
      if (d == 4) return kPi * sup_i1k1();
      return 0.5 * kPi;
    case Family::B: {
      if (d < 2 || !(a > 1.0) || !(a < d)) throw DomainError("family B needs d >= 2 and 1 < a < d");
      const double lg = ln_gamma(0.5 * (a - 1.0)) + ln_gamma(0.5 * (d - a)) - ln_gamma(0.5 * a) -
                        ln_gamma(0.5 * (d + a) - 1.0);
      return std::sqrt(kPi) * std::exp(lg) / 2.0;
    }
    case Family::C:
      if (d < 3 || !(a > 1.0)) throw DomainError("family C needs d >= 3 and a > 1");
      return std::exp(ln_gamma(0.5 * (a - 1.0)) - ln_gamma(a)) / 2.0;
    case Family::C_general:
      if (d < 3 || !(a > 1.0)) throw DomainError("family C_general needs d >= 3 and a > 1");
      return std::sqrt(kPi) * std::exp(ln_gamma(0.5 * (a - 1.0)) - ln_gamma(0.5 * a)) / 2.0;
  }
  throw DomainError("unknown family");
}

SmoothingProblem family_problem(Family family, int d, double a, double m) {
  SmoothingProblem p;
  p.d = d;
  p.m = m;
  switch (family) {
    case Family::A:
      if (d < 3) throw DomainError("family A needs d >= 3");
      p.w = RadialFunction::inverse_quadratic();
      p.psi = SmoothingFunction::type_a();
      break;
    case Family::B:
      if (d < 2 || !(a > 1.0) || !(a < d)) throw DomainError("family B needs d >= 2 and 1 < a < d");
      p.w = RadialFunction::power_law(a);
      p.psi = SmoothingFunction::type_b(a);
      break;
    case Family::C:
    case Family::C_general:
      if (d < 2 || !(a > 1.0)) throw DomainError("family C needs a > 1");
      p.w = RadialFunction::type_c(a);
      p.psi = SmoothingFunction::power_half();
      break;
  }
  return p;
}

Report dimension_comparison(const RadialFunction& w, const SmoothingFunction& psi, int d, const QuadSpec& spec,
                            std::optional<double> mass) {
  ResidualTracker t(mass ? "dimension_comparison_dirac" : "dimension_comparison");
  std::vector<ConstantResult> s;
  for (int dd = d; dd <= d + 2; ++dd) {
    SmoothingProblem p;
    p.w = w;
    p.psi = psi;
    p.d = dd;
    p.m = mass.value_or(0.0);
    s.push_back(mass ? dirac_constant(p, spec) : schrodinger_constant(p, spec));
    t.note("S_" + std::to_string(dd) + "=" + fmt(s.back().value));
  }
  if (!s[0].reduced_by_monotonicity || !s[1].reduced_by_monotonicity) t.note("hypothesis unverified");
  for (int j = 1; j <= 2; ++j) {
    const double slack = 3.0 * (s[0].error_estimate + s[static_cast<std::size_t>(j)].error_estimate) +
                         1e-12 * std::fabs(s[0].value);
    t.add(std::max(0.0, s[static_cast<std::size_t>(j)].value - s[0].value), slack,
          {{"d", static_cast<double>(d)}, {"step", static_cast<double>(j)}, {"mass", mass.value_or(0.0)}});
  }
  return t.finish();
}

}  // namespace bsq
