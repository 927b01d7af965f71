#include "bsq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value, error, l1;
  int depth;
};

struct PanelLess {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonFiniteIntegrand("integrand is not finite at x = " + std::to_string(x));
  }
  return v;
}

Panel gk15(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = checked(f, center - dx);
    fv2[j] = checked(f, center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  const double alen = std::fabs(half);
  resasc *= alen;
  resabs *= alen;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return Panel{a, b, resk * half, err, resabs, depth};
}

QuadResult run_global(const Integrand& f, const std::vector<std::pair<double, double>>& seeds, const QuadSpec& spec) {
  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  std::vector<Panel> frozen;
  QuadResult out;
  double value = 0.0, error = 0.0, l1 = 0.0;
  for (const auto& [a, b] : seeds) {
    if (!(b > a)) continue;
    Panel p = gk15(f, a, b, 0);
    out.evaluations += 15;
    value += p.value;
    error += p.error;
    l1 += p.l1;
    heap.push(p);
  }
  int splits = 0;
  while (!heap.empty() && error > spec.tolerance_for(value) && splits < spec.max_subdivisions) {
    Panel worst = heap.top();
    heap.pop();
    if (worst.depth >= spec.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid, worst.depth + 1);
    Panel right = gk15(f, mid, worst.b, worst.depth + 1);
    out.evaluations += 30;
    ++splits;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }
  // Recompute the totals in a fixed order to limit drift from the running sums.
  std::vector<Panel> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  value = error = l1 = 0.0;
  for (const Panel& p : all) {
    value += p.value;
    error += p.error;
    l1 += p.l1;
  }
  out.value = value;
  out.error_estimate = error;
  out.l1 = l1;
  out.converged = error <= spec.tolerance_for(value);
  return out;
}

// Wynn epsilon extrapolation of the partial sums; returns the highest
// even-column entry that could be formed from the most recent sums.
double wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t m = std::min<std::size_t>(sums.size(), 40);
  std::vector<double> prev(m + 1, 0.0);
  std::vector<double> cur(sums.end() - static_cast<long>(m), sums.end());
  double best = cur.back();
  for (std::size_t k = 1; k < m; ++k) {
    std::vector<double> next(m - k);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) {
        ok = false;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
      if (!std::isfinite(next[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

QuadResult non_oscillatory_tail(const OscillatoryComponent& c, double A, const QuadSpec& spec) {
  if (!(c.decay > 1.0)) {
    throw IntegrabilityError("tail component decays too slowly to be integrable (decay exponent <= 1)");
  }
  const double p = std::isinf(c.decay) ? 1.0 : std::clamp(2.0 / (c.decay - 1.0), 0.25, 8.0);
  const Integrand g = [&](double t) {
    const double r = A * std::pow(t, -p);
    if (std::isinf(r)) return 0.0;
    const double v = c.h(r);
    if (v == 0.0) return 0.0;
    return v * A * p * std::pow(t, -p - 1.0);
  };
  return integrate_adaptive(g, 0.0, 1.0, spec);
}

QuadResult oscillatory_tail(const OscillatoryComponent& c, double A, const QuadSpec& spec) {
  const double L = std::numbers::pi / c.frequency;
  QuadSpec panel_spec = spec;
  panel_spec.abs_tol = 0.01 * spec.abs_tol;
  QuadResult out;
  std::vector<double> sums;
  std::vector<double> estimates;
  double running = 0.0;
  double panel_error = 0.0;
  double l1 = 0.0;
  int small_panels = 0;
  const double tol = spec.abs_tol;
  for (int n = 0; n < spec.max_tail_panels; ++n) {
    const double a = A + n * L;
    const QuadResult piece = integrate_adaptive(c.h, a, a + L, panel_spec);
    out.evaluations += piece.evaluations;
    running += piece.value;
    panel_error += piece.error_estimate;
    l1 += piece.l1;
    sums.push_back(running);
    if (std::fabs(piece.value) <= 1e-3 * tol && piece.l1 <= 1e-3 * tol) {
      ++small_panels;
    } else {
      small_panels = 0;
    }
    if (small_panels >= 3 && std::isinf(c.decay)) {
      out.value = running;
      out.error_estimate = panel_error + 3e-3 * tol;
      out.l1 = l1;
      out.converged = true;
      return out;
    }
    estimates.push_back(wynn_epsilon(sums));
    const std::size_t k = estimates.size();
    if (k >= 6) {
      const double e = estimates[k - 1];
      const double err = std::fabs(e - estimates[k - 2]) + std::fabs(e - estimates[k - 3]);
      const double floor = 50.0 * kEps * l1;
      if (err <= std::max(0.5 * tol, floor)) {
        out.value = e;
        out.error_estimate = err + panel_error;
        out.l1 = l1;
        out.converged = out.error_estimate <= std::max(tol, 2.0 * floor);
        return out;
      }
    }
  }
  const std::size_t k = estimates.size();
  out.value = estimates.back();
  out.error_estimate = (k >= 3 ? std::fabs(estimates[k - 1] - estimates[k - 2]) + std::fabs(estimates[k - 1] - estimates[k - 3])
                               : std::fabs(running)) +
                       panel_error;
  out.l1 = l1;
  out.converged = false;
  return out;
}

}  // namespace

double QuadSpec::tolerance_for(double value) const { return std::max(abs_tol, rel_tol * std::fabs(value)); }

void validate(const QuadSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) throw DomainError("QuadSpec: tolerances must be positive");
  if (spec.max_depth < 0 || spec.max_depth > 60) throw DomainError("QuadSpec: max_depth must lie in [0, 60]");
  if (!(spec.tail_cutoff_multiplier > 0.0)) throw DomainError("QuadSpec: tail_cutoff_multiplier must be positive");
  if (spec.max_subdivisions < 1 || spec.max_tail_panels < 1) throw DomainError("QuadSpec: iteration caps must be positive");
}

QuadResult& QuadResult::operator+=(const QuadResult& other) {
  value += other.value;
  error_estimate += other.error_estimate;
  evaluations += other.evaluations;
  converged = converged && other.converged;
  l1 += other.l1;
  return *this;
}

QuadResult operator+(QuadResult a, const QuadResult& b) { return a += b; }

void require_converged(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (error estimate " +
                           std::to_string(r.error_estimate) + ")");
  }
}

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadSpec& spec) {
  validate(spec);
  if (!(a < b)) {
    if (a == b) return QuadResult{};
    throw DomainError("integrate_adaptive: need a < b");
  }
  return run_global(f, {{a, b}}, spec);
}

QuadResult integrate_panels(const Integrand& f, const std::vector<double>& points, const QuadSpec& spec) {
  validate(spec);
  std::vector<std::pair<double, double>> seeds;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] < points[i]) throw DomainError("integrate_panels: breakpoints must be increasing");
    if (points[i + 1] > points[i]) seeds.emplace_back(points[i], points[i + 1]);
  }
  if (seeds.empty()) return QuadResult{};
  return run_global(f, seeds, spec);
}

QuadResult integrate_endpoint_singular(const Integrand& f, double a, double b, SingularEnd end, double exponent,
                                       const QuadSpec& spec) {
  validate(spec);
  if (!(exponent > -1.0)) throw DomainError("integrate_endpoint_singular: exponent must be > -1");
  if (!(a < b)) {
    if (a == b) return QuadResult{};
    throw DomainError("integrate_endpoint_singular: need a < b");
  }
  // x - end = L t^p turns |x - end|^exponent dx into a bounded multiple of t^{p(1+exponent)-1}.
  const double p = exponent < 0.0 ? 2.0 / (1.0 + exponent) : 2.0;
  auto mapped = [&](double lo, double hi, bool at_lower, const QuadSpec& sub) {
    const double L = hi - lo;
    const Integrand g = [&, L, lo, hi, at_lower](double t) {
      const double tp = std::pow(t, p);
      const double x = at_lower ? lo + L * tp : hi - L * tp;
      // The mapped integrand vanishes like t at the singular end.
      if (x == (at_lower ? lo : hi)) return 0.0;
      return f(x) * L * p * tp / t;
    };
    return integrate_adaptive(g, 0.0, 1.0, sub);
  };
  switch (end) {
    case SingularEnd::lower:
      return mapped(a, b, true, spec);
    case SingularEnd::upper:
      return mapped(a, b, false, spec);
    case SingularEnd::both: {
      const double mid = 0.5 * (a + b);
      QuadSpec half = spec;
      half.abs_tol = 0.5 * spec.abs_tol;
      return mapped(a, mid, true, half) + mapped(mid, b, false, half);
    }
  }
  return QuadResult{};
}

QuadResult integrate_oscillatory_tail(const std::vector<OscillatoryComponent>& components, double A,
                                      const QuadSpec& spec) {
  validate(spec);
  if (!(A > 0.0)) throw DomainError("integrate_oscillatory_tail: A must be positive");
  QuadResult total;
  if (components.empty()) return total;
  QuadSpec share = spec;
  share.abs_tol = spec.abs_tol / static_cast<double>(components.size());
  for (const OscillatoryComponent& c : components) {
    if (c.frequency > 1e-12) {
      total += oscillatory_tail(c, A, share);
    } else {
      total += non_oscillatory_tail(c, A, share);
    }
  }
  return total;
}

}  // namespace bsq
