#include <algorithm>
#include <cmath>
#include <limits>

#include "bsq/errors.hpp"
#include "bsq/parallel.hpp"
#include "bsq/transforms.hpp"

namespace bsq {

const char* to_string(ProbeClass c) {
  switch (c) {
    case ProbeClass::strictly_positive_on_grid:
      return "strictly-positive-on-grid";
    case ProbeClass::nonnegative_on_grid:
      return "nonnegative-on-grid";
    case ProbeClass::violated:
      return "violated";
  }
  return "unknown";
}

std::vector<double> default_probe_eps() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

std::vector<double> default_probe_rho(int points) {
  if (points < 2) throw DomainError("default_probe_rho: need at least two points");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, -2.0 + 4.0 * i / (points - 1));
  return out;
}

ProbeResult nonneg_probe(double nu, const RadialFunction& f, const std::vector<double>& eps_grid,
                         const std::vector<double>& rho_grid, const QuadSpec& spec, Route route) {
  if (eps_grid.empty() || rho_grid.empty()) throw DomainError("nonneg_probe: grids must be non-empty");
  for (std::size_t i = 1; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] < eps_grid[i - 1])) throw DomainError("nonneg_probe: eps grid must be decreasing");
  }
  const std::size_t ne = eps_grid.size(), nr = rho_grid.size();
  const auto values = parallel_map(ne * nr, [&](std::size_t k) {
    return hankel_regularized(nu, f, eps_grid[k / nr], rho_grid[k % nr], spec, route);
  });
  double scale = 0.0;
  for (const TransformValue& v : values) {
    if (std::isfinite(v.value)) scale = std::max(scale, std::fabs(v.value));
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  ResidualTracker tracker("nonneg_probe");
  ProbeResult out;
  out.min_value = std::numeric_limits<double>::infinity();
  bool strict = true;
  bool converged = true;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const TransformValue& v = values[k];
    const double eps = eps_grid[k / nr], rho = rho_grid[k % nr];
    converged = converged && v.converged;
    // Values within this band of zero are indistinguishable from zero.
    const double band = 3.0 * v.error_estimate + 64.0 * kEps * scale + std::numeric_limits<double>::min();
    tracker.add(std::max(0.0, -v.value), band, {{"nu", nu}, {"eps", eps}, {"rho", rho}, {"value", v.value}});
    if (!(v.value > band)) strict = false;
    if (v.value < out.min_value || !std::isfinite(v.value)) {
      out.min_value = v.value;
      out.rho_at_min = rho;
      out.eps_at_min = eps;
    }
  }
  out.report = tracker.finish();
  if (!converged) {
    out.report.passed = false;
    out.report.detail = "quadrature did not converge at some grid point";
  }
  if (!out.report.passed) {
    out.classification = ProbeClass::violated;
  } else {
    out.classification = strict ? ProbeClass::strictly_positive_on_grid : ProbeClass::nonnegative_on_grid;
  }
  if (!out.report.detail.empty()) out.report.detail += "; ";
  out.report.detail += std::string(to_string(out.classification)) + " for " + f.name();
  return out;
}

}  // namespace bsq
