#include "bsq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bsq/constants.hpp"
#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"
#include "bsq/transforms.hpp"
#include "bsq/verify.hpp"
#include "json.hpp"

namespace bsq {

namespace {

using Cell = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Config {
  std::optional<double> nu, mu, s, r, rho, eps, a, mass;
  std::string weight = "gaussian";
  int d = 3;
  int k_max = 12;
  std::optional<double> abs_tol, rel_tol;
  std::string format = "plain";
  std::string out_path;
  std::uint64_t seed = 7;
  std::string family;
  std::string suite = "all";
  std::string over;
  std::string quantity = "T";
  std::string route = "auto";
  std::optional<double> from, to;
  int points = 50;
  bool log_spacing = false;
  bool dirac = false;
  bool force_scan = false;
};

std::string number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string cell_text(const Cell& c, int digits) {
  if (c.is_null()) return "";
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  if (c.is_number()) return number(c.get<double>(), digits);
  return c.get<std::string>();
}

std::string csv_field(const Cell& c) {
  std::string t = cell_text(c, 17);
  if (t.find_first_of(",\"\n") == std::string::npos) return t;
  std::string q = "\"";
  for (char ch : t) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

// Doubles that JSON cannot carry (inf, nan) become strings.
Cell json_cell(const Cell& c) {
  if (c.is_number_float() && !std::isfinite(c.get<double>())) return number(c.get<double>(), 17);
  return c;
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return;
  }
  if (format == "json") {
    Cell arr = Cell::array();
    for (const auto& row : t.rows) {
      Cell obj = Cell::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
      arr.push_back(obj);
    }
    out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
    return;
  }
  if (t.rows.size() == 1) {
    std::size_t w = 0;
    for (const auto& c : t.columns) w = std::max(w, c.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out << t.columns[i] << std::string(w - t.columns[i].size(), ' ') << "  " << cell_text(t.rows[0][i], 15) << '\n';
    }
    return;
  }
  std::vector<std::size_t> w(t.columns.size());
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i], 15));
      w[i] = std::max(w[i], line.back().size());
    }
    text.push_back(std::move(line));
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i ? "  " : "") << line[i] << std::string(w[i] - line[i].size(), ' ');
    }
    out << '\n';
  };
  print(t.columns);
  for (const auto& line : text) print(line);
}

QuadSpec make_spec(const Config& c) {
  QuadSpec s;
  if (c.abs_tol) s.abs_tol = *c.abs_tol;
  if (c.rel_tol) s.rel_tol = *c.rel_tol;
  validate(s);
  return s;
}

Route parse_route(const std::string& r) {
  if (r == "auto") return Route::automatic;
  if (r == "direct") return Route::direct_quadrature;
  if (r == "closed") return Route::closed_form;
  if (r == "kernel") return Route::kernel_route;
  throw DomainError("unknown route '" + r + "' (expected auto, direct, closed or kernel)");
}

RadialFunction parse_weight(const Config& c) {
  const std::string& w = c.weight;
  auto need_a = [&]() {
    if (!c.a) throw DomainError("--weight " + w + " needs --a");
    return *c.a;
  };
  if (w == "gaussian") return RadialFunction::gaussian(c.a.value_or(1.0));
  if (w == "invquad") return RadialFunction::inverse_quadratic();
  if (w == "typeC") return RadialFunction::type_c(need_a());
  if (w == "power") return RadialFunction::power_law(need_a());
  if (w == "coscusp") return RadialFunction::coscusp();
  if (w.rfind("table:", 0) == 0) return RadialFunction::from_file(w.substr(6));
  throw DomainError("unknown weight '" + w + "' (expected gaussian, invquad, typeC, power, coscusp or table:<path>)");
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required flag ") + flag);
  return *v;
}

Table transform_row(const char* arg_name, double nu, double arg, const TransformValue& v, const std::string& weight) {
  return {{"nu", arg_name, "value", "error_estimate", "method", "converged", "evaluations", "weight"},
          {{nu, arg, v.value, v.error_estimate, to_string(v.method), v.converged, v.evaluations, weight}}};
}

Table cmd_eval(const Config& c) {
  const QuadSpec spec = make_spec(c);
  const RadialFunction f = parse_weight(c);
  const double nu = need(c.nu, "--nu"), s = need(c.s, "--s");
  if (c.mass) {
    const TransformValue v = dirac_t(nu, *c.mass, f, s, spec, parse_route(c.route));
    Table t = transform_row("s", nu, s, v, f.name());
    t.columns.push_back("mass");
    t.rows[0].push_back(*c.mass);
    return t;
  }
  return transform_row("s", nu, s, t_transform(nu, f, s, spec, parse_route(c.route)), f.name());
}

Table cmd_hankel(const Config& c) {
  const QuadSpec spec = make_spec(c);
  const RadialFunction f = parse_weight(c);
  const double nu = need(c.nu, "--nu");
  const double rho = c.rho ? *c.rho : need(c.s, "--rho");
  if (c.eps) {
    Table t = transform_row("rho", nu, rho, hankel_regularized(nu, f, *c.eps, rho, spec, parse_route(c.route)), f.name());
    t.columns.push_back("eps");
    t.rows[0].push_back(*c.eps);
    return t;
  }
  return transform_row("rho", nu, rho, hankel(nu, f, rho, spec, parse_route(c.route)), f.name());
}

Table cmd_kernel(const Config& c) {
  const double mu = c.mu.value_or(0.0), nu = need(c.nu, "--nu"), s = need(c.s, "--s");
  if (c.r) {
    return {{"mu", "nu", "r", "s", "kernel"}, {{mu, nu, *c.r, s, kernel_k({mu, nu}, *c.r, s)}}};
  }
  const RadialFunction g = parse_weight(c);
  if (nu == -0.5) {
    if (mu != 0.0 && mu != 1.0) throw DomainError("the nu = -1/2 operator needs mu = 0 or 1");
    const double v = u_half(static_cast<int>(mu), [&g](double x) { return g(x); }, s);
    return {{"mu", "nu", "s", "value", "weight"}, {{mu, nu, s, v, g.name()}}};
  }
  const TransformValue v = u_transform({mu, nu}, g, s, make_spec(c));
  return {{"mu", "nu", "s", "value", "error_estimate", "converged", "weight"},
          {{mu, nu, s, v.value, v.error_estimate, v.converged, g.name()}}};
}

Table cmd_constant(const Config& c) {
  if (c.family.empty()) throw DomainError("missing required flag --family");
  const Family fam = parse_family(c.family);
  const double a = c.a.value_or(0.0);
  const bool dirac = c.dirac || c.mass.has_value();
  SmoothingProblem p = family_problem(fam, c.d, a, c.mass.value_or(0.0));
  p.k_max = c.k_max;
  p.force_scan = c.force_scan;
  const QuadSpec spec = make_spec(c);
  const ConstantResult r = dirac ? dirac_constant(p, spec) : schrodinger_constant(p, spec);
  Cell closed = nullptr, rel = nullptr;
  if (!dirac) {
    const double cf = closed_form_constant(fam, c.d, a);
    closed = cf;
    rel = std::fabs(r.value - cf) / std::fabs(cf);
  }
  return {{"family", "d", "a", "mass", "value", "closed_form", "rel_error", "arg_k", "arg_r", "reduced_by_monotonicity",
           "lower_bound_only", "error_estimate", "diagnostics"},
          {{to_string(fam), c.d, a, c.mass.value_or(0.0), r.value, closed, rel, r.arg_k, r.arg_r,
            r.reduced_by_monotonicity, r.lower_bound_only, r.error_estimate, r.diagnostics}}};
}

std::vector<double> sweep_points(const Config& c) {
  const double from = need(c.from, "--from"), to = need(c.to, "--to");
  if (c.points < 1) throw DomainError("empty range: --points must be >= 1");
  if (!(from <= to)) throw DomainError("empty range: need --from <= --to");
  if (c.log_spacing && !(from > 0.0)) throw DomainError("--log needs --from > 0");
  std::vector<double> x;
  for (int i = 0; i < c.points; ++i) {
    const double t = c.points == 1 ? 0.0 : static_cast<double>(i) / (c.points - 1);
    x.push_back(c.log_spacing ? from * std::pow(to / from, t) : from + (to - from) * t);
  }
  return x;
}

Table cmd_sweep(const Config& c) {
  if (c.over == "k") {
    if (c.family.empty()) throw DomainError("a k sweep needs --family");
    const Family fam = parse_family(c.family);
    const int k0 = static_cast<int>(c.from.value_or(0.0)), k1 = static_cast<int>(c.to.value_or(c.k_max));
    if (k0 < 0 || k1 < k0) throw DomainError("empty range: need 0 <= --from <= --to");
    const bool dirac = c.dirac || c.mass.has_value();
    const SmoothingProblem p = family_problem(fam, c.d, c.a.value_or(0.0), c.mass.value_or(0.0));
    const QuadSpec spec = make_spec(c);
    Table t{{"k", "nu", "sup", "arg_r", "error_estimate"}, {}};
    for (int k = k0; k <= k1; ++k) {
      const ConstantResult r = inner_supremum(p, k, dirac, spec);
      t.rows.push_back({k, k + 0.5 * c.d - 1.0, r.value, r.arg_r, r.error_estimate});
    }
    return t;
  }
  if (c.over != "s" && c.over != "nu") throw DomainError("--over must be s, nu or k");
  const bool over_s = c.over == "s";
  const std::vector<double> xs = sweep_points(c);
  const QuadSpec spec = make_spec(c);
  const Route route = parse_route(c.route);
  const std::string& q = c.quantity;
  if (q != "T" && q != "H" && q != "I" && q != "J" && q != "K") {
    throw DomainError("unknown --quantity '" + q + "' (expected T, H, I, J or K)");
  }
  const bool transform = q == "T" || q == "H";
  std::optional<RadialFunction> f;
  if (transform) f = parse_weight(c);
  Table t{{over_s ? "s" : "nu", "value", "error_estimate"}, {}};
  for (double x : xs) {
    const double nu = over_s ? need(c.nu, "--nu") : x;
    const double s = over_s ? x : need(c.s, "--s");
    if (q == "T" || q == "H") {
      const TransformValue v = q == "T" ? t_transform(nu, *f, s, spec, route) : hankel(nu, *f, s, spec, route);
      t.rows.push_back({x, v.value, v.error_estimate});
    } else {
      const double v = q == "I" ? bessel_i(nu, s) : q == "J" ? bessel_j(nu, s) : bessel_k(nu, s);
      t.rows.push_back({x, v, 0.0});
    }
  }
  return t;
}

void flatten(const Report& r, int depth, Table& t) {
  std::string witness;
  for (const auto& [k, v] : r.witness) witness += (witness.empty() ? "" : " ") + k + "=" + number(v, 17);
  t.rows.push_back({r.check_name, depth, r.passed, r.max_residual, r.tolerance_used, r.normalized, r.cases, witness,
                    r.detail});
  for (const Report& c : r.children) flatten(c, depth + 1, t);
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Report r = run_suite(c.suite, c.seed, make_spec(c));
  if (c.format == "json") {
    out << to_json(r) << '\n';
  } else if (c.format == "csv") {
    Table t{{"check", "depth", "passed", "residual", "tolerance", "normalized", "cases", "witness", "detail"}, {}};
    flatten(r, 0, t);
    emit(t, "csv", out);
  } else {
    out << to_text(r);
  }
  return r.passed ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--abs-tol", c.abs_tol, "Absolute quadrature tolerance");
  sub->add_option("--rel-tol", c.rel_tol, "Relative quadrature tolerance");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json", "plain"}));
  sub->add_option("--out", c.out_path, "Write output to this file");
  sub->add_option("--seed", c.seed, "Seed for randomized checks");
}

void add_weight(CLI::App* sub, Config& c) {
  sub->add_option("--weight", c.weight, "gaussian|invquad|typeC|power|coscusp|table:<path>");
  sub->add_option("--a", c.a, "Weight parameter (Gaussian scale, typeC or power exponent)");
  sub->add_option("--route", c.route, "auto|direct|closed|kernel");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Bessel-square transforms, Gegenbauer kernels and smoothing constants", "bsq"};
  app.require_subcommand(1, 1);

  CLI::App* eval = app.add_subcommand("eval", "T_nu f(s); with --mass the Dirac combination");
  eval->add_option("--nu", c.nu, "Order nu >= -1/2")->required();
  eval->add_option("--s", c.s, "Argument s > 0")->required();
  eval->add_option("--mass", c.mass, "Mass m >= 0");
  add_weight(eval, c);
  add_common(eval, c);

  CLI::App* hank = app.add_subcommand("hankel", "H_nu f(rho)");
  hank->add_option("--nu", c.nu, "Order nu >= -1/2")->required();
  hank->add_option("--rho,--s", c.rho, "Argument rho > 0")->required();
  hank->add_option("--eps", c.eps, "Gaussian damping exp(-eps r^2)");
  add_weight(hank, c);
  add_common(hank, c);

  CLI::App* kern = app.add_subcommand("kernel", "K_{mu,nu}(r, s), or U_{mu,nu} g(s) of --weight when --r is absent");
  kern->add_option("--mu", c.mu, "mu >= 0");
  kern->add_option("--nu", c.nu, "nu > -1/2 (or -1/2 with a weight)")->required();
  kern->add_option("--s", c.s, "s > 0")->required();
  kern->add_option("--r", c.r, "r > 0");
  add_weight(kern, c);
  add_common(kern, c);

  CLI::App* cons = app.add_subcommand("constant", "Sharp smoothing constant of a family");
  cons->add_option("--family", c.family, "A|B|C|C_general")->required();
  cons->add_option("--d", c.d, "Dimension");
  cons->add_option("--a", c.a, "Family parameter");
  cons->add_option("--mass", c.mass, "Mass; selects the Dirac constant");
  cons->add_flag("--dirac", c.dirac, "Dirac constant (mass defaults to 0)");
  cons->add_option("--k-max", c.k_max, "Largest k scanned when monotonicity does not apply");
  cons->add_flag("--force-scan", c.force_scan, "Scan k even when the probe passes");
  add_common(cons, c);

  CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", c.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  add_common(ver, c);

  CLI::App* sweep = app.add_subcommand("sweep", "Tables over s, nu or k");
  sweep->add_option("--over", c.over, "s|nu|k")->required()->check(CLI::IsMember({"s", "nu", "k"}));
  sweep->add_option("--quantity", c.quantity, "T|H|I|J|K for s and nu sweeps");
  sweep->add_option("--from", c.from, "Range start");
  sweep->add_option("--to", c.to, "Range end");
  sweep->add_option("--points", c.points, "Number of points");
  sweep->add_flag("--log", c.log_spacing, "Log-spaced points");
  sweep->add_option("--nu", c.nu, "Order (s sweep)");
  sweep->add_option("--s", c.s, "Argument (nu sweep)");
  sweep->add_option("--family", c.family, "Family (k sweep)");
  sweep->add_option("--d", c.d, "Dimension (k sweep)");
  sweep->add_option("--mass", c.mass, "Mass (k sweep, Dirac)");
  sweep->add_flag("--dirac", c.dirac, "Dirac objective (k sweep)");
  sweep->add_option("--k-max", c.k_max, "Default upper k");
  add_weight(sweep, c);
  add_common(sweep, c);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot open " << c.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    int code = kExitOk;
    if (ver->parsed()) {
      code = cmd_verify(c, *sink);
    } else {
      Table t;
      if (eval->parsed()) t = cmd_eval(c);
      if (hank->parsed()) t = cmd_hankel(c);
      if (kern->parsed()) t = cmd_kernel(c);
      if (cons->parsed()) t = cmd_constant(c);
      if (sweep->parsed()) t = cmd_sweep(c);
      emit(t, c.format, *sink);
    }
    sink->flush();
    if (!*sink) {
      err << "error: writing output failed\n";
      return kExitUsage;
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bsq
