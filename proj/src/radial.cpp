#include "bsq/radial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral of exp(-b r^2) over (R, inf).
double gaussian_tail(double b, double R) { return 0.5 * std::sqrt(std::numbers::pi / b) * std::erfc(R * std::sqrt(b)); }

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

bool Integrability::in_space(double n1, double n2) const {
  const bool origin_ok = origin_inclusive ? n1 >= origin_threshold : n1 > origin_threshold;
  const bool inf_ok = infinity_inclusive ? n2 <= infinity_threshold : n2 < infinity_threshold;
  return origin_ok && inf_ok;
}

Integrability Integrability::declared(double n1, double n2) { return {n1, true, n2, true}; }

const char* to_string(RadialKind kind) {
  switch (kind) {
    case RadialKind::gaussian:
      return "gaussian";
    case RadialKind::inverse_quadratic:
      return "invquad";
    case RadialKind::type_c:
      return "typeC";
    case RadialKind::power_law:
      return "power";
    case RadialKind::coscusp:
      return "coscusp";
    case RadialKind::tabulated:
      return "table";
    case RadialKind::custom:
      return "custom";
  }
  return "unknown";
}

RadialFunction RadialFunction::gaussian(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("gaussian: scale must be positive");
  return RadialFunction(RadialKind::gaussian, a);
}

RadialFunction RadialFunction::inverse_quadratic() { return RadialFunction(RadialKind::inverse_quadratic, 2.0); }

RadialFunction RadialFunction::type_c(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("type_c: exponent a must be positive");
  return RadialFunction(RadialKind::type_c, a);
}

RadialFunction RadialFunction::power_law(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("power_law: exponent a must be positive");
  return RadialFunction(RadialKind::power_law, a);
}

RadialFunction RadialFunction::coscusp() { return RadialFunction(RadialKind::coscusp, 0.0); }

RadialFunction RadialFunction::tabulated(std::vector<double> r, std::vector<double> f, Integrability integrability) {
  if (r.size() != f.size() || r.size() < 2) throw DomainError("tabulated: need at least two (r, f) pairs");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(f[i])) throw DomainError("tabulated: non-finite entry");
    if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("tabulated: r must be strictly increasing");
  }
  if (r.front() < 0.0) throw DomainError("tabulated: r must be non-negative");
  RadialFunction out(RadialKind::tabulated, 0.0);
  auto t = std::make_shared<Table>();
  t->r = std::move(r);
  t->f = std::move(f);
  t->integrability = integrability;
  out.table_ = std::move(t);
  return out;
}

RadialFunction RadialFunction::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight table '" + path + "'");
  std::vector<double> r, f;
  std::optional<Integrability> integ;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      hs >> key;
      if (key == "integrability") {
        double n1, n2;
        if (!(hs >> n1 >> n2)) throw DomainError(path + ":" + std::to_string(lineno) + ": malformed integrability header");
        integ = Integrability::declared(n1, n2);
      }
      continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) throw DomainError(path + ":" + std::to_string(lineno) + ": expected two numbers");
    r.push_back(x);
    f.push_back(y);
  }
  if (!integ) throw DomainError(path + ": missing '# integrability <nu1> <nu2>' header line");
  return tabulated(std::move(r), std::move(f), *integ);
}

RadialFunction RadialFunction::custom(CustomProfile profile) {
  if (!profile.f) throw DomainError("custom: profile function is empty");
  RadialFunction out(RadialKind::custom, 0.0);
  out.custom_ = std::make_shared<const CustomProfile>(std::move(profile));
  return out;
}

double RadialFunction::base(double r) const {
  switch (kind_) {
    case RadialKind::gaussian:
      return std::exp(-0.5 * a_ * a_ * r * r);
    case RadialKind::inverse_quadratic:
      return 1.0 / (1.0 + r * r);
    case RadialKind::type_c:
      return std::pow(1.0 + r * r, -0.5 * a_);
    case RadialKind::power_law:
      return std::pow(r, -a_);
    case RadialKind::coscusp: {
      if (r == 0.0) return 0.5;
      const double h = std::sin(0.5 * r) / r;
      return 2.0 * h * h;
    }
    case RadialKind::tabulated: {
      const auto& t = *table_;
      if (r < t.r.front() || r > t.r.back()) return 0.0;
      const auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
      if (it == t.r.end()) return t.f.back();
      const std::size_t i = static_cast<std::size_t>(it - t.r.begin());
      const double w = (r - t.r[i - 1]) / (t.r[i] - t.r[i - 1]);
      return (1.0 - w) * t.f[i - 1] + w * t.f[i];
    }
    case RadialKind::custom:
      return custom_->f(r);
  }
  return 0.0;
}

double RadialFunction::operator()(double r) const {
  double v = scale_ * base(r);
  if (eps_ > 0.0 && v != 0.0) v *= std::exp(-eps_ * r * r);
  return v;
}

std::string RadialFunction::name() const {
  std::string s;
  switch (kind_) {
    case RadialKind::gaussian:
      s = "gaussian(a=" + fmt(a_) + ")";
      break;
    case RadialKind::type_c:
      s = "typeC(a=" + fmt(a_) + ")";
      break;
    case RadialKind::power_law:
      s = "power(a=" + fmt(a_) + ")";
      break;
    case RadialKind::custom:
      s = custom_->name;
      break;
    default:
      s = to_string(kind_);
  }
  if (scale_ != 1.0) s = fmt(scale_) + "*" + s;
  if (eps_ > 0.0) s += "*exp(-" + fmt(eps_) + " r^2)";
  return s;
}

RadialFunction RadialFunction::damped(double eps) const {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("damped: eps must be finite and >= 0");
  RadialFunction out = *this;
  if (kind_ == RadialKind::gaussian) {
    // exp(-a^2 r^2/2 - eps r^2) is again a Gaussian.
    out.a_ = std::sqrt(a_ * a_ + 2.0 * eps);
    return out;
  }
  out.eps_ += eps;
  return out;
}

RadialFunction RadialFunction::scaled(double c) const {
  if (!std::isfinite(c)) throw DomainError("scaled: factor must be finite");
  RadialFunction out = *this;
  out.scale_ *= c;
  return out;
}

Integrability RadialFunction::integrability() const {
  Integrability in;
  switch (kind_) {
    case RadialKind::gaussian:
      break;
    case RadialKind::inverse_quadratic:
      in.infinity_threshold = 1.0;
      break;
    case RadialKind::type_c:
      in.infinity_threshold = a_ - 1.0;
      break;
    case RadialKind::power_law:
      in.origin_threshold = a_ - 1.0;
      in.infinity_threshold = a_ - 1.0;
      break;
    case RadialKind::coscusp:
      in.infinity_threshold = 1.0;
      break;
    case RadialKind::tabulated:
      in = table_->integrability;
      // Zero beyond the last node.
      in.infinity_threshold = kInf;
      in.infinity_inclusive = false;
      break;
    case RadialKind::custom:
      in = custom_->integrability;
      break;
  }
  if (eps_ > 0.0) {
    in.infinity_threshold = kInf;
    in.infinity_inclusive = false;
  }
  if (scale_ == 0.0) in = Integrability{-kInf, false, kInf, false};
  return in;
}

double RadialFunction::origin_exponent() const {
  if (kind_ == RadialKind::power_law) return a_;
  if (kind_ == RadialKind::custom) return custom_->origin_exponent;
  return 0.0;
}

double RadialFunction::max_frequency() const {
  if (kind_ == RadialKind::coscusp) return 1.0;
  if (kind_ == RadialKind::custom) {
    double m = 0.0;
    for (const TailTerm& t : custom_->tail_terms) m = std::max(m, std::fabs(t.omega));
    return m;
  }
  return 0.0;
}

double RadialFunction::support_end() const {
  if (kind_ == RadialKind::tabulated) return table_->r.back();
  return kInf;
}

std::vector<double> RadialFunction::breakpoints() const {
  if (kind_ == RadialKind::tabulated) return table_->r;
  if (kind_ == RadialKind::custom) return custom_->breakpoints;
  return {};
}

TailModel RadialFunction::tail_model(double A) const {
  TailModel m;
  if (A >= support_end() || scale_ == 0.0) {
    m.compact = true;
    m.abs_tail_bound = [](double) { return 0.0; };
    return m;
  }
  const double c = scale_, eps = eps_, a = a_;
  const auto damp = [eps](double r) { return eps > 0.0 ? std::exp(-eps * r * r) : 1.0; };
  auto add = [&](Integrand amp, double omega, double decay) {
    m.terms.push_back(TailTerm{std::move(amp), omega, 0.0, eps > 0.0 ? kInf : decay});
  };
  switch (kind_) {
    case RadialKind::gaussian:
      add([c, a](double r) { return c * std::exp(-0.5 * a * a * r * r); }, 0.0, kInf);
      break;
    case RadialKind::inverse_quadratic:
      add([c, damp](double r) { return c * damp(r) / (1.0 + r * r); }, 0.0, 2.0);
      break;
    case RadialKind::type_c:
      add([c, a, damp](double r) { return c * damp(r) * std::pow(1.0 + r * r, -0.5 * a); }, 0.0, a);
      break;
    case RadialKind::power_law:
      add([c, a, damp](double r) { return c * damp(r) * std::pow(r, -a); }, 0.0, a);
      break;
    case RadialKind::coscusp:
      add([c, damp](double r) { return c * damp(r) / (r * r); }, 0.0, 2.0);
      add([c, damp](double r) { return -c * damp(r) / (r * r); }, 1.0, 2.0);
      break;
    case RadialKind::tabulated:
      throw IntegrabilityError("tabulated profile: tail requested inside the table range");
    case RadialKind::custom:
      for (const TailTerm& t : custom_->tail_terms) {
        const Integrand amp = t.amplitude;
        m.terms.push_back(TailTerm{[c, damp, amp](double r) { return c * damp(r) * amp(r); }, t.omega, t.phase,
                                   eps > 0.0 ? kInf : t.decay});
      }
      break;
  }
  if (abs_tail_bound(A)) {
    const RadialFunction self = *this;
    m.abs_tail_bound = [self](double R) { return *self.abs_tail_bound(R); };
  }
  return m;
}

std::optional<double> RadialFunction::abs_tail_bound(double R) const {
  const double c = std::fabs(scale_);
  if (c == 0.0 || R >= support_end()) return 0.0;
  std::optional<double> b;
  switch (kind_) {
    case RadialKind::gaussian:
      b = gaussian_tail(0.5 * a_ * a_, R);
      break;
    case RadialKind::inverse_quadratic:
      b = std::atan2(1.0, R);
      break;
    case RadialKind::type_c:
    case RadialKind::power_law:
      if (a_ > 1.0 && R > 0.0) b = std::pow(R, 1.0 - a_) / (a_ - 1.0);
      break;
    case RadialKind::coscusp:
      if (R > 0.0) b = 2.0 / R;
      break;
    case RadialKind::tabulated: {
      const auto& t = *table_;
      double sum = 0.0;
      for (std::size_t i = 0; i + 1 < t.r.size(); ++i) {
        if (t.r[i + 1] <= R) continue;
        const double lo = std::max(R, t.r[i]);
        sum += std::max(std::fabs(t.f[i]), std::fabs(t.f[i + 1])) * (t.r[i + 1] - lo);
      }
      b = sum;
      break;
    }
    case RadialKind::custom:
      if (custom_->abs_tail_bound) b = custom_->abs_tail_bound(R);
      break;
  }
  if (eps_ > 0.0 && kind_ != RadialKind::gaussian) {
    const auto sup = sup_beyond(R);
    if (sup) {
      const double damped_bound = *sup / c * gaussian_tail(eps_, R);
      b = b ? std::min(*b, damped_bound) : damped_bound;
    }
  }
  if (!b) return std::nullopt;
  return c * *b;
}

std::optional<double> RadialFunction::sup_beyond(double R) const {
  const double c = std::fabs(scale_);
  std::optional<double> s;
  switch (kind_) {
    case RadialKind::gaussian:
      s = std::exp(-0.5 * a_ * a_ * R * R);
      break;
    case RadialKind::inverse_quadratic:
      s = 1.0 / (1.0 + R * R);
      break;
    case RadialKind::type_c:
      s = std::pow(1.0 + R * R, -0.5 * a_);
      break;
    case RadialKind::power_law:
      if (R > 0.0) s = std::pow(R, -a_);
      break;
    case RadialKind::coscusp:
      s = R > 0.0 ? std::min(0.5, 2.0 / (R * R)) : 0.5;
      break;
    case RadialKind::tabulated: {
      const auto& t = *table_;
      double m = std::fabs(base(R));
      for (std::size_t i = 0; i < t.r.size(); ++i) {
        if (t.r[i] >= R) m = std::max(m, std::fabs(t.f[i]));
      }
      s = m;
      break;
    }
    case RadialKind::custom:
      break;
  }
  if (!s) return std::nullopt;
  return c * *s;
}

std::optional<double> RadialFunction::integral() const {
  std::optional<double> v;
  switch (kind_) {
    case RadialKind::gaussian:
      v = 0.5 * std::sqrt(2.0 * std::numbers::pi) / a_;
      break;
    case RadialKind::inverse_quadratic:
      if (eps_ == 0.0) v = 0.5 * std::numbers::pi;
      break;
    case RadialKind::type_c:
      if (eps_ == 0.0 && a_ > 1.0) {
        v = 0.5 * std::sqrt(std::numbers::pi) * std::exp(ln_gamma(0.5 * (a_ - 1.0)) - ln_gamma(0.5 * a_));
      }
      break;
    case RadialKind::power_law:
      break;
    case RadialKind::coscusp:
      if (eps_ == 0.0) v = 0.5 * std::numbers::pi;
      break;
    case RadialKind::tabulated:
      if (eps_ == 0.0) {
        const auto& t = *table_;
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < t.r.size(); ++i) sum += 0.5 * (t.f[i] + t.f[i + 1]) * (t.r[i + 1] - t.r[i]);
        v = sum;
      }
      break;
    case RadialKind::custom:
      if (eps_ == 0.0) v = custom_->integral;
      break;
  }
  if (!v) return std::nullopt;
  return scale_ * *v;
}

bool RadialFunction::is_gaussian_mixture() const {
  return kind_ == RadialKind::gaussian || kind_ == RadialKind::inverse_quadratic || kind_ == RadialKind::type_c ||
         kind_ == RadialKind::power_law;
}

}  // namespace bsq
