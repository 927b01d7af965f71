#include <cmath>
#include <initializer_list>
#include <limits>

#include "bsq/errors.hpp"
#include "bsq/specfun.hpp"

namespace bsq {

namespace {

constexpr int kMaxTerms = 10000;
constexpr long double kSeriesTol = 1e-18L;
// c - a - b closer than this to an integer uses the logarithmic formulas.
constexpr double kIntegerGap = 1e-8;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Product of Gammas in the numerator over Gammas in the denominator.
// A pole in the denominator yields 0; a pole in the numerator is an error.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  double log_mag = 0.0;
  int sign = 1;
  for (double d : den) {
    if (is_nonpositive_integer(d)) return 0.0;
  }
  for (double n : num) {
    const auto [lg, s] = signed_ln_gamma(n);
    log_mag += lg;
    sign *= s;
  }
  for (double d : den) {
    const auto [lg, s] = signed_ln_gamma(d);
    log_mag -= lg;
    sign *= s;
  }
  return sign * std::exp(log_mag);
}

// Direct Maclaurin series; z is expected to satisfy |z| <= 1/2 or the
// series must terminate.
double direct_series(double a, double b, double c, double z) {
  long double term = 1.0L, sum = 1.0L;
  int small_run = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    const long double num = (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n);
    if (num == 0.0L) return static_cast<double>(sum);
    term *= num / ((static_cast<long double>(c) + n) * (n + 1.0L)) * z;
    sum += term;
    if (std::fabs(term) <= kSeriesTol * std::fabs(sum)) {
      if (++small_run >= 2) return static_cast<double>(sum);
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within the term cap");
}

// Terminating polynomial for a non-positive integer a.
double terminating(double a, double b, double c, double z) {
  const int n = static_cast<int>(-a);
  long double term = 1.0L, sum = 1.0L;
  for (int k = 0; k < n; ++k) {
    const long double denom = (static_cast<long double>(c) + k) * (k + 1.0L);
    if (denom == 0.0L) throw DomainError("hyp2f1: c is a non-positive integer inside the polynomial range");
    term *= (static_cast<long double>(a) + k) * (static_cast<long double>(b) + k) / denom * z;
    sum += term;
  }
  return static_cast<double>(sum);
}

// c = a + b + m with integer m >= 0; w = 1 - z in (0, 1/2].
double log_case_nonneg(double a, double b, int m, double w) {
  const double c = a + b + m;
  long double part1 = 0.0L;
  if (m >= 1) {
    long double term = 1.0L, sum = 1.0L;
    for (int n = 0; n < m - 1; ++n) {
      term *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
              ((n + 1.0L) * (1.0L - m + n)) * w;
      sum += term;
    }
    part1 = gamma_ratio({static_cast<double>(m), c}, {a + m, b + m}) * sum;
  }
  const double pref = gamma_ratio({c}, {a, b});
  long double part2 = 0.0L;
  if (pref != 0.0) {
    const double lw = std::log(w);
    long double coef = 1.0L / std::tgamma(m + 1.0);  // (a+m)_n (b+m)_n w^n / (n! (n+m)!)
    double psi_n1 = digamma(1.0);
    double psi_nm1 = digamma(m + 1.0);
    long double sum = 0.0L;
    int small_run = 0;
    int n = 0;
    for (; n < kMaxTerms; ++n) {
      const double bracket = lw - psi_n1 - psi_nm1 + digamma(a + n + m) + digamma(b + n + m);
      const long double t = coef * bracket;
      sum += t;
      if (std::fabs(t) <= kSeriesTol * std::fabs(sum) && n > 0) {
        if (++small_run >= 2) break;
      } else {
        small_run = 0;
      }
      coef *= (static_cast<long double>(a) + m + n) * (static_cast<long double>(b) + m + n) /
              ((n + 1.0L) * (n + m + 1.0L)) * w;
      psi_n1 += 1.0 / (n + 1.0);
      psi_nm1 += 1.0 / (n + m + 1.0);
      if (coef == 0.0L) break;
    }
    if (n >= kMaxTerms) throw ConvergenceError("hyp2f1: logarithmic series did not converge");
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    part2 = -sgn * pref * std::pow(w, m) * sum;
  }
  return static_cast<double>(part1 + part2);
}

// c = a + b - m with integer m >= 1; w = 1 - z in (0, 1/2].
double log_case_neg(double a, double b, int m, double w) {
  const double c = a + b - m;
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < m - 1; ++n) {
    term *= (static_cast<long double>(a) - m + n) * (static_cast<long double>(b) - m + n) /
            ((n + 1.0L) * (1.0L - m + n)) * w;
    sum += term;
  }
  const long double part1 = gamma_ratio({static_cast<double>(m), c}, {a, b}) * std::pow(w, -m) * sum;
  const double pref = gamma_ratio({c}, {a - m, b - m});
  long double part2 = 0.0L;
  if (pref != 0.0) {
    const double lw = std::log(w);
    long double coef = 1.0L / std::tgamma(m + 1.0);
    double psi_n1 = digamma(1.0);
    double psi_nm1 = digamma(m + 1.0);
    long double s2 = 0.0L;
    int small_run = 0;
    int n = 0;
    for (; n < kMaxTerms; ++n) {
      const double bracket = lw - psi_n1 - psi_nm1 + digamma(a + n) + digamma(b + n);
      const long double t = coef * bracket;
      s2 += t;
      if (std::fabs(t) <= kSeriesTol * std::fabs(s2) && n > 0) {
        if (++small_run >= 2) break;
      } else {
        small_run = 0;
      }
      coef *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
              ((n + 1.0L) * (n + m + 1.0L)) * w;
      psi_n1 += 1.0 / (n + 1.0);
      psi_nm1 += 1.0 / (n + m + 1.0);
      if (coef == 0.0L) break;
    }
    if (n >= kMaxTerms) throw ConvergenceError("hyp2f1: logarithmic series did not converge");
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    part2 = -sgn * pref * s2;
  }
  return static_cast<double>(part1 + part2);
}

// Connection formula about z = 1 for 1/2 < z < 1, w = 1 - z.
double about_one(double a, double b, double c, double w) {
  const double z = 1.0 - w;
  const double m = c - a - b;
  if (near_integer(m, kIntegerGap)) {
    const int mi = static_cast<int>(std::lround(m));
    return mi >= 0 ? log_case_nonneg(a, b, mi, w) : log_case_neg(a, b, -mi, w);
  }
  double result = 0.0;
  const double g1 = gamma_ratio({c, m}, {c - a, c - b});
  if (g1 != 0.0) result += g1 * direct_series(a, b, 1.0 - m, w);
  const double g2 = gamma_ratio({c, -m}, {a, b});
  if (g2 != 0.0) result += g2 * std::pow(w, m) * direct_series(c - a, c - b, 1.0 + m, w);
  (void)z;
  return result;
}

double hyp_core(double a, double b, double c, double z, double w) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("hyp2f1: non-finite argument");
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a)) return terminating(a, b, c, z);
  if (is_nonpositive_integer(b)) return terminating(b, a, c, z);
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  if (z > 1.0 || w < 0.0) throw DomainError("hyp2f1: argument must be <= 1");
  if (w == 0.0) {
    const double m = c - a - b;
    if (m <= 0.0) throw DomainError("hyp2f1: divergent at argument 1");
    return gamma_ratio({c, m}, {c - a, c - b});
  }
  if (z < 0.0) {
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
    const double zp = -z / w;
    const double wp = 1.0 / w;
    if (is_nonpositive_integer(c - a) && !is_nonpositive_integer(c - b)) {
      return std::pow(w, -b) * hyp_core(b, c - a, c, zp, wp);
    }
    return std::pow(w, -a) * hyp_core(a, c - b, c, zp, wp);
  }
  if (z <= 0.5) {
    // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z), used when it terminates.
    if (is_nonpositive_integer(c - a)) return std::pow(w, c - a - b) * terminating(c - a, c - b, c, z);
    if (is_nonpositive_integer(c - b)) return std::pow(w, c - a - b) * terminating(c - b, c - a, c, z);
    return direct_series(a, b, c, z);
  }
  if (is_nonpositive_integer(c - a)) return std::pow(w, c - a - b) * terminating(c - a, c - b, c, z);
  if (is_nonpositive_integer(c - b)) return std::pow(w, c - a - b) * terminating(c - b, c - a, c, z);
  return about_one(a, b, c, w);
}

}  // namespace

double hyp2f1(double a, double b, double c, double x) { return hyp_core(a, b, c, x, 1.0 - x); }

double hyp2f1(const HypArgs& args) { return hyp2f1(args.a, args.b, args.c, args.x); }

double hyp2f1(double a, double b, double c, double x, double one_minus_x) {
  return hyp_core(a, b, c, x, one_minus_x);
}

}  // namespace bsq
