#include "rovib/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rovib/errors.hpp"

namespace rovib {

namespace {

#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using wide = __float128;
#else
using wide = long double;
#endif

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// Valid for x >= 1/2.
double lanczos_ln_gamma(double x) {
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : kLanczos) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::nearbyint(x);
}

}  // namespace

LogGamma ln_gamma(double x) {
  if (std::isnan(x)) return {x, 1};
  if (is_nonpositive_integer(x)) {
    throw PoleError(x, "ln_gamma: pole at x = " + std::to_string(x));
  }
  if (x >= 0.5) return {lanczos_ln_gamma(x), 1};
  if (x > 0.0) return {lanczos_ln_gamma(x + 1.0) - std::log(x), 1};
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  const double s = std::sin(std::numbers::pi * x);
  return {std::log(std::numbers::pi / std::abs(s)) - lanczos_ln_gamma(1.0 - x),
          s < 0.0 ? -1 : 1};
}

double pochhammer(double m, int n) {
  if (n < 0) throw InputError("pochhammer: n must be >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= m + i;
  return p;
}

std::optional<int> terminating_order(double a) noexcept {
  if (is_nonpositive_integer(a) && a > -1e9) return static_cast<int>(-a);
  return std::nullopt;
}

namespace {

std::optional<int> min_order(std::initializer_list<double> params) {
  std::optional<int> best;
  for (double a : params) {
    if (auto k = terminating_order(a); k && (!best || *k < *best)) best = k;
  }
  return best;
}

void check_denominators(std::initializer_list<double> params, int last_term,
                        const char* who) {
  for (double b : params) {
    if (auto k = terminating_order(b); k && *k < last_term) {
      throw InputError(std::string(who) +
                       ": denominator parameter hits a non-positive integer "
                       "before the series terminates");
    }
  }
}

}  // namespace

SeriesResult gauss_2f1(double a, double b, double c, double z, double tol) {
  if (z == 0.0) return {1.0, 1, true, 0.0};

  if (auto order = min_order({a, b})) {
    // Finite sum of order+1 terms; accumulate in extended precision so
    // cancellation between large alternating terms does not eat digits.
    check_denominators({c}, *order, "gauss_2f1");
    wide term = 1, sum = 1;
    for (int p = 0; p < *order; ++p) {
      term *= (static_cast<wide>(a) + p) * (static_cast<wide>(b) + p) /
              ((static_cast<wide>(c) + p) * static_cast<wide>(p + 1)) *
              static_cast<wide>(z);
      sum += term;
    }
    return {static_cast<double>(sum), static_cast<std::size_t>(*order) + 1,
            true, 0.0};
  }

  if (!(std::abs(z) < 1.0)) {
    throw InputError("gauss_2f1: non-terminating series needs |z| < 1");
  }
  if (is_nonpositive_integer(c)) {
    throw InputError("gauss_2f1: c is a non-positive integer");
  }

  // Rescale when terms grow toward overflow; value = sum * 2^(scale).
  double term = 1.0, sum = 1.0;
  int scale = 0;
  int small_run = 0;
  std::size_t p = 0;
  for (; p < series::max_terms; ++p) {
    term *= (a + p) * (b + p) / ((c + p) * (p + 1.0)) * z;
    sum += term;
    if (std::abs(term) > 1e250 || std::abs(sum) > 1e250) {
      term = std::ldexp(term, -800);
      sum = std::ldexp(sum, -800);
      scale += 800;
    }
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_run == 3) break;
    } else {
      small_run = 0;
    }
  }
  const bool converged = small_run == 3;
  const double estimate = sum != 0.0 ? std::abs(term / sum) : 0.0;
  const double value = std::ldexp(sum, scale);
  return {value, p + 2, converged && std::isfinite(value), estimate};
}

SeriesResult hyper_3f2_unit(double a1, double a2, double a3, double b1,
                            double b2) {
  const auto order = min_order({a1, a2, a3});
  if (!order) {
    throw InputError(
        "hyper_3f2_unit: unit-argument series must terminate (a numerator "
        "parameter has to be a non-positive integer)");
  }
  check_denominators({b1, b2}, *order, "hyper_3f2_unit");
  wide term = 1, sum = 1;
  for (int p = 0; p < *order; ++p) {
    term *= (static_cast<wide>(a1) + p) * (static_cast<wide>(a2) + p) *
            (static_cast<wide>(a3) + p) /
            ((static_cast<wide>(b1) + p) * (static_cast<wide>(b2) + p) *
             static_cast<wide>(p + 1));
    sum += term;
  }
  return {static_cast<double>(sum), static_cast<std::size_t>(*order) + 1, true,
          0.0};
}

namespace {

void check_jacobi_orders(int n, double mu, double nu) {
  if (n < 0) throw InputError("jacobi: degree must be >= 0");
  if (!(mu > -1.0) || !(nu > -1.0)) {
    throw InputError("jacobi: orders must exceed -1");
  }
}

}  // namespace

double jacobi_poly(int n, double mu, double nu, double x) {
  check_jacobi_orders(n, mu, nu);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((mu + nu + 2.0) * x + (mu - nu));
  const double ab = mu + nu;
  for (int m = 2; m <= n; ++m) {
    const double c = 2.0 * m + ab;
    const double a1 = 2.0 * m * (m + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (mu * mu - nu * nu);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (m + mu - 1.0) * (m + nu - 1.0) * c;
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_hypergeometric(int n, double mu, double nu, double x) {
  check_jacobi_orders(n, mu, nu);
  const double s = 0.5 * (1.0 - x);
  const auto f = gauss_2f1(-n, n + mu + nu + 1.0, mu + 1.0, s);
  double lead = 1.0;
  for (int i = 1; i <= n; ++i) lead *= (mu + i) / i;
  return lead * f.value;
}

}  // namespace rovib
