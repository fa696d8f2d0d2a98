#pragma once

#include <cstddef>
#include <optional>

namespace rovib {

/// Outcome of a series evaluation.
struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
  /// Magnitude of the last retained terms relative to the partial sum;
  /// zero for an exact finite sum.
  double truncation_estimate = 0.0;
};

struct LogGamma {
  double value = 0.0;  // ln |Gamma(x)|
  int sign = 1;        // sign of Gamma(x)
};

/// ln|Gamma(x)| with sign. Lanczos approximation (g = 671/128), shifted
/// recursion below 1/2 and reflection for x <= 0.
/// Throws PoleError at non-positive integers.
LogGamma ln_gamma(double x);

/// Rising factorial m (m+1) ... (m+n-1) by direct product; (m)_0 = 1.
double pochhammer(double m, int n);

/// If `a` is a non-positive integer, returns -a (the order at which a
/// hypergeometric series containing it terminates).
std::optional<int> terminating_order(double a) noexcept;

namespace series {
inline constexpr std::size_t max_terms = 100000;
inline constexpr double tolerance = 1e-14;
}  // namespace series

/// Gauss 2F1(a, b; c; z). Exact finite sum (extended precision) when a or b
/// is a non-positive integer; otherwise the power series for |z| < 1,
/// declared converged after three consecutive terms below tol * |sum|.
/// Throws InputError when the series neither terminates nor converges
/// (|z| >= 1) or when c hits a non-positive integer before termination.
SeriesResult gauss_2f1(double a, double b, double c, double z,
                       double tol = series::tolerance);

/// 3F2(a1, a2, a3; b1, b2; 1) for terminating parameter sets only.
/// Throws InputError when no numerator parameter is a non-positive integer.
SeriesResult hyper_3f2_unit(double a1, double a2, double a3, double b1,
                            double b2);

/// Jacobi polynomial P_n^(mu,nu)(x) by the three-term recurrence.
/// Requires mu > -1, nu > -1, n >= 0.
double jacobi_poly(int n, double mu, double nu, double x);

/// Same polynomial through ((mu+1)_n / n!) 2F1(-n, n+mu+nu+1; mu+1; (1-x)/2).
double jacobi_hypergeometric(int n, double mu, double nu, double x);

}  // namespace rovib
