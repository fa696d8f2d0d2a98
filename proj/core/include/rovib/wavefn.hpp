#pragma once

#include <optional>

#include "rovib/quadrature.hpp"
#include "rovib/specfun.hpp"
#include "rovib/spectrum.hpp"

namespace rovib {

/// Radial eigenfunction
///   g(z) = N |z|^K (1 - q z)^(S/q + 1/2) P_n^(2K, 2S/q)(1 - 2 q z),
/// z = +-e^{-2 alpha r} (sign by branch), R(r) = g / r.
struct RadialState {
  EnergyLevel level;
  double k_exp = 0.0;  // K~ (or K)
  double s_exp = 0.0;  // S~/|q|
  int n = 0;
  double alpha = 0.0;
  double q = 1.0;
  Branch branch = Branch::plus;
  /// ln N from norm_quadrature; N itself can under- or overflow.
  double log_norm = 0.0;
  double norm_quadrature = 0.0;
  std::optional<double> norm_series;

  double z_at(double r) const noexcept;
  /// Upper end of |z| over the physical range of r.
  double z_limit() const noexcept;
};

/// Builds the state for a solved level: reassembles K and S at the level's
/// energy, checks K > 0, S/q + 1/2 > 0 and the Jacobi orders 2K, 2S/q > -1
/// (InvalidStateError otherwise) and normalizes by quadrature. The series
/// normalization is attached when q = 1 and it converges.
RadialState make_state(const EnergyLevel& level);

/// g(r) = r R(r). Throws InputError for r <= 0.
double reduced_value(const RadialState& state, double r);
/// R(r) = g(r) / r.
double radial_value(const RadialState& state, double r);

/// Integral of |z|^(2K-1) (1 - q z)^(2S/q+1) P_n^2 d|z| / (2 alpha), i.e.
/// the norm of the unnormalized g in r-space, with its logarithm.
struct NormIntegral {
  double log_value = 0.0;
  double rel_error = 0.0;
  bool converged = false;
};
NormIntegral norm_integral(double k_exp, double s_exp, int n, double alpha,
                           double q, Branch branch,
                           const quad::Options& options = {});

/// N = integral^(-1/2), relative accuracy 1e-10. Throws InvalidStateError
/// when K <= 0 (the z = 0 end would not be integrable).
double norm_quadrature(const RadialState& state,
                       const quad::Options& options = {});

/// The closed-form series for N^-2 with Gamma(n + m)/Gamma(n) read as the
/// Pochhammer symbol (n)_m, summed to `tol`. Requires q = 1.
/// Returns the value of N (not N^-2); `converged` is false when the
/// series stalls.
SeriesResult norm_series(double k_exp, double s_exp, int n, double alpha,
                         double tol = series::tolerance);
SeriesResult norm_series(const RadialState& state,
                         double tol = series::tolerance);

/// s-wave form, with k~ and s~ rebuilt from a relativistic l = 0 level.
SeriesResult norm_series_s_wave(const EnergyLevel& level,
                                double tol = series::tolerance);

/// Sign changes of g on (0, infinity) found on a dense grid in |z|.
int count_nodes(const RadialState& state, int samples = 20000);

/// Integral of g_a g_b dr. States with different n carry different K, so
/// this is a diagnostic, not an orthogonality guarantee.
double overlap(const RadialState& a, const RadialState& b);

}  // namespace rovib
