#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rovib::quad {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  /// The interval is first cut into this many equal panels.
  std::size_t initial_panels = 8;
  std::size_t max_panels = 20000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Endpoints are never evaluated, so integrable endpoint singularities are
/// tolerated, though a power substitution converges much faster.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options = {});

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
Rule gauss_legendre(std::size_t n);

}  // namespace rovib::quad
