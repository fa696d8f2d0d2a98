#include "rovib/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rovib/errors.hpp"
#include "rovib/potential.hpp"
#include "rovib/units.hpp"

namespace rovib {

namespace {

// Number of eigenvalues below x (Sturm sequence of the LDL^T pivots).
std::size_t count_below(const std::vector<double>& d,
                        const std::vector<double>& e2, double x) {
  std::size_t count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = d[i] - x - e2[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> solve_on(const std::function<double(double)>& v,
                             double h2m, const GridSpec& g, int count,
                             double rel_tol) {
  const std::size_t interior = g.points - 2;
  const double h = (g.r_max - g.r_min) / static_cast<double>(g.points - 1);
  const double kin = h2m / (h * h);
  std::vector<double> diag(interior);
  for (std::size_t i = 0; i < interior; ++i) {
    const double r = g.r_min + static_cast<double>(i + 1) * h;
    diag[i] = 2.0 * kin + v(r);
  }
  std::vector<double> off(interior - 1, -kin);
  return tridiagonal_eigenvalues(diag, off, 0, static_cast<std::size_t>(count),
                                 rel_tol);
}

}  // namespace

void GridSpec::validate() const {
  if (!(r_min > 0.0)) throw InputError("grid r_min must be positive");
  if (!(r_max > r_min)) throw InputError("grid r_max must exceed r_min");
  if (points < 1000) throw InputError("grid needs at least 1000 points");
}

GridSpec GridSpec::refined() const noexcept {
  return {r_min, r_max, 2 * points - 1};
}

GridSpec default_grid(const PotentialParams& params) {
  const double re = params.molecule.equilibrium_radius;
  const double shift = pole_radius(params).value_or(0.0);
  return {shift + 1e-3 * re, shift + 12.0 * re, 20000};
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& off,
                                            std::size_t first, std::size_t count,
                                            double rel_tol) {
  const std::size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n) {
    throw InputError("tridiagonal matrix has inconsistent sizes");
  }
  if (first + count > n) throw InputError("more eigenvalues requested than exist");

  std::vector<double> e2(off.size());
  for (std::size_t i = 0; i < off.size(); ++i) e2[i] = off[i] * off[i];

  // Gershgorin bounds.
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double span = hi - lo;

  std::vector<double> out;
  out.reserve(count);
  double floor = lo;
  for (std::size_t k = first; k < first + count; ++k) {
    double a = floor, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (count_below(diag, e2, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
      const double scale = std::max(std::abs(mid), 1e-12 * span);
      if (b - a <= rel_tol * scale) break;
    }
    const double ev = 0.5 * (a + b);
    out.push_back(ev);
    floor = a;
  }
  return out;
}

FdResult fd_eigenvalues(const std::function<double(double)>& v, double h2m,
                        const GridSpec& grid, const FdOptions& options) {
  grid.validate();
  if (options.count < 1) throw InputError("eigenvalue count must be >= 1");
  if (!(h2m > 0.0)) throw InputError("kinetic prefactor must be positive");

  FdResult res;
  res.grid = grid;
  if (!options.richardson) {
    res.energies = solve_on(v, h2m, grid, options.count, options.rel_tol);
    res.finest = res.energies;
    return res;
  }

  const GridSpec g2 = grid.refined();
  const GridSpec g4 = g2.refined();
  const auto e1 = solve_on(v, h2m, grid, options.count, options.rel_tol);
  const auto e2 = solve_on(v, h2m, g2, options.count, options.rel_tol);
  const auto e4 = solve_on(v, h2m, g4, options.count, options.rel_tol);

  double worst = 0.0;
  res.energies.resize(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    const double x1 = (4.0 * e2[i] - e1[i]) / 3.0;
    const double x2 = (4.0 * e4[i] - e2[i]) / 3.0;
    worst = std::max(worst, std::abs(ev_to_cm(x2 - x1)));
    res.energies[i] = x2;
  }
  res.finest = e4;
  res.refinement_shift_cm = worst;
  res.grid = g4;
  if (worst >= options.gate_cm) {
    throw ResolutionError(
        4 * grid.points,
        "eigenvalues moved by " + std::to_string(worst) +
            " cm^-1 under refinement (gate " + std::to_string(options.gate_cm) +
            "); retry with about " + std::to_string(4 * grid.points) +
            " points");
  }
  return res;
}

FdResult fd_eigenvalues(const PotentialParams& params, const Channel& channel,
                        bool exact_centrifugal, const GridSpec& grid,
                        const FdOptions& options) {
  params.validate();
  if (channel.l < 0) throw InputError("angular momentum must be >= 0");
  const double h2m = params.molecule.hbar2_over_2mu();
  const double lf = static_cast<double>(channel.l) * (channel.l + 1);
  std::function<double(double)> v;
  if (exact_centrifugal || channel.l == 0) {
    v = [&params, h2m, lf](double r) {
      return potential_value(params, r) + h2m * lf / (r * r);
    };
  } else {
    v = [&params, &channel, h2m](double r) {
      return potential_value(params, r) +
             h2m * approx_centrifugal(channel.coeffs, channel.l, params, r);
    };
  }
  return fd_eigenvalues(v, h2m, grid, options);
}

CompareReport compare_report(const std::vector<EnergyLevel>& analytic,
                             const std::vector<double>& numeric,
                             const Tolerance& tolerance) {
  if (analytic.size() != numeric.size()) {
    throw AlignmentError("cannot compare " + std::to_string(analytic.size()) +
                         " analytic levels with " +
                         std::to_string(numeric.size()) + " numeric values");
  }
  CompareReport rep;
  rep.tolerance = tolerance;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    CompareEntry e;
    e.n = analytic[i].n;
    e.l = analytic[i].l;
    e.analytic_cm = analytic[i].value_cm();
    e.numeric_cm = ev_to_cm(numeric[i]);
    e.abs_dev_cm = std::abs(e.analytic_cm - e.numeric_cm);
    e.rel_dev = e.numeric_cm != 0.0 ? e.abs_dev_cm / std::abs(e.numeric_cm)
                                    : (e.abs_dev_cm == 0.0 ? 0.0 : INFINITY);
    rep.max_abs_cm = std::max(rep.max_abs_cm, e.abs_dev_cm);
    rep.max_rel = std::max(rep.max_rel, e.rel_dev);
    if (e.abs_dev_cm > tolerance.abs_cm || e.rel_dev > tolerance.rel) {
      rep.pass = false;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace rovib
