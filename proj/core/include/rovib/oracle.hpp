#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "rovib/spectrum.hpp"

namespace rovib {

/// Uniform radial grid, `points` nodes including the two Dirichlet ends.
struct GridSpec {
  double r_min = 0.0;  // Angstrom
  double r_max = 0.0;
  std::size_t points = 20000;

  /// r_min > 0, r_max > r_min, points >= 1000. Throws InputError.
  void validate() const;
  /// Same interval with every cell halved.
  GridSpec refined() const noexcept;
};

/// [1e-3 r_e, 12 r_e] with the tabulated r_e, shifted past the pole when the
/// potential has one at r > 0; 20000 points.
GridSpec default_grid(const PotentialParams& params);

struct FdOptions {
  int count = 1;
  /// Run the grid, its refinement and the refinement of that, and accept
  /// the Richardson-extrapolated values only when the last two
  /// extrapolations agree within `gate_cm`.
  bool richardson = true;
  double gate_cm = 1e-3;
  double rel_tol = 1e-10;  // bisection tolerance
};

struct FdResult {
  std::vector<double> energies;  // eV, ascending
  /// Values on the finest grid before extrapolation.
  std::vector<double> finest;
  /// Largest change between the last two extrapolations, cm^-1 (zero when
  /// no refinement was done).
  double refinement_shift_cm = 0.0;
  GridSpec grid;
};

/// Lowest eigenvalues of -h2m d^2/dr^2 + v(r) with Dirichlet ends.
/// Throws ResolutionError when the refinement gate fails.
FdResult fd_eigenvalues(const std::function<double(double)>& v, double h2m,
                        const GridSpec& grid, const FdOptions& options);

/// The radial problem for the deformed hyperbolic potential. With
/// `exact_centrifugal` the term is l(l+1) h2m / r^2; otherwise the channel's
/// approximant is used.
FdResult fd_eigenvalues(const PotentialParams& params, const Channel& channel,
                        bool exact_centrifugal, const GridSpec& grid,
                        const FdOptions& options);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, off) with indices
/// [first, first + count), found by Sturm-count bisection.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& off,
                                            std::size_t first, std::size_t count,
                                            double rel_tol = 1e-12);

struct CompareEntry {
  int n = 0;
  int l = 0;
  double analytic_cm = 0.0;
  double numeric_cm = 0.0;
  double abs_dev_cm = 0.0;
  double rel_dev = 0.0;
};

struct Tolerance {
  double abs_cm = std::numeric_limits<double>::infinity();
  double rel = std::numeric_limits<double>::infinity();
};

struct CompareReport {
  std::vector<CompareEntry> entries;
  double max_abs_cm = 0.0;
  double max_rel = 0.0;
  Tolerance tolerance;
  bool pass = true;
};

/// Pairs levels and numeric energies (eV) by position. Throws AlignmentError
/// on a length mismatch.
CompareReport compare_report(const std::vector<EnergyLevel>& analytic,
                             const std::vector<double>& numeric,
                             const Tolerance& tolerance);

}  // namespace rovib
