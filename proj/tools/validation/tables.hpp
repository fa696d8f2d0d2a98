#pragma once

#include <vector>

#include "golden.hpp"
#include "rovib/rovib.hpp"

namespace rovib::tools {

/// `base` with sigma, delta and alpha replaced by the row's values.
PotentialParams with_row(const PotentialParams& base,
                         const golden::GroundStateRow& row);

struct ScanPoint {
  double x = 0.0;
  double energy_cm = 0.0;
};

/// s-wave energies for n = 0 .. floor(n_max), x = n.
std::vector<ScanPoint> scan_n(const PotentialParams& params);

/// n = 0 energy at `steps` evenly spaced D_e values (cm^-1) from de_min to
/// de_max inclusive; a single point when steps == 1.
std::vector<ScanPoint> scan_de(const PotentialParams& params, double de_min,
                               double de_max, int steps);

bool strictly_increasing(const std::vector<ScanPoint>& points);

}  // namespace rovib::tools
