#include "tables.hpp"

namespace rovib::tools {

PotentialParams with_row(const PotentialParams& base,
                         const golden::GroundStateRow& row) {
  PotentialParams p = base;
  p.sigma = row.sigma;
  p.delta = row.delta;
  p.alpha = row.alpha;
  return p;
}

std::vector<ScanPoint> scan_n(const PotentialParams& params) {
  std::vector<ScanPoint> out;
  for (const auto& lvl : nr_spectrum(params, Channel::s_wave())) {
    out.push_back({static_cast<double>(lvl.n), lvl.value_cm()});
  }
  return out;
}

std::vector<ScanPoint> scan_de(const PotentialParams& params, double de_min,
                               double de_max, int steps) {
  if (steps < 1) throw InputError("scan needs at least one step");
  if (steps > 1 && !(de_max > de_min)) {
    throw InputError("D_e range must have positive length");
  }
  std::vector<ScanPoint> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double de =
        steps == 1 ? de_min : de_min + (de_max - de_min) * i / (steps - 1);
    PotentialParams p = params;
    p.molecule.dissociation_energy_cm = de;
    p.validate();
    out.push_back({de, nr_energy(p, 0, Channel::s_wave()).value_cm()});
  }
  return out;
}

bool strictly_increasing(const std::vector<ScanPoint>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].energy_cm > points[i - 1].energy_cm)) return false;
  }
  return true;
}

}  // namespace rovib::tools
