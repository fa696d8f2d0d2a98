#pragma once

#include <string_view>

namespace rovib {

/// Fixed conversion constants. Internal working units are eV and Angstrom;
/// cm^-1 only appears at I/O boundaries.
struct PhysicalConstants {
  static constexpr double hbar_c = 1973.29;          // eV * Angstrom
  static constexpr double amu_to_ev = 931.502e6;     // eV/c^2 per a.m.u.
  static constexpr double invcm_to_ev = 1.23985e-4;  // eV per cm^-1
};

enum class EnergyUnit { inverse_cm, electron_volt, mega_electron_volt };

/// Size of one `unit` expressed in eV.
constexpr double ev_per(EnergyUnit unit) noexcept {
  switch (unit) {
    case EnergyUnit::inverse_cm:
      return PhysicalConstants::invcm_to_ev;
    case EnergyUnit::electron_volt:
      return 1.0;
    case EnergyUnit::mega_electron_volt:
      return 1.0e6;
  }
  return 1.0;
}

/// Accepts "cm-1", "cm^-1", "1/cm", "eV", "MeV". Throws InputError otherwise.
EnergyUnit parse_energy_unit(std::string_view label);
std::string_view to_string(EnergyUnit unit) noexcept;

double convert_energy(double value, EnergyUnit from, EnergyUnit to) noexcept;
double convert_energy(double value, std::string_view from, std::string_view to);

inline double cm_to_ev(double value) noexcept {
  return value * PhysicalConstants::invcm_to_ev;
}
inline double ev_to_cm(double value) noexcept {
  return value / PhysicalConstants::invcm_to_ev;
}

}  // namespace rovib
