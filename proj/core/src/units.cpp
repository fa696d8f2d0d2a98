#include "rovib/units.hpp"

#include <string>

#include "rovib/errors.hpp"

namespace rovib {

EnergyUnit parse_energy_unit(std::string_view label) {
  if (label == "cm-1" || label == "cm^-1" || label == "1/cm" ||
      label == "invcm") {
    return EnergyUnit::inverse_cm;
  }
  if (label == "eV" || label == "ev") return EnergyUnit::electron_volt;
  if (label == "MeV" || label == "mev") return EnergyUnit::mega_electron_volt;
  throw InputError("unknown energy unit '" + std::string(label) + "'");
}

std::string_view to_string(EnergyUnit unit) noexcept {
  switch (unit) {
    case EnergyUnit::inverse_cm:
      return "cm-1";
    case EnergyUnit::electron_volt:
      return "eV";
    case EnergyUnit::mega_electron_volt:
      return "MeV";
  }
  return "?";
}

double convert_energy(double value, EnergyUnit from, EnergyUnit to) noexcept {
  if (from == to) return value;
  return value * ev_per(from) / ev_per(to);
}

double convert_energy(double value, std::string_view from,
                      std::string_view to) {
  return convert_energy(value, parse_energy_unit(from), parse_energy_unit(to));
}

}  // namespace rovib
