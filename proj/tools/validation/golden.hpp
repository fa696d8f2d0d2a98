#pragma once

#include <array>

namespace rovib::golden {

/// Hydrogen ground-state energies for four potential parameter sets.
struct GroundStateRow {
  double sigma;
  double delta;
  double alpha;
  double energy_cm;
};

inline constexpr std::array<GroundStateRow, 4> kHydrogenGroundStates{{
    {426.826, 463.102, 0.9327, 2168.68},
    {47.294, 102.341, 0.6146, 2164.45},
    {28.685, 117.121, 0.3826, 2157.53},
    {21.250, 213.212, 0.1762, 2147.53},
}};

/// Ar2 s-wave transitions E(n) - E(0), n = 1..7, cm^-1.
inline constexpr std::array<double, 7> kArgonTransitions{
    25.808, 46.079, 61.472, 72.536, 79.733, 83.453, 84.026};

/// Ar2 and H2 l = 0 levels, n = 0..5, cm^-1.
inline constexpr std::array<double, 6> kArgonSWave{
    15.3828, 41.1910, 61.4619, 76.8546, 87.9188, 95.1159};
inline constexpr std::array<double, 6> kHydrogenSWave{
    2168.68, 6306.66, 10183.8, 13802.1, 17163.2, 20269.1};

/// Published l != 0 levels, cm^-1.
struct RotationalRow {
  int n;
  int l;
  double argon_cm;   // <= 0 where no value is given
  double hydrogen_cm;
};

inline constexpr std::array<RotationalRow, 9> kRotationalLevels{{
    {1, 1, 25.7584, 6331.10},
    {2, 1, 49.7874, 10207.6},
    {2, 2, 0.0, 10255.2},
    {3, 1, 68.3028, 13825.2},
    {3, 2, 19.9133, 13871.5},
    {4, 1, 82.0041, 17185.7},
    {4, 2, 46.4777, 17230.7},
    {5, 1, 91.4672, 20291.0},
    {5, 2, 66.5474, 20334.8},
}};

inline constexpr double kArgonNMax = 6.689;

}  // namespace rovib::golden
