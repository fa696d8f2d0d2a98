#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rovib/nu_engine.hpp"
#include "rovib/potential.hpp"
#include "rovib/registry.hpp"

namespace rovib {

enum class Regime { relativistic, nonrelativistic };

std::string_view to_string(Regime regime) noexcept;

/// Orbital angular momentum together with the centrifugal coefficients used
/// for it. l = 0 needs no approximation.
struct Channel {
  int l = 0;
  CentrifugalCoeffs coeffs;

  static Channel s_wave() { return {}; }
  /// Computes coefficients anchored at the molecule's tabulated r_e.
  /// l != 0 requires q == 1 (the centrifugal expansion is only valid
  /// there); throws InputError otherwise.
  static Channel make(const PotentialParams& params, int l,
                      CoeffProvenance provenance);
};

/// Dimensionless K~, Q~, S~ of the reduced hypergeometric equation.
struct AssembledParams {
  double k_tilde = 0.0;
  double q_tilde = 0.0;
  double s_tilde = 0.0;
  double q = 1.0;
  Regime regime = Regime::nonrelativistic;

  /// c1 = 1, c2 = c3 = q and B1, B2, B3 built from K~, Q~, S~.
  nu::NUInput nu_input() const noexcept;
};

/// Energy arguments are in eV. In the non-relativistic regime `energy` is
/// E_NR measured from the potential minimum; in the relativistic regime it is
/// the offset E_R - mu c^2 (working with the offset keeps full precision next
/// to a rest energy of ~1e9 eV). Returns nullopt when a square-root argument
/// is negative (no bound state at this energy).
std::optional<AssembledParams> assemble(const PotentialParams& params,
                                        const Channel& channel, double energy,
                                        Regime regime);

enum class RootKind { physical, spurious_candidate };

struct EnergyLevel {
  int n = 0;
  int l = 0;
  /// eV; see assemble() for the reference point of each regime.
  double value = 0.0;
  /// mu c^2 in eV for relativistic levels, zero otherwise.
  double rest_energy = 0.0;
  Regime regime = Regime::nonrelativistic;
  /// Normalized residual of the defining equation at `value`.
  double residual = 0.0;
  PotentialParams params;
  CoeffProvenance coeff_provenance = CoeffProvenance::exact;
  Channel channel;
  /// K~ > 0: the wave function decays at large r.
  bool bound = true;
  RootKind kind = RootKind::physical;

  double value_cm() const noexcept;
  double total_energy() const noexcept { return rest_energy + value; }
};

/// Closed-form non-relativistic level. Throws NoBoundStateError when the
/// inner square-root argument is negative and DomainError when the
/// potential has no minimum.
EnergyLevel nr_energy(const PotentialParams& params, int n,
                      const Channel& channel);

/// The same level through the general parametric route: assemble, build the
/// NU constants and solve the energy relation for K.
EnergyLevel nr_energy_via_engine(const PotentialParams& params, int n,
                                 const Channel& channel);

/// Normalized residual of the NU energy relation at the given energy.
double nu_residual(const PotentialParams& params, int n, const Channel& channel,
                   double energy, Regime regime);

struct RelativisticResidual {
  double value = 0.0;  // LHS - RHS, eV
  double scale = 0.0;  // max(|LHS|, |RHS|)
  double normalized() const noexcept;
};

/// LHS - RHS of the explicit relativistic energy equation at offset
/// eps = E_R - mu c^2. nullopt where the equation is undefined.
std::optional<RelativisticResidual> relativistic_residual(
    const PotentialParams& params, int n, const Channel& channel, double eps);

struct ScanWindow {
  double eps_min = 0.0;  // E_R - mu c^2, eV
  double eps_max = 0.0;
  int steps = 4000;

  /// E_R in (-0.999 mu c^2, mu c^2 + D_e) with 4000 uniform steps.
  static ScanWindow defaults(const PotentialParams& params);
};

/// Every sign change on the scan grid refined by bisection, ascending. The
/// root nearest mu c^2 + E_NR(n, l) is tagged physical, the rest
/// spurious_candidate. Empty when no sign change is found.
std::vector<EnergyLevel> solve_relativistic(const PotentialParams& params,
                                            int n, const Channel& channel,
                                            const ScanWindow& window);
std::vector<EnergyLevel> solve_relativistic(const PotentialParams& params,
                                            int n, const Channel& channel);

/// Convenience: the physical root, or nullopt.
std::optional<EnergyLevel> relativistic_level(const PotentialParams& params,
                                              int n, const Channel& channel);

/// (1/2)[-1 - sqrt(g sigma^2 + 1) + sqrt(g sigma)], g = 8 mu D / (hbar alpha)^2.
/// Raw form taking the depth D (eV), sigma_eff, alpha and hbar^2/2mu
/// directly, so the sigma_eff -> 1 limit can be probed.
double nr_n_max(double depth, double sigma_eff, double alpha,
                double hbar2_over_2mu);
double nr_n_max(const PotentialParams& params);

/// Relativistic analogue evaluated at offset eps = E_R - mu c^2.
double kg_n_max(const PotentialParams& params, double eps);

/// Number of vibrational levels n = 0 .. floor(n_max); zero when n_max < 0.
int bound_level_count(double n_max) noexcept;

/// E(n) - E(0) at l = 0, eV. Accepts n up to floor(n_max) + 1, the last
/// level before the closed form turns back down; throws OutOfSpectrumError
/// beyond.
double transition(const PotentialParams& params, int n);

/// Levels n = 0 .. floor(n_max) for one channel.
std::vector<EnergyLevel> nr_spectrum(const PotentialParams& params,
                                     const Channel& channel);

}  // namespace rovib
