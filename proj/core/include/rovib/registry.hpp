#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rovib {

/// Sign choice of the deformed hyperbolic potential: plus is the coth form,
/// minus the tanh form.
enum class Branch { plus, minus };

std::string_view to_string(Branch branch) noexcept;
Branch parse_branch(std::string_view label);

/// Spectroscopic constants of a diatomic molecule, in the units they are
/// tabulated in.
struct Molecule {
  std::string name;
  double dissociation_energy_cm = 0.0;  // D_e, cm^-1
  double equilibrium_radius = 0.0;      // r_e, Angstrom
  double reduced_mass = 0.0;            // mu, a.m.u.

  double dissociation_energy() const noexcept;  // eV
  double rest_energy() const noexcept;          // mu c^2, eV
  double hbar2_over_2mu() const noexcept;       // eV * Angstrom^2

  /// Throws InputError when any constant is non-positive.
  void validate() const;
};

/// Deformed hyperbolic potential D (1 - sigma_eff coth_q(alpha r))^2 with
/// sigma_eff = sigma / delta and D = D_e / (1 - sigma_eff)^2.
struct PotentialParams {
  Molecule molecule;
  double sigma = 0.0;
  double delta = 1.0;
  double alpha = 0.0;  // Angstrom^-1
  double q = 1.0;
  Branch branch = Branch::plus;

  double sigma_eff() const noexcept { return sigma / delta; }
  /// Depth D in eV.
  double depth() const noexcept;

  /// delta != 0, alpha > 0, q finite and nonzero, sigma_eff != 1, plus the
  /// molecule's own invariants. Throws InputError.
  void validate() const;
};

/// m1 m2 / (m1 + m2). Throws InputError for non-positive masses.
double reduced_mass(double m1, double m2);

/// Immutable-after-load collection of named parameter sets.
///
/// Text format: one `[name]` section per molecule followed by `key = value`
/// lines. Keys: de_cm, re_angstrom, mu_amu, sigma, delta, alpha_inv_angstrom
/// (all mandatory), q (default 1) and branch (plus|minus, default plus).
/// `#` and `;` start comments.
class Registry {
 public:
  Registry() = default;

  /// H2 (first parameter row of the hydrogen ground-state table) and Ar2.
  static Registry builtin();
  static Registry parse(std::istream& in);
  static Registry parse(std::string_view text);
  static Registry load(const std::filesystem::path& path);
  /// Uses $ROVIB_REGISTRY when set, otherwise the built-in defaults.
  static Registry load_default();

  const PotentialParams& find(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;
  std::span<const PotentialParams> entries() const noexcept { return entries_; }

  /// Validates eagerly; replaces an entry of the same name.
  void add(PotentialParams params);

 private:
  std::vector<PotentialParams> entries_;
};

inline Registry load_registry(const std::filesystem::path& path) {
  return Registry::load(path);
}

}  // namespace rovib
