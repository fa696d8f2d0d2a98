#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace rovib::nu {

/// Coefficients of the hypergeometric-type equation
///   [z(1 - c3 z)]^2 g'' + z(1 - c3 z)(c1 - c2 z) g' + (-b1 z^2 + b2 z - b3) g = 0.
struct NUInput {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
};

/// Bit flags describing why a constant set admits no physical solution.
enum AdmissibilityFlag : std::uint32_t {
  kAdmissible = 0,
  kNegativeC8 = 1u << 0,
  kNegativeC9 = 1u << 1,
  kC10AtMostMinusOne = 1u << 2,
  kC11AtMostMinusOne = 1u << 3,
  kC12NotPositive = 1u << 4,
  kC13NotPositive = 1u << 5,
};

/// The derived parametric constants c4 ... c13. Square-root dependent
/// entries (c10 ... c13) are NaN when c8 or c9 is negative.
struct NUConstants {
  NUInput input;
  double c4 = 0.0, c5 = 0.0, c6 = 0.0, c7 = 0.0, c8 = 0.0, c9 = 0.0;
  double c10 = 0.0, c11 = 0.0, c12 = 0.0, c13 = 0.0;
  std::uint32_t flags = kAdmissible;

  bool admissible() const noexcept { return flags == kAdmissible; }
  bool has(AdmissibilityFlag f) const noexcept { return (flags & f) != 0; }
  /// Square roots are real (c8, c9 >= 0); weaker than admissible().
  bool real() const noexcept {
    return !has(kNegativeC8) && !has(kNegativeC9);
  }
  std::string describe() const;
};

/// Throws InputError when c3 == 0. Admissibility problems are reported via
/// `flags`, never thrown, so callers scanning parameter space can skip them.
NUConstants derive_constants(const NUInput& input);

/// pi(z) = pi_const + pi_slope z, k, tau(z) = tau_const + tau_slope z.
struct KeyPolynomials {
  double pi_const = 0.0;
  double pi_slope = 0.0;
  double k = 0.0;
  double tau_const = 0.0;
  double tau_slope = 0.0;
  /// tau_slope < 0, the condition selecting the bound-state branch.
  bool physical = false;
};

/// The branch with k = -(c7 + 2 c3 c8) - 2 sqrt(c8 c9) and the minus sign in
/// front of the square root. Throws InadmissibleError if c8 or c9 < 0.
KeyPolynomials key_polynomials(const NUConstants& consts);

/// All four (k sign, square-root sign) branches; index 0 is the one
/// key_polynomials() returns. Only branches with tau' < 0 are physical.
std::array<KeyPolynomials, 4> candidate_polynomials(const NUConstants& consts);

/// The seven additive terms of the energy relation, in order
/// (c2-c3)n, c3 n^2, -(2n+1)c5, (2n+1)(sqrt c9 + c3 sqrt c8), c7, 2 c3 c8,
/// 2 sqrt(c8 c9).
struct EnergyRelationTerms {
  std::array<double, 7> terms{};
  double residual() const noexcept;
  /// |residual| divided by the largest term magnitude.
  double normalized() const noexcept;
};

EnergyRelationTerms energy_relation_terms(const NUConstants& consts, int n);
double energy_relation_residual(const NUConstants& consts, int n);

/// rho(z) = z^rho_z (1 - c3 z)^rho_w, phi(z) = z^phi_z (1 - c3 z)^phi_w and
/// y_n(z) = P_n^(jacobi_mu, jacobi_nu)(1 - 2 c3 z).
struct WaveExponents {
  double rho_z = 0.0;
  double rho_w = 0.0;
  double phi_z = 0.0;
  double phi_w = 0.0;
  double jacobi_mu = 0.0;
  double jacobi_nu = 0.0;
  double c3 = 1.0;
};

/// Throws InvalidStateError when c10 <= -1 or c11 <= -1 (no valid weight).
WaveExponents wave_exponents(const NUConstants& consts);

}  // namespace rovib::nu
