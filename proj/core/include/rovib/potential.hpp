#pragma once

#include <optional>
#include <string_view>

#include "rovib/registry.hpp"

namespace rovib {

/// (1 +/- q e^{-2 alpha r}) / (1 -/+ q e^{-2 alpha r}); upper signs for the
/// plus branch. Throws PoleError when the denominator magnitude is < 1e-30.
double deformed_coth(double r, double alpha, double q, Branch branch);

/// Deformed hyperbolic potential in eV at radius r (Angstrom).
double potential_value(const PotentialParams& params, double r);

/// dV/dr in eV per Angstrom.
double potential_derivative(const PotentialParams& params, double r);

/// Radius where the deformed coth has its pole, if it lies at r > 0.
/// The potential is only physical for r beyond it.
std::optional<double> pole_radius(const PotentialParams& params) noexcept;

/// Location of the potential minimum (where V = 0). For q = 1 this is
/// arctanh(sigma_eff^{+-1}) / alpha; q shifts it by ln|q| / (2 alpha).
/// Throws DomainError when sigma_eff is outside the arctanh domain or the
/// minimum would sit at r <= 0.
double equilibrium_radius(const PotentialParams& params);

/// D (1 - e^{-alpha (r - r_e)})^2.
double morse_value(double depth, double alpha, double r_e, double r) noexcept;

enum class CoeffProvenance {
  exact,               // l = 0, no centrifugal approximation involved
  paper_formula,       // closed forms transcribed verbatim
  derivative_matched,  // solved from value/slope/curvature matching at r_e
};

std::string_view to_string(CoeffProvenance provenance) noexcept;

/// Coefficients of l(l+1)/r^2 ~ l(l+1)/r_e^2 (A0 + A1 y + A2 y^2),
/// y = +-e^{-2 alpha r} / (1 -/+ q e^{-2 alpha r}).
struct CentrifugalCoeffs {
  double a0 = 1.0;
  double a1 = 0.0;
  double a2 = 0.0;
  CoeffProvenance provenance = CoeffProvenance::exact;
};

/// The expansion variable y(r) of the centrifugal approximation.
double pekeris_variable(double r, double alpha, double q, Branch branch);

/// Closed-form A0, A1, A2 exactly as published. The printed A1 is known to
/// disagree with derivative matching; kept for diagnostics.
CentrifugalCoeffs pekeris_coefficients(double alpha, double r_e, Branch branch);

/// Solves the 3x3 system matching the ansatz to 1/r^2 and its first two
/// derivatives at r = r_e. Throws DegenerateGeometryError if singular.
CentrifugalCoeffs matched_coefficients(double alpha, double r_e, double q,
                                       Branch branch);

/// Relative residuals of value, first and second derivative at r_e.
struct MatchingResiduals {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

MatchingResiduals matching_residuals(const CentrifugalCoeffs& coeffs,
                                     double alpha, double r_e, double q,
                                     Branch branch);

/// l(l+1)/r_e^2 (A0 + A1 y + A2 y^2) in Angstrom^-2; r_e is the molecule's
/// tabulated equilibrium separation.
double approx_centrifugal(const CentrifugalCoeffs& coeffs, int l,
                          const PotentialParams& params, double r);

}  // namespace rovib
