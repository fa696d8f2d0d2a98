#include "rovib/potential.hpp"

#include <cmath>
#include <string>

#include "rovib/errors.hpp"

namespace rovib {

namespace {

constexpr double kPoleGuard = 1e-30;

double branch_sign(Branch branch) noexcept {
  return branch == Branch::plus ? 1.0 : -1.0;
}

// The deformed coth is coth(alpha r - ln|q|/2) when (plus, q>0) or
// (minus, q<0), and tanh(alpha r - ln|q|/2) otherwise.
bool coth_shaped(const PotentialParams& p) noexcept {
  return (p.branch == Branch::plus) == (p.q > 0.0);
}

}  // namespace

double deformed_coth(double r, double alpha, double q, Branch branch) {
  const double s = branch_sign(branch);
  const double qe = q * std::exp(-2.0 * alpha * r);
  const double den = 1.0 - s * qe;
  if (std::abs(den) < kPoleGuard) {
    throw PoleError(r, "deformed coth has a pole at r = " + std::to_string(r));
  }
  return (1.0 + s * qe) / den;
}

double potential_value(const PotentialParams& params, double r) {
  const double c = deformed_coth(r, params.alpha, params.q, params.branch);
  const double w = 1.0 - params.sigma_eff() * c;
  return params.depth() * w * w;
}

double potential_derivative(const PotentialParams& params, double r) {
  const double s = branch_sign(params.branch);
  const double qe = params.q * std::exp(-2.0 * params.alpha * r);
  const double den = 1.0 - s * qe;
  if (std::abs(den) < kPoleGuard) {
    throw PoleError(r, "deformed coth has a pole at r = " + std::to_string(r));
  }
  const double c = (1.0 + s * qe) / den;
  // d/dr of (1 + s qe)/(1 - s qe) with d(qe)/dr = -2 alpha qe.
  const double dc = -4.0 * params.alpha * s * qe / (den * den);
  const double sig = params.sigma_eff();
  return -2.0 * params.depth() * (1.0 - sig * c) * sig * dc;
}

std::optional<double> pole_radius(const PotentialParams& params) noexcept {
  // Denominator 1 - s q e^{-2 alpha r} vanishes at e^{2 alpha r} = s q.
  const double sq = branch_sign(params.branch) * params.q;
  if (sq <= 1.0) return std::nullopt;
  return std::log(sq) / (2.0 * params.alpha);
}

double equilibrium_radius(const PotentialParams& params) {
  const double s = params.sigma_eff();
  double u = 0.0;
  if (coth_shaped(params)) {
    if (!(s > 0.0 && s < 1.0)) {
      throw DomainError("equilibrium_radius: sigma/delta = " +
                        std::to_string(s) +
                        " outside (0, 1) for the coth-shaped potential");
    }
    u = std::atanh(s);
  } else {
    if (!(s > 1.0)) {
      throw DomainError("equilibrium_radius: sigma/delta = " +
                        std::to_string(s) +
                        " must exceed 1 for the tanh-shaped potential");
    }
    u = std::atanh(1.0 / s);
  }
  const double r = (u + 0.5 * std::log(std::abs(params.q))) / params.alpha;
  if (!(r > 0.0)) {
    throw DomainError("equilibrium_radius: minimum lies at r <= 0");
  }
  return r;
}

double morse_value(double depth, double alpha, double r_e, double r) noexcept {
  const double w = 1.0 - std::exp(-alpha * (r - r_e));
  return depth * w * w;
}

std::string_view to_string(CoeffProvenance provenance) noexcept {
  switch (provenance) {
    case CoeffProvenance::exact:
      return "exact";
    case CoeffProvenance::paper_formula:
      return "paper";
    case CoeffProvenance::derivative_matched:
      return "matched";
  }
  return "?";
}

double pekeris_variable(double r, double alpha, double q, Branch branch) {
  const double z = branch_sign(branch) * std::exp(-2.0 * alpha * r);
  const double den = 1.0 - q * z;
  if (std::abs(den) < kPoleGuard) {
    throw PoleError(r, "centrifugal expansion variable has a pole at r = " +
                           std::to_string(r));
  }
  return z / den;
}

CentrifugalCoeffs pekeris_coefficients(double alpha, double r_e,
                                       Branch branch) {
  if (!(alpha * r_e > 0.0)) {
    throw InputError("pekeris_coefficients: alpha * r_e must be positive");
  }
  // Upper signs (plus branch): "1 - exp", "exp - 1", leading "+2".
  const double s = branch_sign(branch);
  const double x = alpha * r_e;
  const double em = std::exp(-2.0 * x);
  const double ep = std::exp(2.0 * x);
  const double one_m = 1.0 - s * em;
  const double bracket = one_m / (2.0 * x);
  const double grow = ep - s;

  CentrifugalCoeffs c;
  c.a0 = 1.0 - bracket * bracket * (8.0 * x / one_m - 3.0 - 2.0 * x);
  c.a1 = s * 2.0 * grow * (3.0 * bracket - (3.0 + 2.0 * x) * bracket);
  c.a2 = grow * grow * bracket * bracket * (3.0 + 2.0 * x - 4.0 * x / one_m);
  c.provenance = CoeffProvenance::paper_formula;
  return c;
}

namespace {

struct VariableDerivatives {
  double y, dy, d2y;
};

VariableDerivatives variable_at(double r, double alpha, double q,
                                Branch branch) {
  const double z = branch_sign(branch) * std::exp(-2.0 * alpha * r);
  const double w = 1.0 - q * z;
  if (std::abs(w) < kPoleGuard) {
    throw PoleError(r, "centrifugal expansion variable has a pole");
  }
  // dz/dr = -2 alpha z; y = z / w, y_z = 1/w^2, y_zz = 2q/w^3.
  const double zr = -2.0 * alpha * z;
  const double y_z = 1.0 / (w * w);
  const double y_zz = 2.0 * q / (w * w * w);
  return {z / w, y_z * zr, y_zz * zr * zr + y_z * (4.0 * alpha * alpha * z)};
}

}  // namespace

CentrifugalCoeffs matched_coefficients(double alpha, double r_e, double q,
                                       Branch branch) {
  if (!(alpha * r_e > 0.0)) {
    throw InputError("matched_coefficients: alpha * r_e must be positive");
  }
  if (q == 0.0) throw InputError("matched_coefficients: q must be nonzero");

  const auto [y, dy, d2y] = variable_at(r_e, alpha, q, branch);
  // Target f(r) = r_e^2 / r^2: f = 1, f' = -2/r_e, f'' = 6/r_e^2.
  const double f1 = -2.0 / r_e;
  const double f2 = 6.0 / (r_e * r_e);

  // Rows: [1 y y^2], [0 y' 2yy'], [0 y'' 2y'^2 + 2yy''].
  const double m11 = dy, m12 = 2.0 * y * dy;
  const double m21 = d2y, m22 = 2.0 * dy * dy + 2.0 * y * d2y;
  const double det = m11 * m22 - m12 * m21;
  const double scale = std::abs(m11 * m22) + std::abs(m12 * m21);
  if (!(std::abs(det) > 1e-14 * scale) || !std::isfinite(det)) {
    throw DegenerateGeometryError(
        "matched_coefficients: matching system is singular");
  }
  CentrifugalCoeffs c;
  c.a1 = (f1 * m22 - m12 * f2) / det;
  c.a2 = (m11 * f2 - m21 * f1) / det;
  c.a0 = 1.0 - c.a1 * y - c.a2 * y * y;
  c.provenance = CoeffProvenance::derivative_matched;
  return c;
}

MatchingResiduals matching_residuals(const CentrifugalCoeffs& coeffs,
                                     double alpha, double r_e, double q,
                                     Branch branch) {
  const auto [y, dy, d2y] = variable_at(r_e, alpha, q, branch);
  const double f0 = coeffs.a0 + coeffs.a1 * y + coeffs.a2 * y * y;
  const double f1 = coeffs.a1 * dy + 2.0 * coeffs.a2 * y * dy;
  const double f2 =
      coeffs.a1 * d2y + 2.0 * coeffs.a2 * (dy * dy + y * d2y);
  const double t1 = -2.0 / r_e;
  const double t2 = 6.0 / (r_e * r_e);
  return {std::abs(f0 - 1.0), std::abs((f1 - t1) / t1),
          std::abs((f2 - t2) / t2)};
}

double approx_centrifugal(const CentrifugalCoeffs& coeffs, int l,
                          const PotentialParams& params, double r) {
  if (l < 0) throw InputError("approx_centrifugal: l must be >= 0");
  if (!(r > 0.0)) throw InputError("approx_centrifugal: r must be positive");
  if (l == 0) return 0.0;
  const double y = pekeris_variable(r, params.alpha, params.q, params.branch);
  const double re = params.molecule.equilibrium_radius;
  const double ll = static_cast<double>(l) * (l + 1);
  return ll / (re * re) * (coeffs.a0 + coeffs.a1 * y + coeffs.a2 * y * y);
}

}  // namespace rovib
