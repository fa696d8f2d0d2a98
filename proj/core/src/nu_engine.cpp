#include "rovib/nu_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rovib/errors.hpp"

namespace rovib::nu {

std::string NUConstants::describe() const {
  if (admissible()) return "admissible";
  std::string out;
  auto add = [&out](const char* s) {
    if (!out.empty()) out += ", ";
    out += s;
  };
  if (has(kNegativeC8)) add("c8 < 0");
  if (has(kNegativeC9)) add("c9 < 0");
  if (has(kC10AtMostMinusOne)) add("c10 <= -1");
  if (has(kC11AtMostMinusOne)) add("c11 <= -1");
  if (has(kC12NotPositive)) add("c12 <= 0");
  if (has(kC13NotPositive)) add("c13 <= 0");
  return out;
}

NUConstants derive_constants(const NUInput& in) {
  if (in.c3 == 0.0) {
    throw InputError("derive_constants: c3 == 0 is not of hypergeometric form");
  }
  NUConstants k;
  k.input = in;
  k.c4 = 0.5 * (1.0 - in.c1);
  k.c5 = 0.5 * (in.c2 - 2.0 * in.c3);
  k.c6 = k.c5 * k.c5 + in.b1;
  k.c7 = 2.0 * k.c4 * k.c5 - in.b2;
  k.c8 = k.c4 * k.c4 + in.b3;
  k.c9 = in.c3 * (k.c7 + in.c3 * k.c8) + k.c6;

  if (k.c8 < 0.0) k.flags |= kNegativeC8;
  if (k.c9 < 0.0) k.flags |= kNegativeC9;
  if (!k.real()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    k.c10 = k.c11 = k.c12 = k.c13 = nan;
    return k;
  }
  const double r8 = std::sqrt(k.c8);
  const double r9 = std::sqrt(k.c9);
  k.c10 = in.c1 + 2.0 * k.c4 + 2.0 * r8 - 1.0;
  k.c11 = 1.0 - in.c1 - 2.0 * k.c4 + 2.0 / in.c3 * r9;
  k.c12 = k.c4 + r8;
  k.c13 = -k.c4 + (r9 - k.c5) / in.c3;

  if (!(k.c10 > -1.0)) k.flags |= kC10AtMostMinusOne;
  if (!(k.c11 > -1.0)) k.flags |= kC11AtMostMinusOne;
  if (!(k.c12 > 0.0)) k.flags |= kC12NotPositive;
  if (!(k.c13 > 0.0)) k.flags |= kC13NotPositive;
  return k;
}

namespace {

void require_real(const NUConstants& consts, const char* who) {
  if (!consts.real()) {
    throw InadmissibleError(std::string(who) + ": " + consts.describe() +
                            " (no real bound state)");
  }
}

}  // namespace

std::array<KeyPolynomials, 4> candidate_polynomials(const NUConstants& consts) {
  require_real(consts, "candidate_polynomials");
  const auto& in = consts.input;
  const double r8 = std::sqrt(consts.c8);
  const double r9 = std::sqrt(consts.c9);
  const double base_k = -(consts.c7 + 2.0 * in.c3 * consts.c8);

  // The discriminant (c6 - k c3) z^2 + (c7 + k) z + c8 is a perfect square
  // exactly for k = base_k -/+ 2 sqrt(c8 c9); its root is
  // (sqrt c9 + c3 sqrt c8) z - sqrt c8 for the minus choice and
  // (sqrt c9 - c3 sqrt c8) z + sqrt c8 for the plus choice.
  struct Root {
    double k, slope, constant;
  };
  const std::array<Root, 2> roots = {
      Root{base_k - 2.0 * r8 * r9, r9 + in.c3 * r8, -r8},
      Root{base_k + 2.0 * r8 * r9, r9 - in.c3 * r8, r8}};

  std::array<KeyPolynomials, 4> out{};
  std::size_t idx = 0;
  for (const auto& root : roots) {
    for (double sign : {-1.0, 1.0}) {
      KeyPolynomials p;
      p.k = root.k;
      p.pi_const = consts.c4 + sign * root.constant;
      p.pi_slope = consts.c5 + sign * root.slope;
      // tau = tau_tilde + 2 pi with tau_tilde = c1 - c2 z.
      p.tau_const = in.c1 + 2.0 * p.pi_const;
      p.tau_slope = -in.c2 + 2.0 * p.pi_slope;
      p.physical = p.tau_slope < 0.0;
      out[idx++] = p;
    }
  }
  return out;
}

KeyPolynomials key_polynomials(const NUConstants& consts) {
  require_real(consts, "key_polynomials");
  return candidate_polynomials(consts)[0];
}

double EnergyRelationTerms::residual() const noexcept {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double EnergyRelationTerms::normalized() const noexcept {
  double scale = 0.0;
  for (double t : terms) scale = std::max(scale, std::abs(t));
  const double r = residual();
  return scale > 0.0 ? std::abs(r) / scale : std::abs(r);
}

EnergyRelationTerms energy_relation_terms(const NUConstants& consts, int n) {
  if (n < 0) throw InputError("energy relation: n must be >= 0");
  require_real(consts, "energy_relation");
  const auto& in = consts.input;
  const double r8 = std::sqrt(consts.c8);
  const double r9 = std::sqrt(consts.c9);
  const double nn = n;
  EnergyRelationTerms t;
  t.terms = {(in.c2 - in.c3) * nn,
             in.c3 * nn * nn,
             -(2.0 * nn + 1.0) * consts.c5,
             (2.0 * nn + 1.0) * (r9 + in.c3 * r8),
             consts.c7,
             2.0 * in.c3 * consts.c8,
             2.0 * r8 * r9};
  return t;
}

double energy_relation_residual(const NUConstants& consts, int n) {
  return energy_relation_terms(consts, n).residual();
}

WaveExponents wave_exponents(const NUConstants& consts) {
  if (!consts.real() || consts.has(kC10AtMostMinusOne) ||
      consts.has(kC11AtMostMinusOne)) {
    throw InvalidStateError("wave_exponents: " + consts.describe() +
                            " (weight function not integrable)");
  }
  WaveExponents w;
  w.rho_z = consts.c10;
  w.rho_w = consts.c11;
  w.phi_z = consts.c12;
  w.phi_w = consts.c13;
  w.jacobi_mu = consts.c10;
  w.jacobi_nu = consts.c11;
  w.c3 = consts.input.c3;
  return w;
}

}  // namespace rovib::nu
