#include "rovib/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rovib/errors.hpp"
#include "rovib/units.hpp"

namespace rovib {

namespace {

constexpr PhysicalConstants kPhys{};

double centrifugal_factor(int l) noexcept {
  return static_cast<double>(l) * static_cast<double>(l + 1);
}

// K~^2, Q~ and S~^2 before any square root is taken.
struct Squares {
  double k_sq = 0.0;
  double q_tilde = 0.0;
  double s_sq = 0.0;
};

Squares squares(const PotentialParams& p, const Channel& ch, double energy,
                Regime regime) {
  const double depth = p.depth();
  const double sig = p.sigma_eff();
  const double a = p.alpha;
  const double q = p.q;
  const double re = p.molecule.equilibrium_radius;
  const double lf = centrifugal_factor(ch.l);
  const double lre = lf / (re * re);

  Squares s;
  if (regime == Regime::nonrelativistic) {
    const double h2m = p.molecule.hbar2_over_2mu();
    s.k_sq = ((depth * (1.0 - sig) * (1.0 - sig) - energy) / h2m +
              lre * ch.coeffs.a0) /
             (4.0 * a * a);
    s.q_tilde = -q * depth * sig * (1.0 - sig) / (h2m * a * a) +
                lre * ch.coeffs.a1 / (4.0 * a * a);
    s.s_sq = (4.0 * q * q * depth * sig * sig / h2m + lre * ch.coeffs.a2 +
              q * q * a * a) /
             (4.0 * a * a);
  } else {
    const double mc2 = p.molecule.rest_energy();
    const double hc = kPhys.hbar_c;
    const double a2sq = 2.0 * mc2 + energy;
    const double a12 = -energy * a2sq;
    const double norm = 4.0 * a * a * hc * hc;
    s.k_sq = (a2sq * depth * (1.0 - sig) * (1.0 - sig) +
              lre * hc * hc * ch.coeffs.a0 + a12) /
             norm;
    s.q_tilde = -q * a2sq * depth * sig * (1.0 - sig) / (a * a * hc * hc) +
                lre * ch.coeffs.a1 / (4.0 * a * a);
    s.s_sq = (4.0 * q * q * a2sq * depth * sig * sig +
              lre * hc * hc * ch.coeffs.a2 + q * q * a * a * hc * hc) /
             norm;
  }
  return s;
}

void check_quantum_numbers(const PotentialParams& p, int n,
                           const Channel& ch) {
  if (n < 0) throw InputError("vibrational quantum number must be >= 0");
  if (ch.l < 0) throw InputError("angular momentum must be >= 0");
  if (ch.l != 0 && p.q != 1.0) {
    throw InputError("l != 0 is only supported for q = 1");
  }
}

AssembledParams with_k(double k, double q_tilde, double s_tilde, double q,
                       Regime regime) {
  AssembledParams a;
  a.k_tilde = k;
  a.q_tilde = q_tilde;
  a.s_tilde = s_tilde;
  a.q = q;
  a.regime = regime;
  return a;
}

double relation_residual(const AssembledParams& a, int n) {
  return nu::energy_relation_residual(nu::derive_constants(a.nu_input()), n);
}

}  // namespace

std::string_view to_string(Regime regime) noexcept {
  return regime == Regime::relativistic ? "kg" : "nr";
}

Channel Channel::make(const PotentialParams& params, int l,
                      CoeffProvenance provenance) {
  if (l < 0) throw InputError("angular momentum must be >= 0");
  if (l == 0) return s_wave();
  if (params.q != 1.0) {
    throw InputError("l != 0 is only supported for q = 1");
  }
  const double re = params.molecule.equilibrium_radius;
  Channel ch;
  ch.l = l;
  switch (provenance) {
    case CoeffProvenance::paper_formula:
      ch.coeffs = pekeris_coefficients(params.alpha, re, params.branch);
      break;
    case CoeffProvenance::derivative_matched:
      ch.coeffs =
          matched_coefficients(params.alpha, re, params.q, params.branch);
      break;
    case CoeffProvenance::exact:
      throw InputError("l != 0 needs approximate centrifugal coefficients");
  }
  return ch;
}

nu::NUInput AssembledParams::nu_input() const noexcept {
  nu::NUInput in;
  in.c1 = 1.0;
  in.c2 = q;
  in.c3 = q;
  const double k2 = k_tilde * k_tilde;
  in.b1 = q * q * k2 + s_tilde * s_tilde - q * q_tilde - q * q / 4.0;
  in.b2 = 2.0 * q * k2 - q_tilde;
  in.b3 = k2;
  return in;
}

std::optional<AssembledParams> assemble(const PotentialParams& params,
                                        const Channel& channel, double energy,
                                        Regime regime) {
  const Squares s = squares(params, channel, energy, regime);
  if (!(s.k_sq >= 0.0) || !(s.s_sq >= 0.0)) return std::nullopt;
  return with_k(std::sqrt(s.k_sq), s.q_tilde, std::sqrt(s.s_sq), params.q,
                regime);
}

double EnergyLevel::value_cm() const noexcept { return ev_to_cm(value); }

double nu_residual(const PotentialParams& params, int n, const Channel& channel,
                   double energy, Regime regime) {
  const auto a = assemble(params, channel, energy, regime);
  if (!a) return std::numeric_limits<double>::quiet_NaN();
  const auto consts = nu::derive_constants(a->nu_input());
  return nu::energy_relation_terms(consts, n).normalized();
}

EnergyLevel nr_energy(const PotentialParams& params, int n,
                      const Channel& channel) {
  check_quantum_numbers(params, n, channel);
  equilibrium_radius(params);

  const double h2m = params.molecule.hbar2_over_2mu();
  const double a = params.alpha;
  const double q = params.q;
  const double re = params.molecule.equilibrium_radius;
  const double lf = centrifugal_factor(channel.l);
  const double g = params.depth() / (h2m * a * a);
  const double sig = params.sigma_eff();
  const double lterm = lf / (4.0 * a * a * re * re);
  const auto& c = channel.coeffs;

  const double root_arg = g * sig * sig + lterm * c.a2 / (q * q) + 0.25;
  if (root_arg < 0.0) {
    throw NoBoundStateError("negative radicand in the energy formula for n=" +
                            std::to_string(n));
  }
  const double t = n + 0.5 + std::sqrt(root_arg);
  const double bracket =
      (g * sig + lterm * (c.a2 / (q * q) - c.a1 / q) - t * t) / t;

  EnergyLevel lvl;
  lvl.n = n;
  lvl.l = channel.l;
  lvl.value = params.molecule.dissociation_energy() +
              lf * h2m * c.a0 / (re * re) - a * a * h2m * bracket * bracket;
  lvl.regime = Regime::nonrelativistic;
  lvl.params = params;
  lvl.coeff_provenance = c.provenance;
  lvl.channel = channel;
  lvl.bound = bracket > 0.0;
  lvl.residual =
      nu_residual(params, n, channel, lvl.value, Regime::nonrelativistic);
  return lvl;
}

EnergyLevel nr_energy_via_engine(const PotentialParams& params, int n,
                                 const Channel& channel) {
  check_quantum_numbers(params, n, channel);
  equilibrium_radius(params);

  const Squares s = squares(params, channel, 0.0, Regime::nonrelativistic);
  if (!(s.s_sq >= 0.0)) {
    throw NoBoundStateError("S^2 < 0: no bound state for n=" +
                            std::to_string(n));
  }
  const double st = std::sqrt(s.s_sq);
  const auto at = [&](double k) {
    return relation_residual(
        with_k(k, s.q_tilde, st, params.q, Regime::nonrelativistic), n);
  };
  // Once c9 is fixed the relation is affine in K.
  const double r1 = at(1.0);
  const double r2 = at(2.0);
  if (r2 == r1) throw DomainError("energy relation is independent of K");
  const double k = 1.0 - r1 / (r2 - r1);

  const double h2m = params.molecule.hbar2_over_2mu();
  const double re = params.molecule.equilibrium_radius;
  const double a = params.alpha;
  EnergyLevel lvl;
  lvl.n = n;
  lvl.l = channel.l;
  lvl.value = params.molecule.dissociation_energy() +
              centrifugal_factor(channel.l) * h2m * channel.coeffs.a0 /
                  (re * re) -
              4.0 * a * a * h2m * k * k;
  lvl.regime = Regime::nonrelativistic;
  lvl.params = params;
  lvl.coeff_provenance = channel.coeffs.provenance;
  lvl.channel = channel;
  lvl.bound = k > 0.0;
  const auto terms = nu::energy_relation_terms(
      nu::derive_constants(
          with_k(k, s.q_tilde, st, params.q, Regime::nonrelativistic)
              .nu_input()),
      n);
  lvl.residual = terms.normalized();
  return lvl;
}

double RelativisticResidual::normalized() const noexcept {
  return scale > 0.0 ? std::abs(value) / scale : std::abs(value);
}

std::optional<RelativisticResidual> relativistic_residual(
    const PotentialParams& params, int n, const Channel& channel, double eps) {
  const double mc2 = params.molecule.rest_energy();
  const double a2sq = 2.0 * mc2 + eps;
  if (!(a2sq > 0.0)) return std::nullopt;

  const double depth = params.depth();
  const double sig = params.sigma_eff();
  const double q = params.q;
  const double hc = kPhys.hbar_c;
  const double ahc = params.alpha * hc;
  const double re = params.molecule.equilibrium_radius;
  const double lhc = centrifugal_factor(channel.l) * hc * hc / (re * re);
  const auto& c = channel.coeffs;

  const double lhs_arg = a2sq * depth * (1.0 - sig) * (1.0 - sig) +
                         lhc * c.a0 - eps * a2sq;
  const double et_arg =
      4.0 * a2sq * depth * sig * sig + lhc * c.a2 / (q * q) + ahc * ahc;
  if (!(lhs_arg >= 0.0) || !(et_arg >= 0.0)) return std::nullopt;

  const double lhs = 2.0 * std::sqrt(lhs_arg);
  const double den = std::sqrt(et_arg) + ahc * (2.0 * n + 1.0);
  const double rhs =
      (4.0 * a2sq * depth * sig + lhc * (c.a2 / (q * q) - c.a1 / q) -
       den * den) /
      den;
  return RelativisticResidual{lhs - rhs,
                              std::max(std::abs(lhs), std::abs(rhs))};
}

ScanWindow ScanWindow::defaults(const PotentialParams& params) {
  const double mc2 = params.molecule.rest_energy();
  return {-1.999 * mc2, params.molecule.dissociation_energy(), 4000};
}

std::vector<EnergyLevel> solve_relativistic(const PotentialParams& params,
                                            int n, const Channel& channel,
                                            const ScanWindow& window) {
  check_quantum_numbers(params, n, channel);
  const double mc2 = params.molecule.rest_energy();
  if (window.steps < 1) throw InputError("scan needs at least one step");
  if (!(window.eps_max > window.eps_min)) {
    throw InputError("scan window is empty");
  }
  if (window.eps_min <= -2.0 * mc2) {
    throw InputError("scan window reaches E_R <= -mc^2");
  }

  const auto f = [&](double eps) -> std::optional<double> {
    const auto r = relativistic_residual(params, n, channel, eps);
    if (!r) return std::nullopt;
    return r->value;
  };

  std::vector<double> roots;
  const double h = (window.eps_max - window.eps_min) / window.steps;
  double x0 = window.eps_min;
  auto f0 = f(x0);
  for (int i = 1; i <= window.steps; ++i) {
    const double x1 = i == window.steps ? window.eps_max : window.eps_min + i * h;
    const auto f1 = f(x1);
    if (f0 && f1) {
      if (*f0 == 0.0) {
        roots.push_back(x0);
      } else if ((*f0 < 0.0) != (*f1 < 0.0) && *f1 != 0.0) {
        double lo = x0, hi = x1;
        double flo = *f0;
        for (int it = 0; it < 400; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          const auto fm = f(mid);
          if (!fm) break;
          if (*fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((*fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = *fm;
          } else {
            hi = mid;
          }
          const double width_tol =
              1e-12 * std::max(std::abs(mid), 1e-6 * std::abs(h));
          if (hi - lo <= width_tol) break;
        }
        roots.push_back(0.5 * (lo + hi));
      }
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 && *f0 == 0.0) roots.push_back(x0);

  std::optional<double> anchor;
  try {
    anchor = nr_energy(params, n, channel).value;
  } catch (const NoBoundStateError&) {
  } catch (const DomainError&) {
  }

  std::vector<EnergyLevel> out;
  for (double eps : roots) {
    const auto r = relativistic_residual(params, n, channel, eps);
    if (!r) continue;
    // A sign flip without a small residual is a jump, not a root.
    if (r->normalized() > 1e-9) continue;
    EnergyLevel lvl;
    lvl.n = n;
    lvl.l = channel.l;
    lvl.value = eps;
    lvl.rest_energy = mc2;
    lvl.regime = Regime::relativistic;
    lvl.residual = r->normalized();
    lvl.params = params;
    lvl.coeff_provenance = channel.coeffs.provenance;
    lvl.channel = channel;
    lvl.bound = r->scale > 0.0;
    lvl.kind = RootKind::spurious_candidate;
    out.push_back(lvl);
  }
  if (anchor && !out.empty()) {
    auto best = std::min_element(
        out.begin(), out.end(), [&](const EnergyLevel& x, const EnergyLevel& y) {
          return std::abs(x.value - *anchor) < std::abs(y.value - *anchor);
        });
    best->kind = RootKind::physical;
  }
  return out;
}

std::vector<EnergyLevel> solve_relativistic(const PotentialParams& params,
                                            int n, const Channel& channel) {
  return solve_relativistic(params, n, channel, ScanWindow::defaults(params));
}

std::optional<EnergyLevel> relativistic_level(const PotentialParams& params,
                                              int n, const Channel& channel) {
  for (const auto& lvl : solve_relativistic(params, n, channel)) {
    if (lvl.kind == RootKind::physical) return lvl;
  }
  return std::nullopt;
}

double nr_n_max(double depth, double sigma_eff, double alpha,
                double hbar2_over_2mu) {
  const double g = 4.0 * depth / (hbar2_over_2mu * alpha * alpha);
  const double a = g * sigma_eff * sigma_eff + 1.0;
  const double b = g * sigma_eff;
  if (a < 0.0 || b < 0.0) {
    throw NoBoundStateError("negative radicand in n_max");
  }
  return 0.5 * (-1.0 - std::sqrt(a) + std::sqrt(b));
}

double nr_n_max(const PotentialParams& params) {
  return nr_n_max(params.depth(), params.sigma_eff(), params.alpha,
                  params.molecule.hbar2_over_2mu());
}

double kg_n_max(const PotentialParams& params, double eps) {
  const double ahc = params.alpha * kPhys.hbar_c;
  const double g = 4.0 * params.depth() *
                   (2.0 * params.molecule.rest_energy() + eps) / (ahc * ahc);
  const double sig = params.sigma_eff();
  const double a = g * sig * sig + 1.0;
  const double b = g * sig;
  if (a < 0.0 || b < 0.0) {
    throw NoBoundStateError("negative radicand in n_max");
  }
  return 0.5 * (-1.0 - std::sqrt(a) + std::sqrt(b));
}

int bound_level_count(double n_max) noexcept {
  if (!(n_max >= 0.0)) return 0;
  return static_cast<int>(std::floor(n_max)) + 1;
}

double transition(const PotentialParams& params, int n) {
  if (n < 0) throw InputError("vibrational quantum number must be >= 0");
  if (n == 0) return 0.0;
  const int limit = bound_level_count(nr_n_max(params));
  if (n > limit) {
    throw OutOfSpectrumError("n=" + std::to_string(n) + " exceeds n_max=" +
                             std::to_string(nr_n_max(params)));
  }
  const Channel s = Channel::s_wave();
  return nr_energy(params, n, s).value - nr_energy(params, 0, s).value;
}

std::vector<EnergyLevel> nr_spectrum(const PotentialParams& params,
                                     const Channel& channel) {
  std::vector<EnergyLevel> out;
  const int count = bound_level_count(nr_n_max(params));
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) out.push_back(nr_energy(params, n, channel));
  return out;
}

}  // namespace rovib
