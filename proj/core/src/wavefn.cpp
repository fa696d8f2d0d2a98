#include "rovib/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rovib/errors.hpp"
#include "rovib/units.hpp"

namespace rovib {

namespace {

double branch_sign(Branch b) noexcept { return b == Branch::plus ? 1.0 : -1.0; }

double z_limit_for(double q, Branch b) noexcept {
  const double c = q * branch_sign(b);
  return c > 0.0 ? std::min(1.0, 1.0 / c) : 1.0;
}

// Integral over t in (0, t_hi) of t^(a-1) (1 - c t)^b h(t), returned as
// scaled * exp(log_scale) so that steep weights neither under- nor overflow.
struct Weighted {
  double scaled = 0.0;
  double log_scale = 0.0;
  double error = 0.0;
  bool converged = false;
};

template <class H>
Weighted weighted_integral(double a, double b, double c, double t_hi,
                           const H& h, const quad::Options& options) {
  const auto log1m = [&](double t) { return b * std::log1p(-c * t); };

  // Peak of the weight, used both to split the range and to pick the scale.
  double t_peak = t_hi;
  if (a > 1.0 && c > 0.0) {
    t_peak = std::min(t_hi, (a - 1.0) / (c * (a - 1.0 + b)));
  } else if (a <= 1.0) {
    t_peak = 0.0;
  }

  Weighted out;
  quad::Result r1, r2;
  if (a >= 1.0) {
    const double at_hi = (c * t_hi < 1.0) ? log1m(t_hi) : -INFINITY;
    const double shift =
        t_peak > 0.0
            ? (a - 1.0) * std::log(t_peak) +
                  (t_peak == t_hi ? at_hi : log1m(t_peak))
            : 0.0;
    const auto f = [&](double t) {
      return std::exp((a - 1.0) * std::log(t) + log1m(t) - shift) * h(t);
    };
    if (t_peak > 0.0 && t_peak < t_hi) {
      r1 = quad::integrate(f, 0.0, t_peak, options);
      r2 = quad::integrate(f, t_peak, t_hi, options);
    } else {
      r1 = quad::integrate(f, 0.0, t_hi, options);
    }
    out.log_scale = std::isfinite(shift) ? shift : 0.0;
  } else {
    // t = u^(1/a) absorbs the integrable singularity at t = 0.
    const double p = 1.0 / a;
    const double u_hi = std::pow(t_hi, a);
    const double shift =
        c < 0.0 ? log1m(t_hi) : 0.0;
    const auto f = [&](double u) {
      const double t = std::pow(u, p);
      return p * std::exp(log1m(t) - shift) * h(t);
    };
    r1 = quad::integrate(f, 0.0, u_hi, options);
    out.log_scale = shift;
  }
  out.scaled = r1.value + r2.value;
  out.error = r1.error + r2.error;
  out.converged = r1.converged && (r2.panels == 0 || r2.converged);
  return out;
}

void check_exponents(double k, double s) {
  if (!(k > 0.0)) {
    throw InvalidStateError("K must be positive for a decaying state (K=" +
                            std::to_string(k) + ")");
  }
  if (!(s + 0.5 > 0.0)) {
    throw InvalidStateError("S/q + 1/2 must be positive (S/q=" +
                            std::to_string(s) + ")");
  }
  if (!(2.0 * s > -1.0)) {
    throw InvalidStateError("Jacobi order 2S/q must exceed -1");
  }
}

double jacobi_at(int n, double k, double s, double c, double t) {
  return jacobi_poly(n, 2.0 * k, 2.0 * s, 1.0 - 2.0 * c * t);
}

}  // namespace

double RadialState::z_at(double r) const noexcept {
  return branch_sign(branch) * std::exp(-2.0 * alpha * r);
}

double RadialState::z_limit() const noexcept { return z_limit_for(q, branch); }

NormIntegral norm_integral(double k_exp, double s_exp, int n, double alpha,
                           double q, Branch branch,
                           const quad::Options& options) {
  check_exponents(k_exp, s_exp);
  if (n < 0) throw InputError("vibrational quantum number must be >= 0");
  if (!(alpha > 0.0)) throw InputError("alpha must be positive");
  const double c = q * branch_sign(branch);
  const auto p2 = [&](double t) {
    const double p = jacobi_at(n, k_exp, s_exp, c, t);
    return p * p;
  };
  const auto w = weighted_integral(2.0 * k_exp, 2.0 * s_exp + 1.0, c,
                                   z_limit_for(q, branch), p2, options);
  NormIntegral out;
  out.converged = w.converged && w.scaled > 0.0;
  out.log_value = w.log_scale + std::log(w.scaled) - std::log(2.0 * alpha);
  out.rel_error = w.scaled > 0.0 ? w.error / w.scaled : INFINITY;
  return out;
}

double norm_quadrature(const RadialState& state, const quad::Options& options) {
  const auto ni = norm_integral(state.k_exp, state.s_exp, state.n, state.alpha,
                                state.q, state.branch, options);
  if (!ni.converged) {
    throw InvalidStateError("normalization integral did not converge");
  }
  return std::exp(-0.5 * ni.log_value);
}

RadialState make_state(const EnergyLevel& level) {
  if (!level.bound) {
    throw InvalidStateError("level n=" + std::to_string(level.n) +
                            " is not bound (K <= 0)");
  }
  const auto a =
      assemble(level.params, level.channel, level.value, level.regime);
  if (!a) throw InvalidStateError("level energy admits no real K and S");

  RadialState st;
  st.level = level;
  st.n = level.n;
  st.alpha = level.params.alpha;
  st.q = level.params.q;
  st.branch = level.params.branch;
  st.k_exp = a->k_tilde;
  st.s_exp = a->s_tilde / std::abs(st.q);
  check_exponents(st.k_exp, st.s_exp);

  quad::Options opts;
  opts.rel_tol = 1e-12;
  const auto ni = norm_integral(st.k_exp, st.s_exp, st.n, st.alpha, st.q,
                                st.branch, opts);
  if (!ni.converged || ni.rel_error > 1e-10) {
    throw InvalidStateError("normalization integral did not reach 1e-10");
  }
  st.log_norm = -0.5 * ni.log_value;
  st.norm_quadrature = std::exp(st.log_norm);

  if (st.q == 1.0 && st.branch == Branch::plus) {
    const auto s = norm_series(st.k_exp, st.s_exp, st.n, st.alpha);
    if (s.converged && std::isfinite(s.value)) st.norm_series = s.value;
  }
  return st;
}

double reduced_value(const RadialState& state, double r) {
  if (!(r > 0.0)) throw InputError("radius must be positive");
  const double t = std::exp(-2.0 * state.alpha * r);
  if (t == 0.0) return 0.0;
  const double c = state.q * branch_sign(state.branch);
  if (c * t >= 1.0) {
    throw DomainError("radius lies inside the potential pole");
  }
  const double log_env = state.log_norm + state.k_exp * std::log(t) +
                         (state.s_exp + 0.5) * std::log1p(-c * t);
  return std::exp(log_env) * jacobi_at(state.n, state.k_exp, state.s_exp, c, t);
}

double radial_value(const RadialState& state, double r) {
  return reduced_value(state, r) / r;
}

SeriesResult norm_series(double k_exp, double s_exp, int n, double alpha,
                         double tol) {
  check_exponents(k_exp, s_exp);
  if (n < 0) throw InputError("vibrational quantum number must be >= 0");
  const double k2 = 2.0 * k_exp;
  const double ks = 2.0 * (k_exp + s_exp);
  const double a = 1.0 + n + ks;
  const double log_pref = ln_gamma(k2 + 1.0).value +
                          ln_gamma(2.0 * s_exp + 2.0).value -
                          std::log(2.0 * alpha);

  // m-th summand in log-magnitude and sign.
  const auto term = [&](int m, double& log_mag, int& sign) {
    const double f = hyper_3f2_unit(k2 + m, -n, a, m + ks + 2.0, 1.0 + k2).value;
    log_mag = -ln_gamma(m + 1.0).value - ln_gamma(m + k2 + 1.0).value -
              ln_gamma(m + ks + 2.0).value + std::log(std::abs(f));
    if (m > 0) {
      // (n)_m and (a)_m; (0)_m vanishes for m >= 1.
      log_mag += ln_gamma(a + m).value - ln_gamma(a).value +
                 ln_gamma(n + m).value - ln_gamma(n).value;
    }
    sign = ((m % 2) ? -1 : 1) * (f < 0.0 ? -1 : 1);
  };

  SeriesResult out;
  double log0 = 0.0;
  int sign0 = 1;
  term(0, log0, sign0);
  double sum = sign0;
  std::size_t used = 1;
  bool converged = n == 0;
  double last = 0.0;
  if (n > 0) {
    int small = 0;
    for (int m = 1; m < static_cast<int>(series::max_terms); ++m) {
      double lm = 0.0;
      int sm = 1;
      term(m, lm, sm);
      const double t = sm * std::exp(lm - log0);
      sum += t;
      ++used;
      last = std::abs(t);
      if (last <= tol * std::abs(sum)) {
        if (++small >= 3) {
          converged = true;
          break;
        }
      } else {
        small = 0;
      }
    }
  }
  out.terms_used = used;
  out.truncation_estimate = sum != 0.0 ? last / std::abs(sum) : INFINITY;
  if (!(sum > 0.0)) {
    out.value = std::numeric_limits<double>::quiet_NaN();
    out.converged = false;
    return out;
  }
  out.value = std::exp(-0.5 * (log_pref + log0 + std::log(sum)));
  out.converged = converged && std::isfinite(out.value);
  return out;
}

SeriesResult norm_series(const RadialState& state, double tol) {
  if (state.q != 1.0 || state.branch != Branch::plus) {
    throw InputError("series normalization is derived for q = 1, plus branch");
  }
  return norm_series(state.k_exp, state.s_exp, state.n, state.alpha, tol);
}

SeriesResult norm_series_s_wave(const EnergyLevel& level, double tol) {
  if (level.l != 0) throw InputError("s-wave normalization needs l = 0");
  const auto& p = level.params;
  if (p.q != 1.0 || p.branch != Branch::plus) {
    throw InputError("series normalization is derived for q = 1, plus branch");
  }
  double k = 0.0, s = 0.0;
  if (level.regime == Regime::relativistic) {
    constexpr PhysicalConstants phys{};
    const double ahc = 2.0 * p.alpha * phys.hbar_c;
    const double mc2 = level.rest_energy;
    const double er = mc2 + level.value;
    const double sig = p.sigma_eff();
    const double d = p.depth();
    // m^2c^4 - E_R^2 written as -eps (2 mc^2 + eps) to keep precision.
    const double k_arg = (mc2 + er) * d * (1.0 - sig) * (1.0 - sig) -
                         level.value * (mc2 + er);
    const double s_arg = 4.0 * (mc2 + er) * d * sig * sig +
                         p.alpha * p.alpha * phys.hbar_c * phys.hbar_c;
    if (k_arg < 0.0 || s_arg < 0.0) {
      throw InvalidStateError("s-wave exponents are not real");
    }
    k = std::sqrt(k_arg) / ahc;
    s = p.q * std::sqrt(s_arg) / ahc;
  } else {
    const auto a = assemble(p, Channel::s_wave(), level.value, level.regime);
    if (!a) throw InvalidStateError("s-wave exponents are not real");
    k = a->k_tilde;
    s = a->s_tilde;
  }
  return norm_series(k, s, level.n, p.alpha, tol);
}

int count_nodes(const RadialState& state, int samples) {
  if (samples < 2) throw InputError("node count needs at least two samples");
  const double c = state.q * branch_sign(state.branch);
  const double t_hi = state.z_limit();
  int nodes = 0;
  int prev = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = t_hi * (i + 0.5) / samples;
    const double p = jacobi_at(state.n, state.k_exp, state.s_exp, c, t);
    const int sgn = p > 0.0 ? 1 : (p < 0.0 ? -1 : 0);
    if (sgn == 0) continue;
    if (prev != 0 && sgn != prev) ++nodes;
    prev = sgn;
  }
  return nodes;
}

double overlap(const RadialState& a, const RadialState& b) {
  if (a.alpha != b.alpha || a.q != b.q || a.branch != b.branch) {
    throw InputError("overlap needs states of the same potential");
  }
  const double c = a.q * branch_sign(a.branch);
  const auto h = [&](double t) {
    return jacobi_at(a.n, a.k_exp, a.s_exp, c, t) *
           jacobi_at(b.n, b.k_exp, b.s_exp, c, t);
  };
  quad::Options opts;
  opts.rel_tol = 1e-10;
  const auto w = weighted_integral(a.k_exp + b.k_exp, a.s_exp + b.s_exp + 1.0,
                                   c, a.z_limit(), h, opts);
  return w.scaled *
         std::exp(w.log_scale + a.log_norm + b.log_norm) / (2.0 * a.alpha);
}

}  // namespace rovib
