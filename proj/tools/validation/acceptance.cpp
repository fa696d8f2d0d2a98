#include "acceptance.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>

#include "golden.hpp"
#include "rovib/rovib.hpp"
#include "tables.hpp"

namespace rovib::tools {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  PotentialParams h2;
  PotentialParams ar2;
};

const Channel& s_wave() {
  static const Channel ch = Channel::s_wave();
  return ch;
}

Channel matched(const PotentialParams& p, int l) {
  return Channel::make(p, l, CoeffProvenance::derivative_matched);
}

Outcome ground_state_table(const Context& ctx) {
  const auto start = Clock::now();
  double worst = 0.0;
  std::string values;
  for (const auto& row : golden::kHydrogenGroundStates) {
    const double e = nr_energy(with_row(ctx.h2, row), 0, s_wave()).value_cm();
    worst = std::max(worst, std::abs(e - row.energy_cm));
    values += fmt::format("{}{:.3f}", values.empty() ? "" : ", ", e);
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {worst <= 0.02 && secs < 1.0,
          fmt::format("E00 = [{}] cm-1, max |dev| = {:.4f} (tol 0.02), runtime {:.1e} s (limit 1 s)",
                      values, worst, secs)};
}

Outcome transition_table(const Context& ctx) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::size_t i = 0; i < golden::kArgonTransitions.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const double de = ev_to_cm(transition(ctx.ar2, n));
    worst = std::max(worst, std::abs(de - golden::kArgonTransitions[i]));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {worst <= 0.02 && secs < 1.0,
          fmt::format("n = 1..7, max |dev| = {:.4f} cm-1 (tol 0.02), runtime {:.1e} s (limit 1 s)",
                      worst, secs)};
}

Outcome level_count(const Context& ctx) {
  const double nmax = nr_n_max(ctx.ar2);
  const double at_one = nr_n_max(ctx.ar2.depth(), 1.0, ctx.ar2.alpha,
                                 ctx.ar2.molecule.hbar2_over_2mu());
  const int count = bound_level_count(at_one);
  return {std::abs(nmax - golden::kArgonNMax) <= 0.01 && count == 0,
          fmt::format("Ar2 n_max = {:.5f} (want 6.689 +- 0.01); sigma_eff = 1: "
                      "n_max = {:.5f}, bound levels = {}",
                      nmax, at_one, count)};
}

Outcome swave_table(const Context& ctx) {
  double worst_ar = 0.0, worst_h = 0.0;
  for (int n = 0; n < 6; ++n) {
    worst_ar = std::max(worst_ar,
                        std::abs(nr_energy(ctx.ar2, n, s_wave()).value_cm() -
                                 golden::kArgonSWave[n]));
    worst_h = std::max(worst_h,
                       std::abs(nr_energy(ctx.h2, n, s_wave()).value_cm() -
                                golden::kHydrogenSWave[n]));
  }
  return {worst_ar <= 0.05 && worst_h <= 0.5,
          fmt::format("max |dev| Ar2 = {:.5f} (tol 0.05), H2 = {:.4f} (tol 0.5)",
                      worst_ar, worst_h)};
}

Outcome rotational_levels(const Context& ctx) {
  const GridSpec grid = default_grid(ctx.h2);
  double worst = 0.0, worst_paper = 0.0;
  std::string where;
  for (int l = 0; l <= 2; ++l) {
    const Channel ch = l == 0 ? s_wave() : matched(ctx.h2, l);
    const Channel paper =
        l == 0 ? s_wave()
               : Channel::make(ctx.h2, l, CoeffProvenance::paper_formula);
    FdOptions opts;
    opts.count = 5;
    const auto fd = fd_eigenvalues(ctx.h2, ch, true, grid, opts);
    for (int n = 0; n <= 3; ++n) {
      const double spacing = ev_to_cm(fd.energies[n + 1] - fd.energies[n]);
      const double ref = ev_to_cm(fd.energies[n]);
      const double dev = std::abs(nr_energy(ctx.h2, n, ch).value_cm() - ref);
      const double dev_paper =
          std::abs(nr_energy(ctx.h2, n, paper).value_cm() - ref);
      if (dev / spacing > worst) {
        worst = dev / spacing;
        where = fmt::format("(n={}, l={})", n, l);
      }
      worst_paper = std::max(worst_paper, dev_paper / spacing);
    }
  }
  return {worst < 0.01,
          fmt::format("H2 n<=3, l<=2: max |matched - fd| = {:.3f}% of spacing "
                      "at {} (tol 1%); paper-formula coefficients reach {:.2f}% "
                      "(reported only)",
                      100.0 * worst, where, 100.0 * worst_paper)};
}

Outcome swave_exactness(const Context& ctx) {
  FdOptions opts;
  opts.count = 6;
  const auto fd =
      fd_eigenvalues(ctx.ar2, s_wave(), true, default_grid(ctx.ar2), opts);
  std::vector<EnergyLevel> levels;
  for (int n = 0; n < 6; ++n) levels.push_back(nr_energy(ctx.ar2, n, s_wave()));
  Tolerance tol;
  tol.abs_cm = 0.1;
  const auto rep = compare_report(levels, fd.energies, tol);
  return {rep.pass,
          fmt::format("Ar2 n=0..5: max |closed form - fd| = {:.2e} cm-1 (tol "
                      "0.1), refinement shift {:.1e} cm-1",
                      rep.max_abs_cm, fd.refinement_shift_cm)};
}

Outcome relativistic_limit(const Context& ctx) {
  double worst = 0.0, worst_res = 0.0;
  bool all_found = true;
  for (int n = 0; n <= 3; ++n) {
    const auto roots = solve_relativistic(ctx.h2, n, s_wave());
    bool found = false;
    for (const auto& r : roots) {
      const double res =
          nu_residual(ctx.h2, n, s_wave(), r.value, Regime::relativistic);
      worst_res = std::max(worst_res, std::isnan(res) ? INFINITY : res);
      if (r.kind != RootKind::physical) continue;
      found = true;
      worst = std::max(
          worst,
          std::abs(r.value_cm() - nr_energy(ctx.h2, n, s_wave()).value_cm()));
    }
    all_found = all_found && found;
  }
  return {all_found && worst <= 1e-3 && worst_res < 1e-9,
          fmt::format("H2 n=0..3: max |(E_R - mc^2) - E_NR| = {:.2e} cm-1 (tol "
                      "1e-3); max energy-relation residual {:.1e} (tol 1e-9)",
                      worst, worst_res)};
}

// Integral of g(r)^2 over r > 0, done directly in r.
double r_space_norm(const RadialState& st) {
  const double r_hi = 40.0 / (st.alpha * st.k_exp) + 1.0;
  quad::Options opts;
  opts.rel_tol = 1e-12;
  opts.initial_panels = 400;
  opts.max_panels = 200000;
  const auto res = quad::integrate(
      [&](double r) {
        const double g = reduced_value(st, r);
        return g * g;
      },
      0.0, r_hi, opts);
  return res.value;
}

Outcome normalization(const Context& ctx) {
  double worst_norm = 0.0, worst_beta = 0.0;
  std::string ratios;
  for (const auto* p : {&ctx.h2, &ctx.ar2}) {
    for (int l = 0; l <= 1; ++l) {
      const Channel ch = l == 0 ? s_wave() : matched(*p, l);
      for (int n = 0; n <= 3; ++n) {
        const auto st = make_state(nr_energy(*p, n, ch));
        worst_norm = std::max(worst_norm, std::abs(r_space_norm(st) - 1.0));
        if (n == 0) {
          const double k2 = 2.0 * st.k_exp, s2 = 2.0 * st.s_exp + 2.0;
          const double log_n2 = std::log(2.0 * st.alpha) +
                                std::lgamma(k2 + s2) - std::lgamma(k2) -
                                std::lgamma(s2);
          const double beta_n = std::exp(0.5 * log_n2);
          worst_beta = std::max(
              worst_beta, std::abs(st.norm_quadrature - beta_n) / beta_n);
        }
        if (l == 0 && n <= 1 && st.norm_series) {
          ratios += fmt::format(" {}(n={}):{:.6g}",
                                p == &ctx.h2 ? "H2" : "Ar2", n,
                                *st.norm_series / st.norm_quadrature);
        }
      }
    }
  }
  return {worst_norm <= 1e-8 && worst_beta <= 1e-10,
          fmt::format("max |int R^2 r^2 dr - 1| = {:.1e} (tol 1e-8); n=0 vs Beta "
                      "integral {:.1e} (tol 1e-10); series/quadrature N ratio:{}",
                      worst_norm, worst_beta, ratios)};
}

// Weighted inner product of two Jacobi polynomials on [-1, 1], with the
// endpoint singularities of the weight absorbed by power substitutions.
double jacobi_inner(int m, int n, double mu, double nu) {
  const auto f = [&](double s) {
    const double x = 1.0 - 2.0 * s;
    return jacobi_poly(m, mu, nu, x) * jacobi_poly(n, mu, nu, x);
  };
  quad::Options opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 1e-15;
  // s in (0, 1/2): s = u^(1/(mu+1)); weight s^mu ds = du / (mu + 1).
  const double pa = 1.0 / (mu + 1.0);
  const auto left = quad::integrate(
      [&](double u) {
        const double s = std::pow(u, pa);
        return pa * std::pow(1.0 - s, nu) * f(s);
      },
      0.0, std::pow(0.5, mu + 1.0), opts);
  const double pb = 1.0 / (nu + 1.0);
  const auto right = quad::integrate(
      [&](double v) {
        const double s = 1.0 - std::pow(v, pb);
        return pb * std::pow(s, mu) * f(s);
      },
      0.0, std::pow(0.5, nu + 1.0), opts);
  return std::pow(2.0, mu + nu + 1.0) * (left.value + right.value);
}

Outcome special_functions(const Context&) {
  const std::vector<std::pair<double, double>> orders{
      {0.0, 0.0}, {0.5, -0.5}, {-0.5, -0.5}, {2.5, 1.25}, {10.0, 3.0}};
  double worst = 0.0;
  for (const auto& [mu, nu] : orders) {
    for (int n = 0; n <= 20; ++n) {
      double peak = 0.0;
      std::vector<double> rec, hyp;
      for (int i = -9; i <= 9; ++i) {
        const double x = 0.1 * i;
        rec.push_back(jacobi_poly(n, mu, nu, x));
        hyp.push_back(jacobi_hypergeometric(n, mu, nu, x));
        peak = std::max(peak, std::abs(hyp.back()));
      }
      for (std::size_t i = 0; i < rec.size(); ++i) {
        const double den = std::max(std::abs(hyp[i]), 1e-3 * peak);
        worst = std::max(worst, std::abs(rec[i] - hyp[i]) / den);
      }
    }
  }
  double worst_orth = 0.0;
  for (const auto& [mu, nu] : {std::pair{0.0, 0.0}, std::pair{1.5, 2.5},
                               std::pair{-0.5, 0.5}}) {
    std::vector<double> h(9);
    for (int n = 0; n <= 8; ++n) h[n] = jacobi_inner(n, n, mu, nu);
    for (int m = 0; m <= 8; ++m) {
      for (int n = 0; n < m; ++n) {
        worst_orth = std::max(worst_orth, std::abs(jacobi_inner(m, n, mu, nu)) /
                                              std::sqrt(h[m] * h[n]));
      }
    }
  }
  return {worst <= 1e-12 && worst_orth < 1e-8,
          fmt::format("recurrence vs hypergeometric: max rel dev {:.1e} (tol "
                      "1e-12); orthogonality max {:.1e} (tol 1e-8)",
                      worst, worst_orth)};
}

int dense_node_count(const RadialState& st, const GridSpec& grid) {
  const int samples = 20000;
  std::vector<double> g(samples);
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = grid.r_min + (grid.r_max - grid.r_min) * (i + 0.5) / samples;
    g[i] = reduced_value(st, r);
    peak = std::max(peak, std::abs(g[i]));
  }
  int nodes = 0, prev = 0;
  for (double v : g) {
    if (std::abs(v) <= 1e-12 * peak) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (prev != 0 && s != prev) ++nodes;
    prev = s;
  }
  return nodes;
}

Outcome node_counts(const Context& ctx) {
  int checked = 0;
  std::string bad;
  for (const auto* p : {&ctx.h2, &ctx.ar2}) {
    const GridSpec grid = default_grid(*p);
    for (int l = 0; l <= 2; ++l) {
      const Channel ch = l == 0 ? s_wave() : matched(*p, l);
      for (int n = 0; n <= 5; ++n) {
        const auto st = make_state(nr_energy(*p, n, ch));
        const int nodes = dense_node_count(st, grid);
        ++checked;
        if (nodes != n) {
          bad += fmt::format(" {}(n={},l={}):{}", p == &ctx.h2 ? "H2" : "Ar2",
                             n, l, nodes);
        }
      }
    }
  }
  return {bad.empty(), bad.empty()
                           ? fmt::format("{} states, node count = n for all",
                                         checked)
                           : fmt::format("mismatches:{}", bad)};
}

Outcome figure_data(const Context& ctx) {
  const auto by_n = scan_n(ctx.ar2);
  const double de = ctx.ar2.molecule.dissociation_energy_cm;
  const bool n_ok = by_n.size() == 7 && strictly_increasing(by_n) &&
                    by_n.back().energy_cm <= de;
  const auto by_de = scan_de(ctx.ar2, 50.0, 150.0, 101);
  const bool de_ok = strictly_increasing(by_de);
  return {n_ok && de_ok,
          fmt::format("scan-n: {} rows, E(last) = {:.4f} <= D_e = {}; scan-de "
                      "50..150 monotone: {}",
                      by_n.size(), by_n.empty() ? 0.0 : by_n.back().energy_cm,
                      de, de_ok ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* title;
  bool needs_oracle;
  Outcome (*run)(const Context&);
};

constexpr Criterion kCriteria[] = {
    {1, "H2 ground states for four parameter sets", false, ground_state_table},
    {2, "Ar2 s-wave transitions", false, transition_table},
    {3, "Ar2 n_max and sigma_eff = 1 limit", false, level_count},
    {4, "l = 0 levels for Ar2 and H2", false, swave_table},
    {5, "H2 l != 0 levels against finite differences", true, rotational_levels},
    {6, "Ar2 s-wave closed form against finite differences", true,
     swave_exactness},
    {7, "relativistic roots reduce to the NR levels", false,
     relativistic_limit},
    {8, "normalization", false, normalization},
    {9, "Jacobi polynomials", false, special_functions},
    {10, "node counts", false, node_counts},
    {11, "figure data monotonicity", false, figure_data},
};

}  // namespace

bool SuiteReport::pass() const noexcept {
  for (const auto& r : results) {
    if (!r.skipped && !r.pass) return false;
  }
  return true;
}

SuiteReport run_acceptance(const Registry& registry,
                           const SuiteOptions& options) {
  const auto suite_start = Clock::now();
  SuiteReport report;
  Context ctx{registry.find("H2"), registry.find("Ar2")};
  for (const auto& c : kCriteria) {
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    if (options.skip_oracle && c.needs_oracle) {
      r.skipped = true;
      r.pass = true;
      r.detail = "skipped (oracle disabled)";
      report.results.push_back(r);
      continue;
    }
    const auto start = Clock::now();
    try {
      const Outcome o = c.run(ctx);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report.results.push_back(r);
  }
  report.seconds =
      std::chrono::duration<double>(Clock::now() - suite_start).count();
  return report;
}

std::string format_line(const CriterionResult& r) {
  const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
  return fmt::format("[{}] {:>2} {} ({:.3f} s): {}", tag, r.id, r.title,
                     r.seconds, r.detail);
}

}  // namespace rovib::tools
