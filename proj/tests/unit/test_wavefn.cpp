#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rovib/errors.hpp"
#include "rovib/potential.hpp"
#include "rovib/quadrature.hpp"
#include "rovib/spectrum.hpp"
#include "rovib/wavefn.hpp"

using namespace rovib;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PotentialParams h2() { return Registry::builtin().find("H2"); }
PotentialParams ar2() { return Registry::builtin().find("Ar2"); }

double r_start(const RadialState& s) {
  return pole_radius(s.level.params).value_or(0.0) + 1e-9;
}

// Integral of f over r in (r0, infinity), split into unit-width slabs until
// the contribution is negligible.
template <class F>
double integrate_r(F f, double r0, double width) {
  double total = 0.0;
  for (double a = r0;; a += width) {
    const double piece = quad::integrate(f, a, a + width, {.rel_tol = 1e-12}).value;
    total += piece;
    if (a > r0 + 5 * width && std::abs(piece) < 1e-16 * std::abs(total)) break;
    if (a > r0 + 2000 * width) break;
  }
  return total;
}

}  // namespace

TEST_CASE("states are normalized in r-space") {
  for (const auto& p : {h2(), ar2()}) {
    for (int n : {0, 1, 3}) {
      const auto s = make_state(nr_energy(p, n, Channel::s_wave()));
      const double w = 0.25 * p.molecule.equilibrium_radius;
      const double norm = integrate_r(
          [&](double r) { return std::pow(reduced_value(s, r), 2); }, r_start(s), w);
      CHECK_THAT(norm, WithinAbs(1.0, 1e-9));
    }
  }
}

TEST_CASE("ground-state norm integral is a Beta function") {
  for (const auto& p : {h2(), ar2()}) {
    const auto s = make_state(nr_energy(p, 0, Channel::s_wave()));
    const double a = 2 * s.k_exp, b = 2 * s.s_exp + 2;
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    const auto ni = norm_integral(s.k_exp, s.s_exp, 0, s.alpha, 1.0, Branch::plus);
    CHECK(ni.converged);
    CHECK_THAT(ni.log_value, WithinAbs(log_beta - std::log(2 * s.alpha), 1e-11));
    CHECK_THAT(s.log_norm, WithinAbs(-0.5 * ni.log_value, 1e-11));
  }
}

TEST_CASE("the reduced wave function solves the radial equation") {
  for (const auto& p : {h2(), ar2()}) {
    const double h2m = p.molecule.hbar2_over_2mu();
    for (int n : {0, 2}) {
      const auto lvl = nr_energy(p, n, Channel::s_wave());
      const auto s = make_state(lvl);
      // The potential minimum, not the tabulated r_e, is where g lives.
      const double re = equilibrium_radius(p);
      for (double f : {0.8, 1.0, 1.3, 1.9}) {
        const double r = f * re, h = 1e-4 * re;
        const double g0 = reduced_value(s, r);
        const double d2 = (reduced_value(s, r + h) - 2 * g0 + reduced_value(s, r - h)) / (h * h);
        const double kin = -h2m * d2;
        const double pot = potential_value(p, r) * g0;
        const double scale = std::abs(kin) + std::abs(pot) + std::abs(lvl.value * g0);
        CHECK(std::abs(kin + pot - lvl.value * g0) < 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("node count equals the vibrational quantum number") {
  for (const auto& p : {h2(), ar2()}) {
    const int count = std::min(bound_level_count(nr_n_max(p)), 6);
    for (int n = 0; n < count; ++n) {
      CHECK(count_nodes(make_state(nr_energy(p, n, Channel::s_wave()))) == n);
    }
  }
}

TEST_CASE("overlaps") {
  const auto p = ar2();
  const auto a = make_state(nr_energy(p, 0, Channel::s_wave()));
  const auto b = make_state(nr_energy(p, 1, Channel::s_wave()));
  CHECK_THAT(overlap(a, a), WithinAbs(1.0, 1e-9));
  CHECK_THAT(overlap(b, b), WithinAbs(1.0, 1e-9));
  // Eigenstates of one Hamiltonian are orthogonal.
  CHECK(std::abs(overlap(a, b)) < 1e-8);
}

TEST_CASE("rotational states use the approximate centrifugal term") {
  const auto p = ar2();
  const auto ch = Channel::make(p, 2, CoeffProvenance::derivative_matched);
  const auto s = make_state(nr_energy(p, 1, ch));
  CHECK(s.level.l == 2);
  CHECK_THAT(overlap(s, s), WithinAbs(1.0, 1e-9));
  CHECK(count_nodes(s) == 1);
}

TEST_CASE("deformed potentials shift the wave function rigidly") {
  auto p = ar2();
  const auto base = make_state(nr_energy(p, 1, Channel::s_wave()));
  p.q = 2.5;
  const auto shifted = make_state(nr_energy(p, 1, Channel::s_wave()));
  const double d = std::log(p.q) / (2 * p.alpha);
  for (double r : {3.2, 3.759, 4.4, 5.5}) {
    CHECK_THAT(reduced_value(shifted, r + d), WithinAbs(reduced_value(base, r), 1e-8));
  }
  CHECK_FALSE(shifted.norm_series.has_value());
}

TEST_CASE("minus branch with negative q mirrors the plus branch") {
  const auto plus = ar2();
  auto minus = plus;
  minus.branch = Branch::minus;
  minus.q = -1.0;
  for (int n : {0, 2}) {
    const auto lvl = nr_energy(minus, n, Channel::s_wave());
    REQUIRE(lvl.bound);
    CHECK_THAT(lvl.value, WithinRel(nr_energy(plus, n, Channel::s_wave()).value, 1e-14));
    const auto a = make_state(nr_energy(plus, n, Channel::s_wave()));
    const auto b = make_state(lvl);
    CHECK(b.z_at(4.0) < 0.0);
    CHECK_FALSE(b.norm_series.has_value());
    CHECK_THAT(overlap(b, b), WithinAbs(1.0, 1e-9));
    CHECK(count_nodes(b) == n);
    for (double r : {3.0, 3.759, 5.0}) {
      CHECK_THAT(std::abs(reduced_value(b, r)), WithinAbs(std::abs(reduced_value(a, r)), 1e-10));
    }
  }
}

TEST_CASE("tanh-shaped wells have no closed-form bound states") {
  auto p = ar2();
  p.branch = Branch::minus;
  p.sigma = 1.6 * p.delta;
  CHECK(bound_level_count(nr_n_max(p)) == 0);
  CHECK_FALSE(nr_energy(p, 0, Channel::s_wave()).bound);
}

TEST_CASE("series normalization under the Pochhammer reading") {
  for (const auto& p : {h2(), ar2()}) {
    const auto s = make_state(nr_energy(p, 0, Channel::s_wave()));
    REQUIRE(s.norm_series.has_value());
    const auto series = norm_series(s);
    CHECK(series.converged);
    CHECK(*s.norm_series == series.value);
    // This reading of the closed-form series carries an extra Gamma(2K).
    const double log_ratio = std::log(series.value) - s.log_norm;
    CHECK_THAT(log_ratio, WithinAbs(0.5 * std::lgamma(2 * s.k_exp), 1e-6));
  }
}

TEST_CASE("evaluation and construction errors") {
  const auto p = ar2();
  const auto s = make_state(nr_energy(p, 0, Channel::s_wave()));
  CHECK_THROWS_AS(reduced_value(s, 0.0), InputError);
  CHECK_THAT(radial_value(s, 4.0), WithinRel(reduced_value(s, 4.0) / 4.0, 1e-15));
  CHECK(reduced_value(s, 400.0) == 0.0);
  const int count = bound_level_count(nr_n_max(p));
  CHECK_THROWS_AS(make_state(nr_energy(p, count, Channel::s_wave())), InvalidStateError);
  CHECK_THROWS_AS(norm_integral(0.0, 1.0, 0, 1.0, 1.0, Branch::plus), InvalidStateError);
}
