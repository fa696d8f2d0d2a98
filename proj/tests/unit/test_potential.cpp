#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rovib/errors.hpp"
#include "rovib/potential.hpp"
#include "rovib/registry.hpp"

using namespace rovib;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PotentialParams h2() { return Registry::builtin().find("H2"); }
PotentialParams ar2() { return Registry::builtin().find("Ar2"); }

// Straight long double transcription of D (1 - sigma_eff coth_q)^2.
long double potential_ld(const PotentialParams& p, long double r) {
  const long double s = p.branch == Branch::plus ? 1.0L : -1.0L;
  const long double e = std::exp(-2.0L * p.alpha * r);
  const long double coth = (1.0L + s * p.q * e) / (1.0L - s * p.q * e);
  const long double se = static_cast<long double>(p.sigma) / p.delta;
  const long double d = p.molecule.dissociation_energy_cm * 1.23985e-4L /
                        ((1.0L - se) * (1.0L - se));
  return d * (1.0L - se * coth) * (1.0L - se * coth);
}

double golden_minimum(const PotentialParams& p, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  while (b - a > 1e-13) {
    if (potential_value(p, c) < potential_value(p, d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("potential matches an extended-precision transcription") {
  for (const auto& base : {h2(), ar2()}) {
    for (double q : {0.5, 1.0, 2.0}) {
      auto p = base;
      p.q = q;
      const double r0 = pole_radius(p).value_or(0.0);
      for (double f : {0.05, 0.3, 1.0, 1.7, 3.0, 8.0}) {
        const double r = r0 + f * p.molecule.equilibrium_radius;
        const double ref = static_cast<double>(potential_ld(p, r));
        CHECK_THAT(potential_value(p, r), WithinRel(ref, 1e-12));
      }
    }
  }
}

TEST_CASE("potential approaches D_e at large r and zero at the minimum") {
  for (const auto& p : {h2(), ar2()}) {
    CHECK_THAT(potential_value(p, 200.0),
               WithinRel(p.molecule.dissociation_energy(), 1e-10));
    const double re = equilibrium_radius(p);
    CHECK(potential_value(p, re) < 1e-20);
  }
}

TEST_CASE("equilibrium radius agrees with direct minimization") {
  for (const auto& base : {h2(), ar2()}) {
    for (double q : {0.25, 1.0, 3.0}) {
      auto p = base;
      p.q = q;
      const double re = equilibrium_radius(p);
      const double lo = pole_radius(p).value_or(0.0) + 1e-3;
      const double found = golden_minimum(p, lo, re + 5.0);
      CHECK_THAT(found, WithinAbs(re, 1e-6));
      CHECK_THAT(potential_derivative(p, re), WithinAbs(0.0, 1e-12));
    }
  }
  auto p = h2();
  p.sigma = 2.0 * p.delta;
  CHECK_THROWS_AS(equilibrium_radius(p), DomainError);
  p.branch = Branch::minus;
  CHECK_NOTHROW(equilibrium_radius(p));
  p.sigma = 0.5 * p.delta;
  CHECK_THROWS_AS(equilibrium_radius(p), DomainError);
}

TEST_CASE("derivative agrees with a central difference") {
  for (const auto& p : {h2(), ar2()}) {
    for (double f : {0.6, 0.9, 1.2, 2.5}) {
      const double r = f * p.molecule.equilibrium_radius;
      const double h = 1e-5 * r;
      const double fd =
          (potential_value(p, r + h) - potential_value(p, r - h)) / (2 * h);
      CHECK_THAT(potential_derivative(p, r),
                 WithinAbs(fd, 1e-6 * (std::abs(fd) + p.depth())));
    }
  }
}

TEST_CASE("pole of the deformed coth") {
  auto p = ar2();
  CHECK_FALSE(pole_radius(p).has_value());
  p.q = 4.0;
  const double rp = *pole_radius(p);
  CHECK_THAT(rp, WithinRel(std::log(4.0) / (2.0 * p.alpha), 1e-15));
  CHECK_THROWS_AS(deformed_coth(rp, p.alpha, p.q, p.branch), PoleError);
  CHECK_THROWS_AS(potential_value(p, rp), PoleError);
  CHECK(std::isfinite(potential_value(p, rp * 1.01)));
  p.branch = Branch::minus;
  CHECK_FALSE(pole_radius(p).has_value());
  p.q = -4.0;
  CHECK(pole_radius(p).has_value());
}

TEST_CASE("deformed coth branches") {
  const double r = 1.3, a = 0.8;
  CHECK_THAT(deformed_coth(r, a, 1.0, Branch::plus),
             WithinRel(1.0 / std::tanh(a * r), 1e-14));
  CHECK_THAT(deformed_coth(r, a, 1.0, Branch::minus),
             WithinRel(std::tanh(a * r), 1e-14));
  // The q deformation is a shift by ln(q) / (2 alpha).
  const double q = 2.7, shift = std::log(q) / (2 * a);
  CHECK_THAT(deformed_coth(r, a, q, Branch::plus),
             WithinRel(1.0 / std::tanh(a * (r - shift)), 1e-13));
}

TEST_CASE("morse form") {
  CHECK(morse_value(2.0, 1.0, 1.5, 1.5) == 0.0);
  CHECK_THAT(morse_value(2.0, 1.0, 1.5, 1e3), WithinRel(2.0, 1e-12));
}

TEST_CASE("published centrifugal coefficients") {
  for (const auto& p : {h2(), ar2()}) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const long double s = b == Branch::plus ? 1.0L : -1.0L;
      const long double x = p.alpha * p.molecule.equilibrium_radius;
      const long double br = (1.0L - s * std::exp(-2.0L * x)) / (2.0L * x);
      const long double grow = std::exp(2.0L * x) - s;
      const long double a0 =
          1.0L - br * br * (8.0L * x / (1.0L - s * std::exp(-2.0L * x)) - 3.0L - 2.0L * x);
      const long double a1 = s * 2.0L * grow * (3.0L * br - (3.0L + 2.0L * x) * br);
      const long double a2 = grow * grow * br * br *
                             (3.0L + 2.0L * x - 4.0L * x / (1.0L - s * std::exp(-2.0L * x)));
      const auto c = pekeris_coefficients(p.alpha, p.molecule.equilibrium_radius, b);
      CHECK(c.provenance == CoeffProvenance::paper_formula);
      CHECK_THAT(c.a0, WithinRel(static_cast<double>(a0), 1e-12));
      CHECK_THAT(c.a1, WithinRel(static_cast<double>(a1), 1e-12));
      CHECK_THAT(c.a2, WithinRel(static_cast<double>(a2), 1e-12));
    }
  }
  CHECK_THROWS_AS(pekeris_coefficients(0.0, 1.0, Branch::plus), InputError);
}

TEST_CASE("matched coefficients reproduce 1/r^2 to second order") {
  for (const auto& p : {h2(), ar2()}) {
    for (double q : {0.5, 1.0, 1.5}) {
      for (Branch b : {Branch::plus, Branch::minus}) {
        const double re = p.molecule.equilibrium_radius;
        const auto c = matched_coefficients(p.alpha, re, q, b);
        CHECK(c.provenance == CoeffProvenance::derivative_matched);
        const auto res = matching_residuals(c, p.alpha, re, q, b);
        CHECK(res.value < 1e-12);
        CHECK(res.first < 1e-9);
        CHECK(res.second < 1e-9);

        // Independent check with finite differences of the ansatz itself.
        auto f = [&](double r) {
          const double y = pekeris_variable(r, p.alpha, q, b);
          return c.a0 + c.a1 * y + c.a2 * y * y;
        };
        const double h = 1e-4 * re;
        const double d1 = (f(re + h) - f(re - h)) / (2 * h);
        const double d2 = (f(re + h) - 2 * f(re) + f(re - h)) / (h * h);
        CHECK_THAT(d1, WithinRel(-2.0 / re, 1e-6));
        CHECK_THAT(d2, WithinRel(6.0 / (re * re), 1e-5));
      }
    }
  }
}

TEST_CASE("matched and published A0, A2 agree where only A1 differs") {
  const auto p = h2();
  const double re = p.molecule.equilibrium_radius;
  const auto m = matched_coefficients(p.alpha, re, 1.0, Branch::plus);
  const auto pub = pekeris_coefficients(p.alpha, re, Branch::plus);
  CHECK_THAT(pub.a0, WithinRel(m.a0, 1e-10));
  CHECK_THAT(pub.a2, WithinRel(m.a2, 1e-10));
  CHECK_FALSE(std::abs(pub.a1 - m.a1) < 1e-3 * std::abs(m.a1));
}

TEST_CASE("approximate centrifugal term") {
  const auto p = ar2();
  const double re = p.molecule.equilibrium_radius;
  const auto c = matched_coefficients(p.alpha, re, p.q, p.branch);
  CHECK(approx_centrifugal(c, 0, p, 2.0) == 0.0);
  CHECK_THAT(approx_centrifugal(c, 2, p, re), WithinRel(6.0 / (re * re), 1e-12));
  CHECK_THAT(approx_centrifugal(c, 3, p, 1.05 * re),
             WithinRel(12.0 / (1.05 * re * 1.05 * re), 1e-3));
  CHECK_THROWS_AS(approx_centrifugal(c, -1, p, re), InputError);
  CHECK_THROWS_AS(approx_centrifugal(c, 1, p, 0.0), InputError);
}

TEST_CASE("degenerate matching geometry is rejected") {
  CHECK_THROWS_AS(matched_coefficients(1.0, 1.0, 0.0, Branch::plus), InputError);
  CHECK_THROWS_AS(matched_coefficients(-1.0, 1.0, 1.0, Branch::plus), InputError);
}
