#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rovib/errors.hpp"
#include "rovib/nu_engine.hpp"
#include "rovib/specfun.hpp"

using namespace rovib;
using namespace rovib::nu;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Input of the physical reduction with c3 = q = 1, where c8 = K^2 and
// c9 = S^2. Q is chosen so that level n satisfies the energy relation.
NUInput solvable_input(double k, double s, int n) {
  const double q = 1.0;
  const double qq = -(n * n + (2 * n + 1) / 2.0 + (2 * n + 1) * (s + k) + 2 * k * s);
  return {.c1 = 1.0,
          .c2 = q,
          .c3 = q,
          .b1 = q * q * k * k + s * s - q * qq - q * q / 4.0,
          .b2 = 2 * q * k * k - qq,
          .b3 = k * k};
}

double ode_residual(const NUInput& in, const WaveExponents& w, int n, double z) {
  auto g = [&](double x) {
    return std::pow(x, w.phi_z) * std::pow(1 - in.c3 * x, w.phi_w) *
           jacobi_poly(n, w.jacobi_mu, w.jacobi_nu, 1 - 2 * in.c3 * x);
  };
  const double h = 1e-4 * z;
  const double g0 = g(z), gp = g(z + h), gm = g(z - h);
  const double d1 = (gp - gm) / (2 * h);
  const double d2 = (gp - 2 * g0 + gm) / (h * h);
  const double s = z * (1 - in.c3 * z);
  const double t1 = s * s * d2;
  const double t2 = s * (in.c1 - in.c2 * z) * d1;
  const double t3 = (-in.b1 * z * z + in.b2 * z - in.b3) * g0;
  return std::abs(t1 + t2 + t3) / (std::abs(t1) + std::abs(t2) + std::abs(t3));
}

}  // namespace

TEST_CASE("parametric constants follow their definitions") {
  const NUInput in{.c1 = 0.7, .c2 = 1.9, .c3 = 1.3, .b1 = 2.2, .b2 = -0.4, .b3 = 0.8};
  const auto c = derive_constants(in);
  CHECK(c.c4 == 0.5 * (1 - 0.7));
  CHECK(c.c5 == 0.5 * (1.9 - 2 * 1.3));
  CHECK_THAT(c.c6, WithinRel(c.c5 * c.c5 + 2.2, 1e-15));
  CHECK_THAT(c.c7, WithinRel(2 * c.c4 * c.c5 + 0.4, 1e-15));
  CHECK_THAT(c.c8, WithinRel(c.c4 * c.c4 + 0.8, 1e-15));
  CHECK_THAT(c.c9, WithinRel(1.3 * c.c7 + 1.3 * 1.3 * c.c8 + c.c6, 1e-14));
  CHECK_THAT(c.c12, WithinRel(c.c4 + std::sqrt(c.c8), 1e-15));
  CHECK(c.real());
}

TEST_CASE("inadmissible sets are flagged, not thrown") {
  const auto c = derive_constants({.c1 = 1, .c2 = 1, .c3 = 1, .b1 = 0, .b2 = 0, .b3 = -1});
  CHECK(c.has(kNegativeC8));
  CHECK_FALSE(c.real());
  CHECK(std::isnan(c.c10));
  CHECK(c.describe().find("c8 < 0") != std::string::npos);
  CHECK_THROWS_AS(key_polynomials(c), InadmissibleError);
  CHECK_THROWS_AS(energy_relation_residual(c, 0), InadmissibleError);
  CHECK_THROWS_AS(wave_exponents(c), InvalidStateError);

  const auto d = derive_constants({.c1 = 1, .c2 = 1, .c3 = 1, .b1 = -10, .b2 = 0, .b3 = 1});
  CHECK(d.has(kNegativeC9));

  // Negative c3 drives c11 below -1.
  const auto e = derive_constants({.c1 = 1, .c2 = -1, .c3 = -1, .b1 = 3, .b2 = 0, .b3 = 1});
  REQUIRE(e.real());
  CHECK(e.has(kC11AtMostMinusOne));
  CHECK_THROWS_AS(wave_exponents(e), InvalidStateError);

  CHECK_THROWS_AS(derive_constants({.c1 = 1, .c2 = 1, .c3 = 0, .b1 = 0, .b2 = 0, .b3 = 0}),
                  InputError);
  CHECK(derive_constants(solvable_input(1.5, 2.0, 0)).admissible());
  CHECK(derive_constants(solvable_input(1.5, 2.0, 0)).describe() == "admissible");
}

TEST_CASE("every candidate pi makes the discriminant a perfect square") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 30; ++i) {
    const NUInput in{.c1 = u(rng), .c2 = u(rng), .c3 = u(rng),
                     .b1 = u(rng), .b2 = -u(rng), .b3 = u(rng)};
    const auto c = derive_constants(in);
    REQUIRE(c.real());
    for (const auto& p : candidate_polynomials(c)) {
      for (double z : {0.05, 0.3, 0.61}) {
        // (pi - (sigma' - tau~)/2)^2 == ((sigma' - tau~)/2)^2 - sigma~ + k sigma
        const double half = c.c4 + c.c5 * z;
        const double pi = p.pi_const + p.pi_slope * z;
        const double sig = z * (1 - in.c3 * z);
        const double sig_t = -in.b1 * z * z + in.b2 * z - in.b3;
        const double lhs = (pi - half) * (pi - half);
        const double rhs = half * half - sig_t + p.k * sig;
        CHECK_THAT(lhs, WithinAbs(rhs, 1e-12 * (1 + std::abs(rhs))));
      }
      CHECK_THAT(p.tau_slope, WithinAbs(-in.c2 + 2 * p.pi_slope, 1e-15));
      CHECK(p.physical == (p.tau_slope < 0));
    }
    const auto key = key_polynomials(c);
    CHECK(key.k == candidate_polynomials(c)[0].k);
    CHECK(key.physical);
  }
}

TEST_CASE("energy relation equals lambda_n - lambda of the key polynomial") {
  const NUInput in{.c1 = 1, .c2 = 1.4, .c3 = 1.4, .b1 = 5.0, .b2 = 6.0, .b3 = 2.5};
  const auto c = derive_constants(in);
  const auto p = key_polynomials(c);
  for (int n = 0; n < 8; ++n) {
    const double lambda = p.k + p.pi_slope;
    const double lambda_n = -n * p.tau_slope + n * (n - 1.0) * in.c3;
    CHECK_THAT(energy_relation_residual(c, n),
               WithinAbs(lambda_n - lambda, 1e-12 * (1 + std::abs(lambda))));
  }
}

TEST_CASE("energy relation has constant second difference 2 c3") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.2, 2.5);
  for (int i = 0; i < 20; ++i) {
    const NUInput in{.c1 = 1, .c2 = u(rng), .c3 = u(rng), .b1 = u(rng), .b2 = u(rng),
                     .b3 = u(rng)};
    const auto c = derive_constants(in);
    if (!c.real()) continue;
    for (int n = 0; n < 10; ++n) {
      const double d2 = energy_relation_residual(c, n + 2) -
                        2 * energy_relation_residual(c, n + 1) +
                        energy_relation_residual(c, n);
      CHECK_THAT(d2, WithinAbs(2 * in.c3, 1e-10));
    }
  }
  CHECK_THROWS_AS(energy_relation_residual(derive_constants(solvable_input(1, 1, 0)), -1),
                  InputError);
}

TEST_CASE("terms sum to the residual and normalize by the largest") {
  const auto c = derive_constants(solvable_input(3.0, 4.0, 2));
  const auto t = energy_relation_terms(c, 2);
  CHECK(t.residual() == energy_relation_residual(c, 2));
  CHECK(t.normalized() < 1e-14);
  const auto off = energy_relation_terms(c, 3);
  CHECK(off.normalized() > 1e-3);
}

TEST_CASE("wave function solves the hypergeometric-type equation") {
  for (int n : {0, 1, 3}) {
    for (auto [k, s] : {std::pair{0.8, 1.3}, {2.5, 4.0}, {6.0, 9.5}}) {
      const auto in = solvable_input(k, s, n);
      const auto c = derive_constants(in);
      REQUIRE(c.admissible());
      REQUIRE(std::abs(energy_relation_residual(c, n)) < 1e-10);
      const auto w = wave_exponents(c);
      CHECK_THAT(w.jacobi_mu, WithinRel(2 * k, 1e-14));
      CHECK_THAT(w.jacobi_nu, WithinRel(2 * s, 1e-14));
      CHECK_THAT(w.phi_z, WithinRel(k, 1e-14));
      CHECK_THAT(w.phi_w, WithinRel(s + 0.5, 1e-14));
      for (double z : {0.1, 0.35, 0.7}) CHECK(ode_residual(in, w, n, z) < 1e-6);

      // The neighbouring level is not a solution for this input.
      const auto wrong = solvable_input(k, s, n + 1);
      CHECK(ode_residual(wrong, wave_exponents(derive_constants(wrong)), n, 0.35) > 1e-4);
    }
  }
}

TEST_CASE("phi'/phi equals pi/sigma and rho'/rho matches the weight equation") {
  const NUInput in{.c1 = 1, .c2 = 1.7, .c3 = 1.7, .b1 = 9.0, .b2 = 8.0, .b3 = 3.0};
  const auto c = derive_constants(in);
  const auto p = key_polynomials(c);
  const auto w = wave_exponents(c);
  for (double z : {0.05, 0.2, 0.45}) {
    const double sig = z * (1 - in.c3 * z);
    const double phi_log = w.phi_z / z - in.c3 * w.phi_w / (1 - in.c3 * z);
    CHECK_THAT(phi_log, WithinRel((p.pi_const + p.pi_slope * z) / sig, 1e-12));
    // (sigma rho)' = tau rho
    const double rho_log = w.rho_z / z - in.c3 * w.rho_w / (1 - in.c3 * z);
    const double lhs = (1 - 2 * in.c3 * z) + sig * rho_log;
    CHECK_THAT(lhs, WithinRel(p.tau_const + p.tau_slope * z, 1e-12));
  }
}
