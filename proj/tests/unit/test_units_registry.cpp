#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "rovib/errors.hpp"
#include "rovib/registry.hpp"
#include "rovib/units.hpp"

using namespace rovib;
using Catch::Matchers::WithinRel;

TEST_CASE("conversion factors are the fixed published values") {
  STATIC_REQUIRE(PhysicalConstants::hbar_c == 1973.29);
  STATIC_REQUIRE(PhysicalConstants::amu_to_ev == 931.502e6);
  STATIC_REQUIRE(PhysicalConstants::invcm_to_ev == 1.23985e-4);
}

TEST_CASE("convert_energy") {
  CHECK(convert_energy(1.0, "cm-1", "eV") == 1.23985e-4);
  CHECK(convert_energy(0.0, EnergyUnit::electron_volt, EnergyUnit::inverse_cm) == 0.0);
  CHECK_THAT(convert_energy(2.5, "MeV", "eV"), WithinRel(2.5e6, 1e-15));
  for (double x : {1e-6, 0.37, 4.75, 1234.5}) {
    const double back = convert_energy(convert_energy(x, "eV", "cm^-1"), "cm^-1", "eV");
    CHECK_THAT(back, WithinRel(x, 1e-15));
  }
  CHECK_THROWS_AS(convert_energy(1.0, "kcal", "eV"), InputError);
  CHECK_THROWS_AS(parse_energy_unit(""), InputError);
}

TEST_CASE("reduced_mass") {
  CHECK(reduced_mass(3.0, 3.0) == 1.5);
  CHECK_THAT(reduced_mass(1.00794, 1.00794), WithinRel(0.50397, 1e-12));
  CHECK(reduced_mass(1.0, 39.948) == reduced_mass(39.948, 1.0));
  CHECK_THROWS_AS(reduced_mass(0.0, 1.0), InputError);
  CHECK_THROWS_AS(reduced_mass(1.0, -2.0), InputError);
}

TEST_CASE("built-in registry holds the tabulated molecules") {
  const auto reg = Registry::builtin();
  const auto& h2 = reg.find("H2");
  CHECK(h2.molecule.dissociation_energy_cm == 38281.0);
  CHECK(h2.molecule.equilibrium_radius == 0.7414);
  CHECK(h2.molecule.reduced_mass == 0.50407);
  const auto& ar = reg.find("Ar2");
  CHECK(ar.molecule.dissociation_energy_cm == 99.55);
  CHECK(ar.molecule.equilibrium_radius == 3.759);
  CHECK(ar.molecule.reduced_mass == 19.9812);
  CHECK_THROWS_AS(reg.find("Xe2"), NotFoundError);
  for (const auto& p : reg.entries()) CHECK_NOTHROW(p.validate());
}

TEST_CASE("derived molecular quantities") {
  const auto& h2 = Registry::builtin().find("H2").molecule;
  const long double hc = 1973.29L, mc2 = 0.50407L * 931.502e6L;
  CHECK_THAT(h2.hbar2_over_2mu(),
             WithinRel(static_cast<double>(hc * hc / (2.0L * mc2)), 1e-14));
  CHECK_THAT(h2.dissociation_energy(), WithinRel(38281.0 * 1.23985e-4, 1e-15));
  CHECK_THAT(h2.rest_energy(), WithinRel(static_cast<double>(mc2), 1e-15));
}

TEST_CASE("potential parameter invariants") {
  auto p = Registry::builtin().find("H2");
  CHECK_THAT(p.sigma_eff(), WithinRel(426.826 / 463.102, 1e-15));
  const double s = p.sigma_eff();
  CHECK_THAT(p.depth(), WithinRel(38281.0 * 1.23985e-4 / ((1 - s) * (1 - s)), 1e-14));
  auto bad = p;
  bad.delta = bad.sigma;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = p;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = p;
  bad.q = 0.0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = p;
  bad.delta = 0.0;
  CHECK_THROWS_AS(bad.validate(), InputError);
}

namespace {

const char* kGood = R"(# sample
[CO]
de_cm = 90544
re_angstrom = 1.128
mu_amu = 6.8606
sigma = 0.5
delta = 1
alpha_inv_angstrom = 1.2
q = 1.5
branch = minus

[H2]  ; overrides nothing, just a second entry
de_cm = 38281
re_angstrom = 0.7414
mu_amu = 0.50407
sigma = 426.826
delta = 463.102
alpha_inv_angstrom = 0.9327
)";

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return ParseError(0, "", "");
}

}  // namespace

TEST_CASE("registry text format") {
  const auto reg = Registry::parse(std::string_view(kGood));
  REQUIRE(reg.entries().size() == 2);
  const auto& co = reg.find("CO");
  CHECK(co.q == 1.5);
  CHECK(co.branch == Branch::minus);
  CHECK(co.molecule.reduced_mass == 6.8606);
  CHECK(reg.find("H2").branch == Branch::plus);
  CHECK(reg.find("H2").q == 1.0);
}

TEST_CASE("registry errors name the line and field") {
  SECTION("missing mandatory field") {
    const auto e = parse_error_of([] {
      Registry::parse(std::string_view("[X]\nde_cm = 1\nre_angstrom = 1\nmu_amu = 1\n"
                                       "sigma = 0.5\ndelta = 1\n"));
    });
    CHECK(e.field() == "alpha_inv_angstrom");
    CHECK(e.line() == 1);
  }
  SECTION("malformed number") {
    const auto e = parse_error_of(
        [] { Registry::parse(std::string_view("[X]\nde_cm = 12abc\n")); });
    CHECK(e.field() == "de_cm");
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  SECTION("unknown key") {
    const auto e = parse_error_of(
        [] { Registry::parse(std::string_view("[X]\n\nwidth = 3\n")); });
    CHECK(e.field() == "width");
    CHECK(e.line() == 3);
  }
  SECTION("duplicate key") {
    const auto e = parse_error_of(
        [] { Registry::parse(std::string_view("[X]\nsigma = 1\nsigma = 2\n")); });
    CHECK(e.field() == "sigma");
    CHECK(e.line() == 3);
  }
  SECTION("key before any section") {
    const auto e =
        parse_error_of([] { Registry::parse(std::string_view("sigma = 1\n")); });
    CHECK(e.line() == 1);
  }
  SECTION("bad branch label") {
    std::string text(kGood);
    text.replace(text.find("minus"), 5, "sideways");
    const auto e = parse_error_of([&] { Registry::parse(std::string_view(text)); });
    CHECK(e.field() == "branch");
  }
  SECTION("invariant violation is reported against the section") {
    std::string text(kGood);
    text.replace(text.find("delta = 1\n"), 10, "delta = 0.5\n");
    CHECK_THROWS_AS(Registry::parse(std::string_view(text)), ParseError);
  }
}

TEST_CASE("registry files") {
  const auto dir = std::filesystem::temp_directory_path() / "rovib_registry_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "molecules.ini";
  {
    std::ofstream f(path);
    f << kGood;
  }
  CHECK(load_registry(path).contains("CO"));
  CHECK_THROWS_AS(Registry::load(dir / "missing.ini"), NotFoundError);

  ::setenv("ROVIB_REGISTRY", path.c_str(), 1);
  CHECK(Registry::load_default().contains("CO"));
  ::unsetenv("ROVIB_REGISTRY");
  CHECK_FALSE(Registry::load_default().contains("CO"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("adding entries validates and replaces by name") {
  auto reg = Registry::builtin();
  auto p = reg.find("H2");
  p.sigma = 100.0;
  reg.add(p);
  CHECK(reg.find("H2").sigma == 100.0);
  CHECK(reg.entries().size() == Registry::builtin().entries().size());
  p.alpha = -1.0;
  CHECK_THROWS_AS(reg.add(p), InputError);
}
