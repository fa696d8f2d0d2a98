#include "rovib/registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "rovib/errors.hpp"
#include "rovib/units.hpp"

namespace rovib {

std::string_view to_string(Branch branch) noexcept {
  return branch == Branch::plus ? "plus" : "minus";
}

Branch parse_branch(std::string_view label) {
  if (label == "plus" || label == "+") return Branch::plus;
  if (label == "minus" || label == "-") return Branch::minus;
  throw InputError("unknown branch '" + std::string(label) +
                   "' (expected plus or minus)");
}

double Molecule::dissociation_energy() const noexcept {
  return cm_to_ev(dissociation_energy_cm);
}

double Molecule::rest_energy() const noexcept {
  return reduced_mass * PhysicalConstants::amu_to_ev;
}

double Molecule::hbar2_over_2mu() const noexcept {
  constexpr double hc = PhysicalConstants::hbar_c;
  return hc * hc / (2.0 * rest_energy());
}

void Molecule::validate() const {
  if (!(dissociation_energy_cm > 0.0)) {
    throw InputError(name + ": dissociation energy must be positive");
  }
  if (!(equilibrium_radius > 0.0)) {
    throw InputError(name + ": equilibrium radius must be positive");
  }
  if (!(reduced_mass > 0.0)) {
    throw InputError(name + ": reduced mass must be positive");
  }
}

double PotentialParams::depth() const noexcept {
  const double s = sigma_eff();
  return molecule.dissociation_energy() / ((1.0 - s) * (1.0 - s));
}

void PotentialParams::validate() const {
  molecule.validate();
  if (delta == 0.0 || !std::isfinite(delta)) {
    throw InputError(molecule.name + ": delta must be finite and nonzero");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InputError(molecule.name + ": alpha must be positive");
  }
  if (q == 0.0 || !std::isfinite(q)) {
    throw InputError(molecule.name + ": q must be finite and nonzero");
  }
  if (!std::isfinite(sigma)) {
    throw InputError(molecule.name + ": sigma must be finite");
  }
  if (sigma_eff() == 1.0) {
    throw InputError(molecule.name +
                     ": sigma/delta == 1 makes the depth D diverge");
  }
}

double reduced_mass(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) {
    throw InputError("reduced_mass: masses must be positive");
  }
  return m1 * m2 / (m1 + m2);
}

Registry Registry::builtin() {
  Registry reg;
  reg.add(PotentialParams{
      .molecule = {.name = "H2",
                   .dissociation_energy_cm = 38281.0,
                   .equilibrium_radius = 0.7414,
                   .reduced_mass = 0.50407},
      .sigma = 426.826,
      .delta = 463.102,
      .alpha = 0.9327,
  });
  reg.add(PotentialParams{
      .molecule = {.name = "Ar2",
                   .dissociation_energy_cm = 99.55,
                   .equilibrium_radius = 3.759,
                   .reduced_mass = 19.9812},
      .sigma = 25.23,
      .delta = 41.75,
      .alpha = 0.6604,
  });
  return reg;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view text, std::size_t line,
                    const std::string& field) {
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw ParseError(line, field, "expected a number, got '" + buf + "'");
  }
  return v;
}

struct Section {
  std::string name;
  std::size_t header_line = 0;
  std::map<std::string, std::pair<std::string, std::size_t>> values;
};

PotentialParams build_entry(const Section& sec) {
  auto number = [&](const char* key) -> double {
    auto it = sec.values.find(key);
    if (it == sec.values.end()) {
      throw ParseError(sec.header_line, key,
                       "missing mandatory field in section [" + sec.name + "]");
    }
    return parse_number(it->second.first, it->second.second, key);
  };

  PotentialParams p;
  p.molecule.name = sec.name;
  p.molecule.dissociation_energy_cm = number("de_cm");
  p.molecule.equilibrium_radius = number("re_angstrom");
  p.molecule.reduced_mass = number("mu_amu");
  p.sigma = number("sigma");
  p.delta = number("delta");
  p.alpha = number("alpha_inv_angstrom");
  if (sec.values.contains("q")) p.q = number("q");
  if (auto it = sec.values.find("branch"); it != sec.values.end()) {
    try {
      p.branch = parse_branch(it->second.first);
    } catch (const InputError& e) {
      throw ParseError(it->second.second, "branch", e.what());
    }
  }
  try {
    p.validate();
  } catch (const InputError& e) {
    throw ParseError(sec.header_line, sec.name, e.what());
  }
  return p;
}

}  // namespace

Registry Registry::parse(std::istream& in) {
  static const std::array<std::string_view, 8> known_keys = {
      "de_cm", "re_angstrom",        "mu_amu", "sigma",
      "delta", "alpha_inv_angstrom", "q",      "branch"};

  Registry reg;
  std::optional<Section> current;
  std::string raw;
  std::size_t line_no = 0;

  auto flush = [&] {
    if (current) reg.add(build_entry(*current));
    current.reset();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto pos = line.find_first_of("#;"); pos != std::string_view::npos) {
      line = line.substr(0, pos);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(line_no, "section", "unterminated section header");
      }
      flush();
      auto name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) {
        throw ParseError(line_no, "section", "empty section name");
      }
      current = Section{.name = std::string(name), .header_line = line_no, .values = {}};
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, std::string(line), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!current) {
      throw ParseError(line_no, key, "key outside of a [molecule] section");
    }
    if (std::find(known_keys.begin(), known_keys.end(), key) ==
        known_keys.end()) {
      throw ParseError(line_no, key, "unknown key");
    }
    if (current->values.contains(key)) {
      throw ParseError(line_no, key, "duplicate key");
    }
    current->values.emplace(key, std::make_pair(value, line_no));
  }
  flush();
  return reg;
}

Registry Registry::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw NotFoundError("cannot open registry file '" + path.string() + "'");
  }
  return parse(in);
}

Registry Registry::load_default() {
  if (const char* env = std::getenv("ROVIB_REGISTRY"); env && *env) {
    return load(env);
  }
  return builtin();
}

const PotentialParams& Registry::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.molecule.name == name) return e;
  }
  throw NotFoundError("no molecule named '" + std::string(name) +
                      "' in registry");
}

bool Registry::contains(std::string_view name) const noexcept {
  for (const auto& e : entries_) {
    if (e.molecule.name == name) return true;
  }
  return false;
}

void Registry::add(PotentialParams params) {
  params.validate();
  for (auto& e : entries_) {
    if (e.molecule.name == params.molecule.name) {
      e = std::move(params);
      return;
    }
  }
  entries_.push_back(std::move(params));
}

}  // namespace rovib
