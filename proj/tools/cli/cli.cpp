#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "acceptance.hpp"
#include "golden.hpp"
#include "rovib/rovib.hpp"
#include "tables.hpp"

namespace rovib::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, jsonl };

std::string format_number(double v, int precision) {
  if (v == 0.0) v = 0.0;  // no "-0"
  return fmt::format("{:.{}g}", v, precision);
}

void write_csv(const Table& t, int precision, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_number(v, precision);
            } else if constexpr (!std::is_same_v<T, std::monostate>) {
              os << v;
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_jsonl(const Table& t, int precision, std::ostream& os) {
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              // Round through the text form so both formats agree.
              rec[t.columns[i]] = std::stod(format_number(v, precision));
            } else if constexpr (std::is_same_v<T, std::monostate>) {
              rec[t.columns[i]] = nullptr;
            } else {
              rec[t.columns[i]] = v;
            }
          },
          row[i]);
    }
    os << rec.dump() << '\n';
  }
}

struct Common {
  std::string registry_path;
  std::string out_path;
  std::string format = "csv";
  int precision = 0;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "jsonl" || s == "json-lines") return Format::jsonl;
  throw UsageError("unknown format '" + s + "' (csv|jsonl)");
}

std::vector<int> parse_int_range(const std::string& text,
                                 const std::string& what) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    if (out.empty()) throw UsageError(what + " range '" + text + "' is empty");
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse " + what + " range '" + text +
                     "' (use N or A..B)");
  }
}

std::pair<double, double> parse_real_range(const std::string& text,
                                           const std::string& what) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const double lo = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const double hi = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (!(hi > lo)) {
      throw UsageError(what + " range '" + text + "' has zero length");
    }
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse " + what + " range '" + text +
                     "' (use X or A..B)");
  }
}

Regime parse_regime(const std::string& s) {
  if (s == "nr") return Regime::nonrelativistic;
  if (s == "kg") return Regime::relativistic;
  throw UsageError("unknown regime '" + s + "' (nr|kg)");
}

std::vector<CoeffProvenance> parse_coeffs(const std::string& s) {
  if (s == "paper") return {CoeffProvenance::paper_formula};
  if (s == "matched") return {CoeffProvenance::derivative_matched};
  if (s == "both") {
    return {CoeffProvenance::paper_formula,
            CoeffProvenance::derivative_matched};
  }
  throw UsageError("unknown coefficient set '" + s + "' (paper|matched|both)");
}

Registry load_registry(const Common& c) {
  try {
    return c.registry_path.empty() ? Registry::load_default()
                                   : Registry::load(c.registry_path);
  } catch (const Error& e) {
    throw UsageError(std::string("cannot load registry: ") + e.what());
  }
}

// Emits the table to the --out file or `out`.
void emit(const Table& t, const Common& c, int default_precision,
          std::ostream& out) {
  const Format fmt_kind = parse_format(c.format);
  const int precision = c.precision > 0 ? c.precision : default_precision;
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw UsageError("cannot write '" + c.out_path + "'");
    os = &file;
  }
  if (fmt_kind == Format::csv) {
    write_csv(t, precision, *os);
  } else {
    write_jsonl(t, precision, *os);
  }
}

struct LevelsArgs {
  std::string molecule;
  std::string regime = "nr";
  std::string n = "0";
  std::string l = "0";
  std::string coeffs = "both";
};

std::optional<EnergyLevel> solve_level(const PotentialParams& p, int n,
                                       const Channel& ch, Regime regime) {
  if (regime == Regime::relativistic) return relativistic_level(p, n, ch);
  const auto lvl = nr_energy(p, n, ch);
  if (!lvl.bound) return std::nullopt;
  return lvl;
}

int run_levels(const LevelsArgs& a, const Common& c, std::ostream& out,
               std::ostream& err) {
  const Regime regime = parse_regime(a.regime);
  const auto ns = parse_int_range(a.n, "n");
  const auto ls = parse_int_range(a.l, "l");
  const auto variants = parse_coeffs(a.coeffs);
  const auto reg = load_registry(c);
  const auto& p = reg.find(a.molecule);

  Table t{{"n", "l", "energy_cm1", "regime", "coeffs", "residual"}, {}};
  bool missing = false;
  for (int n : ns) {
    for (int l : ls) {
      std::vector<Channel> channels;
      if (l == 0) {
        channels.push_back(Channel::s_wave());
      } else {
        for (auto v : variants) channels.push_back(Channel::make(p, l, v));
      }
      for (const auto& ch : channels) {
        std::optional<EnergyLevel> lvl;
        try {
          lvl = solve_level(p, n, ch, regime);
        } catch (const NoBoundStateError&) {
        }
        if (!lvl) {
          err << fmt::format("warning: no bound state for n={}, l={} ({})\n", n,
                             l, to_string(ch.coeffs.provenance));
          missing = true;
          continue;
        }
        t.rows.push_back({std::int64_t{n}, std::int64_t{l}, lvl->value_cm(),
                          std::string(to_string(regime)),
                          std::string(to_string(ch.coeffs.provenance)),
                          lvl->residual});
      }
    }
  }
  emit(t, c, 6, out);
  return missing ? kExitNoBoundState : kExitOk;
}

int run_table2(const Common& c, std::ostream& out) {
  const auto reg = load_registry(c);
  const auto& h2 = reg.find("H2");
  Table t{{"sigma", "delta", "alpha_inv_angstrom", "energy_cm1",
           "published_cm1"},
          {}};
  for (const auto& row : golden::kHydrogenGroundStates) {
    const double e =
        nr_energy(tools::with_row(h2, row), 0, Channel::s_wave()).value_cm();
    t.rows.push_back({row.sigma, row.delta, row.alpha, e, row.energy_cm});
  }
  emit(t, c, 6, out);
  return kExitOk;
}

int run_table3(const Common& c, std::ostream& out) {
  const auto reg = load_registry(c);
  const auto& ar = reg.find("Ar2");
  Table t{{"n", "transition_cm1", "published_cm1"}, {}};
  for (std::size_t i = 0; i < golden::kArgonTransitions.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    t.rows.push_back({std::int64_t{n}, ev_to_cm(transition(ar, n)),
                      golden::kArgonTransitions[i]});
  }
  emit(t, c, 6, out);
  return kExitOk;
}

Cell level_cell(const PotentialParams& p, int n, const Channel& ch) {
  try {
    const auto lvl = nr_energy(p, n, ch);
    if (lvl.bound) return lvl.value_cm();
  } catch (const NoBoundStateError&) {
  }
  return std::monostate{};
}

int run_table4(const std::string& coeffs, const Common& c, std::ostream& out) {
  const auto variants = parse_coeffs(coeffs);
  const auto reg = load_registry(c);
  const auto& ar = reg.find("Ar2");
  const auto& h2 = reg.find("H2");
  Table t{{"n", "l", "coeffs", "ar2_cm1", "h2_cm1", "ar2_published_cm1",
           "h2_published_cm1"},
          {}};
  for (int n = 0; n <= 5; ++n) {
    for (int l = 0; l <= std::min(n, 2); ++l) {
      Cell pub_ar = std::monostate{}, pub_h = std::monostate{};
      if (l == 0) {
        pub_ar = golden::kArgonSWave[n];
        pub_h = golden::kHydrogenSWave[n];
      } else {
        for (const auto& row : golden::kRotationalLevels) {
          if (row.n != n || row.l != l) continue;
          if (row.argon_cm > 0.0) pub_ar = row.argon_cm;
          pub_h = row.hydrogen_cm;
        }
      }
      const std::vector<CoeffProvenance> kinds =
          l == 0 ? std::vector<CoeffProvenance>{CoeffProvenance::exact}
                 : variants;
      for (auto kind : kinds) {
        const Channel ca = l == 0 ? Channel::s_wave() : Channel::make(ar, l, kind);
        const Channel ch = l == 0 ? Channel::s_wave() : Channel::make(h2, l, kind);
        t.rows.push_back({std::int64_t{n}, std::int64_t{l},
                          std::string(to_string(kind)), level_cell(ar, n, ca),
                          level_cell(h2, n, ch), pub_ar, pub_h});
      }
    }
  }
  emit(t, c, 6, out);
  return kExitOk;
}

int run_scan_n(const std::string& molecule, const std::string& n_range,
               const Common& c, std::ostream& out, std::ostream& err) {
  const auto reg = load_registry(c);
  const auto& p = reg.find(molecule);
  const auto points = tools::scan_n(p);
  if (points.empty()) {
    err << "error: " << molecule << " has no bound vibrational level\n";
    return kExitNoBoundState;
  }
  Table t{{"n", "energy_cm1"}, {}};
  std::vector<int> wanted;
  if (n_range.empty()) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      wanted.push_back(static_cast<int>(i));
    }
  } else {
    wanted = parse_int_range(n_range, "n");
  }
  bool truncated = false;
  for (int n : wanted) {
    if (n < 0 || static_cast<std::size_t>(n) >= points.size()) {
      truncated = true;
      continue;
    }
    t.rows.push_back({std::int64_t{n}, points[n].energy_cm});
  }
  if (truncated) {
    err << fmt::format(
        "warning: rows beyond n_max = {:.4f} (last bound n = {}) dropped\n",
        nr_n_max(p), points.size() - 1);
  }
  emit(t, c, 10, out);
  return kExitOk;
}

int run_scan_de(const std::string& molecule, const std::string& range,
                int steps, const Common& c, std::ostream& out) {
  const auto [lo, hi] = parse_real_range(range, "D_e");
  if (lo == hi) steps = 1;
  if (steps < 2 && lo != hi) throw UsageError("a D_e range needs --steps >= 2");
  const auto reg = load_registry(c);
  const auto& p = reg.find(molecule);
  Table t{{"de_cm1", "energy_cm1"}, {}};
  for (const auto& pt : tools::scan_de(p, lo, hi, steps)) {
    t.rows.push_back({pt.x, pt.energy_cm});
  }
  emit(t, c, 10, out);
  return kExitOk;
}

struct WaveArgs {
  std::string molecule;
  std::string regime = "nr";
  int n = 0;
  int l = 0;
  std::string coeffs = "matched";
  int points = 400;
  std::string r_range;
};

int run_wavefunction(const WaveArgs& a, const Common& c, std::ostream& out,
                     std::ostream& err) {
  const Regime regime = parse_regime(a.regime);
  const auto variants = parse_coeffs(a.coeffs);
  if (variants.size() != 1) {
    throw UsageError("wavefunction needs a single coefficient set");
  }
  if (a.points < 2) throw UsageError("--points must be >= 2");
  const auto reg = load_registry(c);
  const auto& p = reg.find(a.molecule);
  const Channel ch = Channel::make(p, a.l, variants.front());
  std::optional<EnergyLevel> lvl;
  try {
    lvl = solve_level(p, a.n, ch, regime);
  } catch (const NoBoundStateError&) {
  }
  if (!lvl) {
    err << fmt::format("error: no bound state for n={}, l={}\n", a.n, a.l);
    return kExitNoBoundState;
  }
  const auto st = make_state(*lvl);
  const GridSpec g = default_grid(p);
  double lo = g.r_min, hi = g.r_max;
  if (!a.r_range.empty()) std::tie(lo, hi) = parse_real_range(a.r_range, "r");
  if (!(lo > 0.0)) throw UsageError("r range must start above zero");

  Table t{{"r_angstrom", "R", "g"}, {}};
  for (int i = 0; i < a.points; ++i) {
    const double r = lo + (hi - lo) * i / (a.points - 1);
    const double gv = reduced_value(st, r);
    t.rows.push_back({r, gv / r, gv});
  }
  err << fmt::format("# E = {:.10g} cm-1, K = {:.10g}, S/q = {:.10g}, N = {:.10g}\n",
                     lvl->value_cm(), st.k_exp, st.s_exp, st.norm_quadrature);
  emit(t, c, 10, out);
  return kExitOk;
}

int run_validate(bool skip_oracle, const Common& c, std::ostream& out) {
  const auto reg = load_registry(c);
  tools::SuiteOptions opts;
  opts.skip_oracle = skip_oracle;
  const auto report = tools::run_acceptance(reg, opts);

  std::ostringstream text;
  if (parse_format(c.format) == Format::jsonl) {
    for (const auto& r : report.results) {
      nlohmann::ordered_json rec;
      rec["id"] = r.id;
      rec["title"] = r.title;
      rec["status"] = r.skipped ? "skip" : (r.pass ? "pass" : "fail");
      rec["seconds"] = r.seconds;
      rec["detail"] = r.detail;
      text << rec.dump() << '\n';
    }
  } else {
    for (const auto& r : report.results) text << tools::format_line(r) << '\n';
    text << fmt::format("{} in {:.2f} s\n", report.pass() ? "PASS" : "FAIL",
                        report.seconds);
  }
  out << text.str();
  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path);
    if (!file) throw UsageError("cannot write '" + c.out_path + "'");
    file << text.str();
  }
  return report.pass() ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Ro-vibrational levels of deformed hyperbolic potentials",
               "rovib"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--registry", common.registry_path,
                 "parameter registry file (default: built-in or $ROVIB_REGISTRY)");
  app.add_option("--out", common.out_path, "write output to this file");
  app.add_option("--format", common.format, "csv or jsonl");
  app.add_option("--precision", common.precision,
                 "significant digits (default 6 for tables, 10 for scans)");

  LevelsArgs levels;
  auto* cmd_levels = app.add_subcommand("levels", "energy levels E(n, l)");
  cmd_levels->add_option("--molecule", levels.molecule)->required();
  cmd_levels->add_option("--regime", levels.regime, "nr or kg");
  cmd_levels->add_option("--n", levels.n, "N or A..B");
  cmd_levels->add_option("--l", levels.l, "N or A..B");
  cmd_levels->add_option("--coeffs", levels.coeffs, "paper, matched or both");

  auto* cmd_t2 = app.add_subcommand("table2", "H2 ground states for four parameter sets");
  auto* cmd_t3 = app.add_subcommand("table3", "Ar2 s-wave transition energies");
  std::string t4_coeffs = "both";
  auto* cmd_t4 = app.add_subcommand("table4", "Ar2 and H2 levels, n <= 5, l <= 2");
  cmd_t4->add_option("--coeffs", t4_coeffs, "paper, matched or both");

  std::string scan_mol = "Ar2", scan_n_range;
  auto* cmd_scan_n = app.add_subcommand("scan-n", "E(n) over the bound spectrum");
  cmd_scan_n->add_option("--molecule", scan_mol);
  cmd_scan_n->add_option("--n", scan_n_range, "N or A..B");

  std::string de_range = "50..150";
  int de_steps = 101;
  auto* cmd_scan_de = app.add_subcommand("scan-de", "E(n=0) against D_e");
  cmd_scan_de->add_option("--molecule", scan_mol);
  cmd_scan_de->add_option("--de-range", de_range, "cm^-1, X or A..B");
  cmd_scan_de->add_option("--steps", de_steps, "number of D_e values");

  WaveArgs wave;
  auto* cmd_wave = app.add_subcommand("wavefunction", "normalized radial function");
  cmd_wave->add_option("--molecule", wave.molecule)->required();
  cmd_wave->add_option("--regime", wave.regime, "nr or kg");
  cmd_wave->add_option("--n", wave.n);
  cmd_wave->add_option("--l", wave.l);
  cmd_wave->add_option("--coeffs", wave.coeffs, "paper or matched");
  cmd_wave->add_option("--points", wave.points);
  cmd_wave->add_option("--r-range", wave.r_range, "Angstrom, A..B");

  bool skip_oracle = false;
  auto* cmd_validate = app.add_subcommand("validate", "run the acceptance suite");
  cmd_validate->add_flag("--skip-oracle", skip_oracle,
                         "leave out finite-difference checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_levels) return run_levels(levels, common, out, err);
    if (*cmd_t2) return run_table2(common, out);
    if (*cmd_t3) return run_table3(common, out);
    if (*cmd_t4) return run_table4(t4_coeffs, common, out);
    if (*cmd_scan_n) return run_scan_n(scan_mol, scan_n_range, common, out, err);
    if (*cmd_scan_de) return run_scan_de(scan_mol, de_range, de_steps, common, out);
    if (*cmd_wave) return run_wavefunction(wave, common, out, err);
    if (*cmd_validate) return run_validate(skip_oracle, common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnknownMolecule;
  } catch (const NoBoundStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoBoundState;
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidationFailed;
  }
  return kExitUsage;
}

}  // namespace rovib::cli
