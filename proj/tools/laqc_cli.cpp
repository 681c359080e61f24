// SPDX-License-Identifier: Apache-2.0
//
// laqc: family sweeps, swap sweeps, verification and the formula audit.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "laqc/audit.hpp"
#include "laqc/manifest.hpp"
#include "laqc/sweep.hpp"
#include "laqc/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace laqc;

struct SweepFlags {
  std::string family, grid, grid2, xi, slice, out, format = "csv", config;
  std::uint64_t seed = 42;
  int oracle_every = 10;
};

Range range_from_json(const json& j) {
  return {j.at("start").get<double>(), j.at("stop").get<double>(), j.at("count").get<int>()};
}

// Config file values first, explicit flags on top.
SweepSpec resolve_spec(const CLI::App& cmd, const SweepFlags& f) {
  SweepSpec s;
  if (!f.config.empty()) {
    const json c = read_config(f.config);
    if (c.contains("family")) s.family = parse_family(c["family"].get<std::string>());
    if (c.contains("grid") && !c["grid"].is_null()) s.grid = range_from_json(c["grid"]);
    if (c.contains("grid2") && !c["grid2"].is_null()) s.grid2 = range_from_json(c["grid2"]);
    if (c.contains("xi")) s.xi = c["xi"].get<double>();
    if (c.contains("xi_grid") && !c["xi_grid"].is_null()) s.xi_grid = range_from_json(c["xi_grid"]);
    if (c.contains("slice")) s.slice = parse_slice(c["slice"].get<std::string>());
    if (c.contains("out")) s.out = c["out"].get<std::string>();
    if (c.contains("format")) s.format = parse_format(c["format"].get<std::string>());
    if (c.contains("seed")) s.seed = c["seed"].get<std::uint64_t>();
    if (c.contains("oracle_every")) s.oracle_every = c["oracle_every"].get<int>();
  }
  auto given = [&cmd](const char* name) {
    const CLI::Option* o = cmd.get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--family")) s.family = parse_family(f.family);
  else if (f.config.empty()) throw SpecError("--family is required");
  if (given("--grid")) s.grid = parse_range(f.grid);
  if (given("--grid2")) s.grid2 = parse_range(f.grid2);
  if (given("--slice")) s.slice = parse_slice(f.slice);
  if (given("--xi")) {
    if (f.xi.find(':') != std::string::npos) s.xi_grid = parse_range(f.xi, true);
    else s.xi = parse_angle(f.xi);
  }
  if (given("--out")) s.out = f.out;
  if (given("--format")) s.format = parse_format(f.format);
  if (given("--seed")) s.seed = f.seed;
  if (given("--oracle-every")) s.oracle_every = f.oracle_every;
  if (s.slice == Slice::fixed_xi && s.xi_grid && given("--xi"))
    throw SpecError("--xi takes a single angle for the fixed-xi slice");
  return s;
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

// Data to --out (plus manifest) or to stdout.
void emit(const std::string& out, const std::string& text, const RunManifest& m) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  write_text(out, text);
  write_text(manifest_path(out), dump(m.to_json()));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string audit_csv(const std::vector<AuditEntry>& entries) {
  std::ostringstream os;
  os << "id,target,grid,points,undefined,exceeding,max_deviation,worst_at,verdict,note\n";
  for (const auto& e : entries) {
    std::string at;
    for (double v : e.profile.worst_at) at += (at.empty() ? "" : ";") + format_double(v);
    os << csv_field(e.id) << ',' << csv_field(e.target) << ',' << e.grid << ',' << e.profile.points << ','
       << e.profile.undefined << ',' << e.profile.exceeding << ',' << format_double(e.profile.max_abs)
       << ',' << at << ',' << to_string(e.verdict) << ',' << csv_field(e.note) << '\n';
  }
  return os.str();
}

void add_sweep_flags(CLI::App* c, SweepFlags& f, bool swap) {
  c->add_option("--family", f.family, "werner|alpha|beta|vv|mems");
  c->add_option("--grid", f.grid, "start:stop:count (pAB for swap sweeps)");
  c->add_option("--out", f.out, "output path; stdout if omitted");
  c->add_option("--format", f.format, "csv|json");
  c->add_option("--seed", f.seed, "seed (recorded in the manifest)");
  c->add_option("--config", f.config, "JSON config in the manifest schema");
  if (swap) {
    c->add_option("--grid2", f.grid2, "start:stop:count for pCD (fixed-xi slice)");
    c->add_option("--xi", f.xi, "angle (e.g. 0.5pi) or angle grid start:stop:count");
    c->add_option("--slice", f.slice, "fixed-xi|equal-params");
  } else {
    c->add_option("--oracle-every", f.oracle_every, "numeric oracle spot check every k rows (0 = off)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LAQC and correlation swapping for two-qubit X states"};
  app.set_version_flag("--version", std::string(library_version()));
  app.require_subcommand(1);

  SweepFlags fam_flags, swap_flags;
  CLI::App* fam = app.add_subcommand("family-sweep", "LAQC and concurrence along one family");
  add_sweep_flags(fam, fam_flags, false);
  CLI::App* swp = app.add_subcommand("swap-sweep", "post-swap state over a parameter grid");
  add_sweep_flags(swp, swap_flags, true);

  VerifyOptions vopt;
  double vtol = 0.0;
  std::string vout;
  CLI::App* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--samples", vopt.samples, "random cases per suite")->default_val(200);
  ver->add_option("--seed", vopt.seed, "seed")->default_val(42);
  CLI::Option* tol_opt = ver->add_option("--tol", vtol, "replace every suite tolerance");
  ver->add_option("--out", vout, "report path; stdout if omitted");

  AuditGrid agrid;
  std::string aout, aformat = "csv";
  CLI::App* aud = app.add_subcommand("audit", "compare published closed forms with the oracle");
  aud->add_option("--density", agrid.density, "points per axis on swap grids")->default_val(11);
  aud->add_option("--family-points", agrid.family_points, "points on family grids")->default_val(101);
  aud->add_option("--seed", agrid.seed, "seed for random pairs")->default_val(7);
  aud->add_option("--out", aout, "report path; stdout if omitted");
  aud->add_option("--format", aformat, "csv|json");

  CLI11_PARSE(app, argc, argv);
  const std::string cmdline = command_line(argc, argv);

  try {
    if (*fam || *swp) {
      const bool swap = static_cast<bool>(*swp);
      const SweepSpec spec = resolve_spec(swap ? *swp : *fam, swap ? swap_flags : fam_flags);
      spec.validate(swap);
      const RunManifest m = make_manifest(cmdline, spec.to_json());
      std::string text;
      if (swap) {
        const auto rows = swap_sweep(spec);
        text = spec.format == Format::csv ? swap_csv(rows)
                                          : dump(json{{"manifest", m.to_json()}, {"rows", swap_json(rows)}});
      } else {
        const auto rows = family_sweep(spec);
        text = spec.format == Format::csv ? family_csv(rows)
                                          : dump(json{{"manifest", m.to_json()}, {"rows", family_json(rows)}});
      }
      emit(spec.out, text, m);
      return 0;
    }
    if (*ver) {
      if (tol_opt->count() > 0) vopt.tol = vtol;
      const VerifyReport r = run_verify(vopt);
      const json config{{"samples", vopt.samples}, {"seed", vopt.seed},
                        {"tol", vopt.tol ? json(*vopt.tol) : json(nullptr)}, {"out", vout}};
      if (vout.empty()) std::cout << dump(r.to_json());
      else emit(vout, dump(r.to_json()), make_manifest(cmdline, config));
      if (!r.pass()) {
        for (const auto& s : r.suites)
          if (!s.pass()) {
            std::cerr << "verify: suite " << s.name << " failed; first failure: "
                      << s.first_failure->dump() << "\n";
            break;
          }
        return 1;
      }
      return 0;
    }
    if (*aud) {
      const Format fmt = parse_format(aformat);
      const auto entries = audit_all(agrid);
      const json config{{"density", agrid.density}, {"family_points", agrid.family_points},
                        {"seed", agrid.seed}, {"out", aout}, {"format", aformat}};
      const RunManifest m = make_manifest(cmdline, config, audit_summary(entries));
      std::string text;
      if (fmt == Format::csv) {
        text = audit_csv(entries);
      } else {
        json a = json::array();
        for (const auto& e : entries) a.push_back(to_json(e));
        text = dump(json{{"manifest", m.to_json()}, {"entries", a}});
      }
      emit(aout, text, m);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "laqc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
