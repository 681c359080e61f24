#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "laqc/manifest.hpp"
#include "laqc/sweep.hpp"
#include "laqc/verify.hpp"

using namespace laqc;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("angles") {
  CHECK(parse_angle("0.5pi") == doctest::Approx(kPi / 2));
  CHECK(parse_angle("-pi") == doctest::Approx(-kPi));
  CHECK(parse_angle("pi") == doctest::Approx(kPi));
  CHECK(parse_angle("1.25") == 1.25);
  CHECK_THROWS_AS(parse_angle("pi/2"), SpecError);
  CHECK_THROWS_AS(parse_angle("abc"), SpecError);
}

TEST_CASE("ranges") {
  const Range r = parse_range("0:1:11");
  CHECK(r.count == 11);
  CHECK(r.values().back() == 1.0);
  CHECK(r.values()[3] == doctest::Approx(0.3));
  const Range x = parse_range("-0.5pi:0.5pi:5", true);
  CHECK(x.start == doctest::Approx(-kPi / 2));
  CHECK_THROWS_AS(parse_range("0:1"), SpecError);
  CHECK_THROWS_AS(parse_range("0:1:x"), SpecError);
}

TEST_CASE("spec validation") {
  SweepSpec s;
  s.grid = {0.0, 1.2, 5};
  CHECK_THROWS_AS(s.validate(false), SpecError);
  s.grid = {0.0, 1.0, 1};
  CHECK_THROWS_AS(s.validate(false), SpecError);
  s.grid = {0.0, 1.0, 5};
  s.xi = 2.0;
  CHECK_NOTHROW(s.validate(false));
  CHECK_THROWS_AS(s.validate(true), SpecError);
}

TEST_CASE("family sweep golden rows") {
  SweepSpec s;
  s.family = Family::werner;
  s.grid = {0.0, 1.0, 101};
  const auto rows = family_sweep(s);
  CHECK(rows.back().laqc == doctest::Approx(1.0));
  CHECK(rows.back().concurrence == doctest::Approx(1.0));
  for (const auto& r : rows)
    if (!r.check.empty()) CHECK(r.check == "ok");

  s.family = Family::alpha;
  for (const auto& r : family_sweep(s)) {
    if (r.param > 0.0 && r.param < 0.6867) CHECK(r.laqc > r.concurrence);
    if (r.param > 0.6877 && r.param < 1.0) CHECK(r.laqc < r.concurrence);
  }

  s.family = Family::beta;
  const auto beta = family_sweep(s);
  for (const auto& r : beta) {
    if (std::abs(r.param - 0.5) < 1e-12) CHECK(r.concurrence == 0.0);
    else CHECK(r.concurrence > 0.0);
  }
}

TEST_CASE("swap sweep slices") {
  SweepSpec s;
  s.family = Family::werner;
  s.grid = {0.0, 1.0, 11};
  const auto fixed = swap_sweep(s);
  CHECK(fixed.size() == 121);
  for (const auto& r : fixed) {
    REQUIRE(r.defined);
    const bool axis = r.p_ab == 0.0 || r.p_cd == 0.0;
    if (axis) CHECK(r.laqc == 0.0);
    else CHECK(r.laqc > 0.0);
    CHECK(validate_density(density_matrix(xstate_from_bloch(r.bloch))).pass);
  }

  s.family = Family::beta;
  s.slice = Slice::equal_params;
  s.xi_grid = Range{-kPi / 2, kPi / 2, 11};
  for (const auto& r : swap_sweep(s)) {
    const bool locus = std::abs(r.p_ab - 0.5) < 1e-12 || std::abs(r.xi) < 1e-12;
    if (locus) CHECK(r.laqc < 1e-12);
    else CHECK(r.laqc > 1e-6);
  }

  s.family = Family::vv;
  s.slice = Slice::fixed_xi;
  s.xi = kPi / 2;
  for (const auto& r : swap_sweep(s))
    if (r.p_ab == 0.0) CHECK(r.laqc == 0.0);
}

TEST_CASE("zero-probability rows keep the grid rectangular") {
  SwapRow r;
  r.family = Family::vv;
  r.defined = false;
  const auto rows = parse_csv(swap_csv({r}));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].size() == rows[0].size());
  CHECK(rows[1].back() == "zero_probability");
  CHECK(rows[1][4].empty());
  CHECK(swap_json({r})[0]["laqc"].is_null());
}

TEST_CASE("CSV and JSON carry identical values") {
  SweepSpec s;
  s.family = Family::mems;
  s.grid = {0.0, 1.0, 7};
  const auto rows = swap_sweep(s);
  const auto csv = parse_csv(swap_csv(rows));
  const auto json = swap_json(rows);
  REQUIRE(csv.size() == rows.size() + 1);
  const std::vector<std::string> keys{"pAB", "pCD", "xi", "x3", "y3", "T1", "T2", "T3", "norm", "prob",
                                      "laqc", "concurrence"};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < keys.size(); ++k)
      CHECK(std::strtod(csv[i + 1][k + 1].c_str(), nullptr) == json[i][keys[k]].get<double>());

  const auto frows = family_sweep(s);
  const auto fcsv = parse_csv(family_csv(frows));
  const auto fjson = family_json(frows);
  for (std::size_t i = 0; i < frows.size(); ++i)
    CHECK(std::strtod(fcsv[i + 1][2].c_str(), nullptr) == fjson[i]["laqc"].get<double>());
}

TEST_CASE("sweeps are deterministic") {
  SweepSpec s;
  s.family = Family::alpha;
  s.grid = {0.0, 1.0, 9};
  CHECK(swap_csv(swap_sweep(s)) == swap_csv(swap_sweep(s)));
  CHECK(family_csv(family_sweep(s)) == family_csv(family_sweep(s)));
}

TEST_CASE("verify report is deterministic and honours the tolerance override") {
  VerifyOptions o;
  o.samples = 5;
  const std::string a = run_verify(o).to_json().dump();
  const std::string b = run_verify(o).to_json().dump();
  CHECK(a == b);
  CHECK(run_verify(o).pass());

  o.tol = 1e-16;
  const VerifyReport bad = run_verify(o);
  CHECK_FALSE(bad.pass());
  bool carries = false;
  for (const auto& s : bad.suites)
    if (!s.pass()) carries = carries || s.first_failure.has_value();
  CHECK(carries);

  VerifyOptions none;
  none.samples = 0;
  CHECK(run_verify(none).pass());
}

TEST_CASE("manifest") {
  const RunManifest m = make_manifest("laqc test", {{"k", 1}}, {{"entries", 0}});
  const auto j = m.to_json();
  CHECK(j["command"] == "laqc test");
  CHECK(j["version"] == std::string(library_version()));
  CHECK(j["timestamp"].get<std::string>().size() == 20);
  CHECK(manifest_path("a.csv") == "a.csv.manifest.json");
}
