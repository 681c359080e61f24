// SPDX-License-Identifier: Apache-2.0

#include "laqc/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <sstream>

#include "laqc/correlations.hpp"
#include "laqc/swap.hpp"

namespace laqc {

namespace {

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw SpecError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

constexpr double kHalfPi = 0.5 * std::numbers::pi;

bool angle_ok(double xi) { return std::abs(xi) <= kHalfPi * (1.0 + 1e-14); }

}  // namespace

double parse_angle(std::string_view s) {
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    std::string_view head = s.substr(0, s.size() - 2);
    double k = 1.0;
    if (head == "-") k = -1.0;
    else if (head == "+") k = 1.0;
    else if (!head.empty()) k = parse_number(head.front() == '+' ? head.substr(1) : head, "angle");
    return k * std::numbers::pi;
  }
  return parse_number(s.front() == '+' ? s.substr(1) : s, "angle");
}

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k)
    v[static_cast<std::size_t>(k)] = count == 1 ? start : start + (stop - start) * k / (count - 1);
  if (count > 1) v.back() = stop;  // exact endpoint, no accumulated rounding
  return v;
}

Range parse_range(std::string_view s, bool angles) {
  const auto c1 = s.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string_view::npos)
    throw SpecError("grid must be start:stop:count, got '" + std::string(s) + "'");
  auto bound = [angles](std::string_view b) { return angles ? parse_angle(b) : parse_number(b, "grid bound"); };
  Range r;
  r.start = bound(s.substr(0, c1));
  r.stop = bound(s.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view cnt = s.substr(c2 + 1);
  const auto [ptr, ec] = std::from_chars(cnt.data(), cnt.data() + cnt.size(), r.count);
  if (ec != std::errc{} || ptr != cnt.data() + cnt.size() || cnt.empty())
    throw SpecError("cannot parse grid count '" + std::string(cnt) + "'");
  return r;
}

std::string_view to_string(Slice s) { return s == Slice::fixed_xi ? "fixed-xi" : "equal-params"; }
std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

Slice parse_slice(std::string_view s) {
  if (s == "fixed-xi") return Slice::fixed_xi;
  if (s == "equal-params") return Slice::equal_params;
  throw SpecError("unknown slice '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw SpecError("unknown format '" + std::string(s) + "'");
}

SweepSpec::SweepSpec() : xi(kHalfPi) {}

void SweepSpec::validate(bool swap) const {
  auto check_params = [](const Range& r, const char* name) {
    if (r.count < 2) throw SpecError(std::string(name) + ": count must be at least 2");
    for (double v : {r.start, r.stop})
      if (!(v >= 0.0 && v <= 1.0))
        throw SpecError(std::string(name) + ": bound " + format_double(v) + " outside [0, 1]");
  };
  check_params(grid, "grid");
  if (!swap) return;
  if (grid2) check_params(*grid2, "grid2");
  if (slice == Slice::fixed_xi) {
    if (!angle_ok(xi)) throw SpecError("xi outside [-pi/2, pi/2]");
  } else {
    const Range r = xi_grid.value_or(Range{-kHalfPi, kHalfPi, 101});
    if (r.count < 2) throw SpecError("xi grid: count must be at least 2");
    if (!angle_ok(r.start) || !angle_ok(r.stop)) throw SpecError("xi grid outside [-pi/2, pi/2]");
  }
}

nlohmann::ordered_json SweepSpec::to_json() const {
  auto range = [](const Range& r) {
    return nlohmann::ordered_json{{"start", r.start}, {"stop", r.stop}, {"count", r.count}};
  };
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(family));
  j["grid"] = range(grid);
  j["grid2"] = grid2 ? range(*grid2) : nlohmann::ordered_json(nullptr);
  j["xi"] = xi;
  j["xi_grid"] = xi_grid ? range(*xi_grid) : nlohmann::ordered_json(nullptr);
  j["slice"] = std::string(to_string(slice));
  j["out"] = out;
  j["format"] = std::string(to_string(format));
  j["seed"] = seed;
  j["oracle_every"] = oracle_every;
  return j;
}

namespace {

template <class Row, class Fn>
std::vector<Row> parallel_rows(std::size_t n, Fn&& fn) {
  std::vector<Row> rows(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(laqc_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

constexpr double kSpotLaqcTol = 1e-4;
constexpr double kSpotConcTol = 1e-10;

}  // namespace

std::vector<FamilyRow> family_sweep(const SweepSpec& spec) {
  spec.validate(false);
  const auto ps = spec.grid.values();
  return parallel_rows<FamilyRow>(ps.size(), [&](std::size_t i) {
    const FamilyPoint fp{spec.family, ps[i]};
    FamilyRow r{spec.family, ps[i], laqc_family(fp), concurrence_family(fp), {}, {}, {}};
    if (spec.oracle_every > 0 && i % static_cast<std::size_t>(spec.oracle_every) == 0) {
      const DensityMatrix rho = density_matrix(make_family(fp));
      r.oracle_laqc = laqc_oracle(rho, OracleMode::constructive).value;
      r.oracle_concurrence = concurrence(rho);
      const bool ok = std::abs(*r.oracle_laqc - r.laqc) <= kSpotLaqcTol &&
                      std::abs(*r.oracle_concurrence - r.concurrence) <= kSpotConcTol;
      r.check = ok ? "ok" : "mismatch";
    }
    return r;
  });
}

std::vector<SwapRow> swap_sweep(const SweepSpec& spec) {
  spec.validate(true);
  struct Point {
    double a, c, xi;
  };
  std::vector<Point> pts;
  if (spec.slice == Slice::fixed_xi) {
    const auto pa = spec.grid.values();
    const auto pc = spec.grid2.value_or(spec.grid).values();
    for (double a : pa)
      for (double c : pc) pts.push_back({a, c, spec.xi});
  } else {
    const auto p = spec.grid.values();
    const auto xs = spec.xi_grid.value_or(Range{-kHalfPi, kHalfPi, 101}).values();
    for (double v : p)
      for (double x : xs) pts.push_back({v, v, x});
  }
  return parallel_rows<SwapRow>(pts.size(), [&](std::size_t i) {
    const Point& q = pts[i];
    SwapRow r;
    r.family = spec.family;
    r.p_ab = q.a;
    r.p_cd = q.c;
    r.xi = q.xi;
    try {
      const FamilySwap s = swap_family({spec.family, q.a}, {spec.family, q.c}, MeasurementState(q.xi));
      r.defined = true;
      r.bloch = s.outcome.normalized;
      r.norm = s.outcome.norm;
      r.prob = s.outcome.prob;
      r.laqc = s.laqc.closed;
      r.concurrence = s.concurrence;
    } catch (const UndefinedOutcome&) {
      r.defined = false;
    }
    return r;
  });
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream os;
  os << "family,param,laqc,concurrence,oracle_laqc,oracle_concurrence,check\n";
  for (const auto& r : rows) {
    os << to_string(r.family) << ',' << format_double(r.param) << ',' << format_double(r.laqc) << ','
       << format_double(r.concurrence) << ',' << (r.oracle_laqc ? format_double(*r.oracle_laqc) : "")
       << ',' << (r.oracle_concurrence ? format_double(*r.oracle_concurrence) : "") << ',' << r.check
       << '\n';
  }
  return os.str();
}

std::string swap_csv(const std::vector<SwapRow>& rows) {
  std::ostringstream os;
  os << "family,pAB,pCD,xi,x3,y3,T1,T2,T3,norm,prob,laqc,concurrence,status\n";
  for (const auto& r : rows) {
    os << to_string(r.family) << ',' << format_double(r.p_ab) << ',' << format_double(r.p_cd) << ','
       << format_double(r.xi);
    if (r.defined) {
      for (double v : {r.bloch.x3, r.bloch.y3, r.bloch.T1, r.bloch.T2, r.bloch.T3, r.norm, r.prob,
                       r.laqc, r.concurrence})
        os << ',' << format_double(v);
      os << ",ok\n";
    } else {
      os << ",,,,,,,,,,zero_probability\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json family_json(const std::vector<FamilyRow>& rows) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    a.push_back({{"family", std::string(to_string(r.family))},
                 {"param", r.param},
                 {"laqc", r.laqc},
                 {"concurrence", r.concurrence},
                 {"oracle_laqc", opt(r.oracle_laqc)},
                 {"oracle_concurrence", opt(r.oracle_concurrence)},
                 {"check", r.check}});
  return a;
}

nlohmann::ordered_json swap_json(const std::vector<SwapRow>& rows) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o{{"family", std::string(to_string(r.family))},
                             {"pAB", r.p_ab},
                             {"pCD", r.p_cd},
                             {"xi", r.xi}};
    const char* keys[] = {"x3", "y3", "T1", "T2", "T3", "norm", "prob", "laqc", "concurrence"};
    const double vals[] = {r.bloch.x3, r.bloch.y3, r.bloch.T1, r.bloch.T2, r.bloch.T3,
                           r.norm,     r.prob,     r.laqc,     r.concurrence};
    for (int k = 0; k < 9; ++k)
      o[keys[k]] = r.defined ? nlohmann::ordered_json(vals[k]) : nlohmann::ordered_json(nullptr);
    o["status"] = r.defined ? "ok" : "zero_probability";
    a.push_back(std::move(o));
  }
  return a;
}

}  // namespace laqc
