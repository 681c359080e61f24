// SPDX-License-Identifier: Apache-2.0

#include "laqc/audit.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "laqc/correlations.hpp"
#include "laqc/reference_forms.hpp"
#include "laqc/swap.hpp"

namespace laqc {

namespace rf = reference_forms;

std::string_view to_string(Verdict v) {
  return v == Verdict::confirmed ? "CONFIRMED" : "DISCREPANT";
}

namespace {

constexpr double kRatioTol = 1e-9;
constexpr double kZero = 1e-9;

struct Sample {
  bool defined = true;
  std::vector<double> printed;
  std::vector<double> truth;
};

using SampleFn = std::function<Sample(std::size_t)>;
using WhereFn = std::function<std::vector<double>(std::size_t)>;

struct Target {
  std::string id;
  std::string target;
  std::vector<std::string> components;
};

// Known causes, attached only to entries that come out DISCREPANT.
const std::map<std::string, std::string>& cause_notes() {
  static const std::map<std::string, std::string> m{
      {"swap.general.bloch_raw",
       "printed map is the physical map with x3, T2, T3 of CD negated (an X gate on qubit C)"},
      {"werner.swap.bloch", "inherits the sign convention of the printed general map"},
      {"alpha.swap.bloch", "inherits the sign convention of the printed general map"},
      {"beta.swap.bloch", "inherits the sign convention of the printed general map"},
      {"vv.swap.bloch_raw", "groupings do not reduce to the general map under the vv tuple"},
      {"mems.swap.bloch_raw", "built from the printed MEMS tuple (T1 = Gamma)"},
      {"mems.swap.norm", "substituting the MEMS tuple into the general N gives twice this"},
      {"mems.bloch", "printed T1 = -T2 = Gamma; the defining matrix gives gamma"},
      {"alpha.swap.concurrence_zero", "separability claim fails; alpha = 1 pairs swap to a Bell state"},
      {"alpha.swap_xgate.concurrence_zero", "separability claim fails for the X-gate measurement too"},
      {"mems.swap.concurrence_zero", "separability claim fails on most of the grid"},
      {"beta.swap.concurrence", "printed exponent is malformed; read here as a product"},
      {"beta.swap.laqc_g2", "g3 exceeds g2 on part of the grid, so g2 is not the LAQC there"},
      {"xstate.g3.prefactor", "1+x3+y3+T3 = 4a, so the 1/4 prefactor scales g3 down by 4"},
  };
  return m;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

AuditEntry evaluate(const Target& t, std::string grid, std::size_t n, const WhereFn& where,
                    const SampleFn& sample) {
  std::vector<Sample> samples(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      samples[static_cast<std::size_t>(i)] = sample(static_cast<std::size_t>(i));
    } catch (const UndefinedOutcome&) {
      samples[static_cast<std::size_t>(i)].defined = false;
    } catch (...) {
#pragma omp critical(laqc_audit_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  AuditEntry e{t.id, t.target, std::move(grid), {}, Verdict::confirmed, {}};
  DeviationProfile& prof = e.profile;
  const std::size_t nc = t.components.size();
  std::vector<double> comp_max(nc, 0.0);
  std::vector<bool> any_diff(nc, false), flip_ok(nc, true), ratio_ok(nc, true);
  std::vector<std::optional<double>> ratio(nc);
  bool printed_nan = false;

  // serial pass in grid order so that worst_at does not depend on scheduling
  for (std::size_t i = 0; i < n; ++i) {
    const Sample& s = samples[i];
    if (!s.defined) {
      ++prof.undefined;
      continue;
    }
    bool nan_here = false;
    for (double v : s.printed) nan_here = nan_here || !std::isfinite(v);
    if (nan_here) {
      ++prof.undefined;
      printed_nan = true;
      continue;
    }
    ++prof.points;
    double worst_here = 0.0;
    for (std::size_t k = 0; k < nc; ++k) {
      const double p = s.printed[k], q = s.truth[k], d = std::abs(p - q);
      comp_max[k] = std::max(comp_max[k], d);
      worst_here = std::max(worst_here, d);
      if (d > kConfirmTol) {
        any_diff[k] = true;
        if (std::abs(p + q) > kConfirmTol) flip_ok[k] = false;
      }
      if (std::abs(p) > kZero) {
        const double r = q / p;
        if (!ratio[k]) ratio[k] = r;
        else if (std::abs(r - *ratio[k]) > kRatioTol * std::max(1.0, std::abs(r))) ratio_ok[k] = false;
      } else if (std::abs(q) > kZero) {
        ratio_ok[k] = false;
      }
    }
    if (worst_here > kConfirmTol) ++prof.exceeding;
    if (worst_here > prof.max_abs || prof.worst_at.empty()) {
      prof.max_abs = std::max(prof.max_abs, worst_here);
      prof.worst_at = where(i);
    }
  }

  for (std::size_t k = 0; k < nc; ++k) {
    ComponentDeviation c{t.components[k], comp_max[k], any_diff[k] && flip_ok[k], std::nullopt};
    if (any_diff[k] && ratio_ok[k] && ratio[k]) c.constant_ratio = ratio[k];
    prof.components.push_back(std::move(c));
  }

  if (prof.exceeding > 0 || printed_nan || prof.points == 0) e.verdict = Verdict::discrepant;
  if (e.verdict == Verdict::discrepant) {
    std::string note;
    auto add = [&note](const std::string& s) { note += (note.empty() ? "" : "; ") + s; };
    for (const auto& c : prof.components) {
      if (c.max_abs <= kConfirmTol) continue;
      if (c.sign_flipped) add(c.name + " sign flipped");
      else if (c.constant_ratio) add(c.name + " off by constant factor " + fmt(*c.constant_ratio));
      else add(c.name + " off by up to " + fmt(c.max_abs));
    }
    if (printed_nan) add("printed form leaves its domain at some points");
    if (auto it = cause_notes().find(t.id); it != cause_notes().end()) add(it->second);
    e.note = std::move(note);
  }
  return e;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
  return v;
}

const std::vector<std::string> kBlochNames{"x3", "y3", "T1", "T2", "T3"};

std::vector<double> as_vec(const BlochX& p) { return {p.x3, p.y3, p.T1, p.T2, p.T3}; }

BlochX fano_bloch(const DensityMatrix& rho) {
  return {fano_component(rho, 3, 0), fano_component(rho, 0, 3), fano_component(rho, 1, 1),
          fano_component(rho, 2, 2), fano_component(rho, 3, 3)};
}

// Oracle pipeline at one swap grid point: 16x16 projection, then the
// quantifiers on the reduced AD state.
struct OraclePoint {
  bool defined = false;
  BlochX bloch;
  double norm = 0.0;  // N, i.e. the probability times the measured constant
  double laqc = 0.0;
  double conc = 0.0;
  bool xgate_defined = false;
  double xgate_conc = 0.0;
};

struct SwapGrid {
  Family family;
  std::vector<double> p;
  std::vector<double> xi;
  std::vector<OraclePoint> points;  // index (i * np + j) * nx + k

  std::size_t size() const { return points.size(); }
  rf::SwapParams params(std::size_t idx) const {
    const std::size_t nx = xi.size(), np = p.size();
    return {p[idx / (nx * np)], p[(idx / nx) % np], xi[idx % nx]};
  }
};

SwapGrid build_swap_grid(Family f, int density, bool with_xgate) {
  constexpr double h = 0.5 * std::numbers::pi;
  SwapGrid g{f, linspace(0.0, 1.0, density), linspace(-h, h, density), {}};
  g.points.resize(g.p.size() * g.p.size() * g.xi.size());
  const double kappa = norm_per_probability();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(g.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      const auto q = g.params(idx);
      const DensityMatrix ab = density_matrix(make_family({f, q.p_ab}));
      const DensityMatrix cd = density_matrix(make_family({f, q.p_cd}));
      const MeasurementState m(q.xi);
      OraclePoint& o = g.points[idx];
      try {
        const OracleSwap s = swap_oracle(ab, cd, m);
        o.defined = true;
        o.bloch = fano_bloch(s.rho_ad);
        o.norm = kappa * s.prob;
        o.laqc = laqc_xstate(xstate_from_density(s.rho_ad)).closed;
        o.conc = concurrence(s.rho_ad);
      } catch (const UndefinedOutcome&) {
      }
      if (with_xgate) {
        try {
          o.xgate_conc = concurrence(swap_oracle_xgate_variant(ab, cd, m).rho_ad);
          o.xgate_defined = true;
        } catch (const UndefinedOutcome&) {
        }
      }
    } catch (...) {
#pragma omp critical(laqc_audit_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return g;
}

std::string cube(int n) {
  const std::string s = std::to_string(n);
  return s + "x" + s + "x" + s;
}

// Adds one post-swap entry. printed(q) gives the published values; truth(o)
// reads the matching oracle values.
void add_swap_entry(std::vector<AuditEntry>& out, const SwapGrid& g, int density, Target t,
                    const std::function<std::vector<double>(const rf::SwapParams&)>& printed,
                    const std::function<std::vector<double>(const OraclePoint&)>& truth,
                    bool xgate = false) {
  auto where = [&g](std::size_t i) {
    const auto q = g.params(i);
    return std::vector<double>{q.p_ab, q.p_cd, q.xi};
  };
  auto sample = [&](std::size_t i) {
    const OraclePoint& o = g.points[i];
    if (!(xgate ? o.xgate_defined : o.defined)) throw UndefinedOutcome("zero probability");
    return Sample{true, printed(g.params(i)), truth(o)};
  };
  out.push_back(evaluate(t, cube(density), g.size(), where, sample));
}

void add_static_entries(std::vector<AuditEntry>& out, Family f, const AuditGrid& grid) {
  const auto ps = linspace(0.0, 1.0, grid.family_points);
  const std::string name(to_string(f));
  const std::string gs = std::to_string(grid.family_points);
  auto where = [&ps](std::size_t i) { return std::vector<double>{ps[i]}; };

  out.push_back(evaluate({name + ".bloch", "family Bloch tuple", kBlochNames}, gs, ps.size(), where,
                         [&](std::size_t i) {
                           const FamilyPoint fp{f, ps[i]};
                           return Sample{true, as_vec(rf::family_bloch(fp)),
                                         as_vec(fano_bloch(density_matrix(make_family(fp))))};
                         }));
  out.push_back(evaluate({name + ".laqc", "family LAQC", {"laqc"}}, gs, ps.size(), where,
                         [&](std::size_t i) {
                           const FamilyPoint fp{f, ps[i]};
                           return Sample{true, {laqc_family(fp)}, {laqc_xstate(make_family(fp)).closed}};
                         }));
  out.push_back(evaluate({name + ".laqc.max_of_g", "max{g1, g2, g3} read literally", {"laqc"}}, gs,
                         ps.size(), where, [&](std::size_t i) {
                           const FamilyPoint fp{f, ps[i]};
                           return Sample{true, {laqc_xstate(make_family(fp)).literal_max},
                                         {laqc_family(fp)}};
                         }));
  out.push_back(evaluate({name + ".concurrence", "family concurrence", {"C"}}, gs, ps.size(), where,
                         [&](std::size_t i) {
                           const FamilyPoint fp{f, ps[i]};
                           return Sample{true, {concurrence_family(fp)},
                                         {concurrence(density_matrix(make_family(fp)))}};
                         }));
}

}  // namespace

std::vector<AuditEntry> audit_family(Family f, const AuditGrid& grid) {
  std::vector<AuditEntry> out;
  add_static_entries(out, f, grid);

  const int n = grid.density;
  const SwapGrid g = build_swap_grid(f, n, f == Family::alpha);
  const std::string name(to_string(f));
  auto bloch = [](const OraclePoint& o) { return as_vec(o.bloch); };
  auto bloch_raw = [](const OraclePoint& o) { return as_vec(o.bloch.scaled(o.norm)); };
  auto norm = [](const OraclePoint& o) { return std::vector<double>{o.norm}; };
  auto laqc = [](const OraclePoint& o) { return std::vector<double>{o.laqc}; };
  auto conc = [](const OraclePoint& o) { return std::vector<double>{o.conc}; };
  auto one = [](double v) { return std::vector<double>{v}; };

  switch (f) {
    case Family::werner:
      add_swap_entry(out, g, n, {"werner.swap.bloch", "post-swap Bloch tuple", kBlochNames},
                     [](const auto& q) { return as_vec(rf::werner_bloch(q)); }, bloch);
      add_swap_entry(out, g, n, {"werner.swap.laqc", "post-swap LAQC", {"laqc"}},
                     [&](const auto& q) { return one(rf::werner_laqc(q)); }, laqc);
      add_swap_entry(out, g, n, {"werner.swap.concurrence", "post-swap concurrence", {"C"}},
                     [&](const auto& q) { return one(rf::werner_concurrence(q)); }, conc);
      break;
    case Family::alpha:
      add_swap_entry(out, g, n, {"alpha.swap.bloch", "post-swap Bloch tuple", kBlochNames},
                     [](const auto& q) { return as_vec(rf::alpha_bloch(q)); }, bloch);
      add_swap_entry(out, g, n, {"alpha.swap.laqc", "post-swap LAQC", {"laqc"}},
                     [&](const auto& q) { return one(rf::alpha_laqc(q)); }, laqc);
      add_swap_entry(out, g, n, {"alpha.swap.concurrence_zero", "post-swap concurrence is 0", {"C"}},
                     [&](const auto& q) { return one(rf::alpha_concurrence(q)); }, conc);
      add_swap_entry(out, g, n,
                     {"alpha.swap_xgate.concurrence_zero", "concurrence is 0 with X on C", {"C"}},
                     [&](const auto& q) { return one(rf::alpha_concurrence(q)); },
                     [](const OraclePoint& o) { return std::vector<double>{o.xgate_conc}; }, true);
      break;
    case Family::beta:
      add_swap_entry(out, g, n, {"beta.swap.bloch", "post-swap Bloch tuple", kBlochNames},
                     [](const auto& q) { return as_vec(rf::beta_bloch(q)); }, bloch);
      add_swap_entry(out, g, n, {"beta.swap.laqc_g2", "post-swap LAQC as g2 of T2", {"laqc"}},
                     [&](const auto& q) { return one(rf::beta_laqc(q)); }, laqc);
      add_swap_entry(out, g, n, {"beta.swap.concurrence", "post-swap concurrence", {"C"}},
                     [&](const auto& q) { return one(rf::beta_concurrence(q)); }, conc);
      break;
    case Family::vv:
      add_swap_entry(out, g, n, {"vv.swap.bloch_raw", "unnormalized post-swap Bloch tuple", kBlochNames},
                     [](const auto& q) { return as_vec(rf::vv_bloch_raw(q)); }, bloch_raw);
      add_swap_entry(out, g, n, {"vv.swap.norm", "normalization N", {"N"}},
                     [&](const auto& q) { return one(rf::vv_norm(q)); }, norm);
      add_swap_entry(out, g, n, {"vv.swap.laqc", "post-swap LAQC", {"laqc"}},
                     [&](const auto& q) { return one(rf::vv_laqc(q)); }, laqc);
      add_swap_entry(out, g, n, {"vv.swap.concurrence", "post-swap concurrence", {"C"}},
                     [&](const auto& q) { return one(rf::vv_concurrence(q)); }, conc);
      break;
    case Family::mems:
      add_swap_entry(out, g, n,
                     {"mems.swap.bloch_raw", "unnormalized post-swap Bloch tuple", kBlochNames},
                     [](const auto& q) { return as_vec(rf::mems_bloch_raw(q)); }, bloch_raw);
      add_swap_entry(out, g, n, {"mems.swap.norm", "normalization N", {"N"}},
                     [&](const auto& q) { return one(rf::mems_norm(q)); }, norm);
      add_swap_entry(out, g, n, {"mems.swap.laqc", "post-swap LAQC", {"laqc"}},
                     [&](const auto& q) { return one(rf::mems_laqc(q)); }, laqc);
      add_swap_entry(out, g, n, {"mems.swap.concurrence_zero", "post-swap concurrence is 0", {"C"}},
                     [&](const auto& q) { return one(rf::mems_concurrence(q)); }, conc);
      break;
  }
  return out;
}

std::vector<AuditEntry> audit_general(const AuditGrid& grid) {
  const std::size_t n = static_cast<std::size_t>(grid.density) * grid.density * grid.density;
  const std::string gs = "random:" + std::to_string(n);

  // draw everything up front so the sample set does not depend on threads
  struct Pair {
    XState ab, cd;
    double xi;
  };
  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> angle(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    XState ab = random_xstate(rng);
    XState cd = random_xstate(rng);
    pairs.push_back({ab, cd, angle(rng)});
  }
  const double kappa = norm_per_probability();
  auto where = [&pairs](std::size_t i) {
    return std::vector<double>{static_cast<double>(i), pairs[i].xi};
  };
  auto oracle = [&pairs](std::size_t i) {
    return swap_oracle(density_matrix(pairs[i].ab), density_matrix(pairs[i].cd),
                       MeasurementState(pairs[i].xi));
  };

  std::vector<AuditEntry> out;
  out.push_back(evaluate(
      {"swap.general.bloch_raw", "unnormalized post-swap Bloch map", kBlochNames}, gs, n, where,
      [&](std::size_t i) {
        const OracleSwap s = oracle(i);
        const BlochX printed = rf::general_bloch_raw(bloch_from_xstate(pairs[i].ab),
                                                     bloch_from_xstate(pairs[i].cd), pairs[i].xi);
        return Sample{true, as_vec(printed), as_vec(fano_bloch(s.rho_ad).scaled(kappa * s.prob))};
      }));
  out.push_back(evaluate({"swap.general.norm", "normalization N", {"N"}}, gs, n, where,
                         [&](std::size_t i) {
                           const OracleSwap s = oracle(i);
                           return Sample{true,
                                         {rf::general_norm(bloch_from_xstate(pairs[i].ab),
                                                           bloch_from_xstate(pairs[i].cd), pairs[i].xi)},
                                         {kappa * s.prob}};
                         }));
  out.push_back(evaluate({"xstate.g3.prefactor", "z-basis term g3", {"g3"}}, gs, n, where,
                         [&](std::size_t i) {
                           const XState& x = pairs[i].ab;
                           const JointDistribution r({x.a(), x.b(), x.c(), x.d()});
                           return Sample{true, {laqc_xstate(x).g3_printed}, {mutual_information(r)}};
                         }));
  return out;
}

std::vector<AuditEntry> audit_all(const AuditGrid& grid) {
  std::vector<AuditEntry> out = audit_general(grid);
  for (Family f : {Family::werner, Family::alpha, Family::beta, Family::vv, Family::mems}) {
    auto part = audit_family(f, grid);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace laqc
