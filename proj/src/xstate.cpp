// SPDX-License-Identifier: Apache-2.0

#include "laqc/xstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace laqc {

double BlochX::max_abs_diff(const BlochX& o) const {
  return std::max({std::abs(x3 - o.x3), std::abs(y3 - o.y3), std::abs(T1 - o.T1),
                   std::abs(T2 - o.T2), std::abs(T3 - o.T3)});
}

std::optional<std::string> XState::check(double a, double b, double c, double d, double r,
                                         double s, double tol) {
  auto fmt = [](const char* what, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << " (value " << v << ")";
    return os.str();
  };
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d) &&
        std::isfinite(r) && std::isfinite(s)))
    return std::string("non-finite entry");
  if (a < -tol) return fmt("population a < 0", a);
  if (b < -tol) return fmt("population b < 0", b);
  if (c < -tol) return fmt("population c < 0", c);
  if (d < -tol) return fmt("population d < 0", d);
  const double sum = a + b + c + d;
  if (std::abs(sum - 1.0) > tol) return fmt("a+b+c+d != 1", sum);
  const double rmax = std::sqrt(std::max(a, 0.0) * std::max(d, 0.0));
  const double smax = std::sqrt(std::max(b, 0.0) * std::max(c, 0.0));
  if (std::abs(r) > rmax + tol) return fmt("|r| > sqrt(ad)", r);
  if (std::abs(s) > smax + tol) return fmt("|s| > sqrt(bc)", s);
  return std::nullopt;
}

XState XState::make(double a, double b, double c, double d, double r, double s) {
  if (auto err = check(a, b, c, d, r, s)) throw InvalidState("invalid X state: " + *err);
  return XState(a, b, c, d, r, s);
}

DensityMatrix phased_density_matrix(double a, double b, double c, double d, double r, double chi,
                                    double s, double xi_ph) {
  DensityMatrix m(4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(0, 3) = std::polar(r, chi);
  m(3, 0) = std::polar(r, -chi);
  m(1, 2) = std::polar(s, xi_ph);
  m(2, 1) = std::polar(s, -xi_ph);
  return m;
}

CMatrix phase_stripping_unitary(double chi, double xi_ph) {
  // diag(1,e^{ip}) (x) diag(1,e^{iq}) multiplies rho_03 by e^{-i(p+q)} and
  // rho_12 by e^{i(q-p)}; p+q = chi and p-q = xi_ph remove both phases.
  const double p = 0.5 * (chi + xi_ph);
  const double q = 0.5 * (chi - xi_ph);
  CMatrix ua = CMatrix::Identity(2, 2);
  CMatrix ub = CMatrix::Identity(2, 2);
  ua(1, 1) = std::polar(1.0, p);
  ub(1, 1) = std::polar(1.0, q);
  return kron(ua, ub);
}

XState canonicalize_phases(double a, double b, double c, double d, double r, double chi, double s,
                           double xi_ph) {
  if (r < 0.0 || s < 0.0) throw InvalidState("canonicalize_phases: moduli r, s must be >= 0");
  if (!std::isfinite(chi) || !std::isfinite(xi_ph))
    throw InvalidState("canonicalize_phases: non-finite phase");
  // The stripping unitary is diagonal, so populations and moduli carry over.
  return XState::make(a, b, c, d, r, s);
}

BlochX bloch_from_xstate(const XState& x) {
  return {x.a() + x.b() - x.c() - x.d(), x.a() - x.b() + x.c() - x.d(), 2.0 * (x.s() + x.r()),
          2.0 * (x.s() - x.r()), x.a() - x.b() - x.c() + x.d()};
}

XState xstate_from_bloch(const BlochX& p) {
  const double a = 0.25 * (1.0 + p.x3 + p.y3 + p.T3);
  const double b = 0.25 * (1.0 + p.x3 - p.y3 - p.T3);
  const double c = 0.25 * (1.0 - p.x3 + p.y3 - p.T3);
  const double d = 0.25 * (1.0 - p.x3 - p.y3 + p.T3);
  const double r = 0.25 * (p.T1 - p.T2);
  const double s = 0.25 * (p.T1 + p.T2);
  if (auto err = XState::check(a, b, c, d, r, s))
    throw InvalidState("Bloch tuple outside the physical X-state region: " + *err);
  return XState::make(a, b, c, d, r, s);
}

DensityMatrix density_matrix(const XState& x) {
  DensityMatrix m(4);
  m(0, 0) = x.a();
  m(1, 1) = x.b();
  m(2, 2) = x.c();
  m(3, 3) = x.d();
  m(0, 3) = m(3, 0) = x.r();
  m(1, 2) = m(2, 1) = x.s();
  return m;
}

double off_x_residual(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("off_x_residual: expected 4x4");
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on = (i == j) || (i + j == 3);
      if (!on) worst = std::max(worst, std::abs(rho(i, j)));
    }
  return worst;
}

XState xstate_from_density(const DensityMatrix& rho, double tol) {
  const double off = off_x_residual(rho);
  if (off > tol) throw InvalidState("not of X form: off-pattern entry " + std::to_string(off));
  const double im = std::max(std::abs(rho(0, 3).imag()), std::abs(rho(1, 2).imag()));
  if (im > tol) throw InvalidState("X state has complex coherences; canonicalize first");
  return XState::make(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(),
                      0.5 * (rho(0, 3) + rho(3, 0)).real(), 0.5 * (rho(1, 2) + rho(2, 1)).real());
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::werner: return "werner";
    case Family::alpha: return "alpha";
    case Family::beta: return "beta";
    case Family::vv: return "vv";
    case Family::mems: return "mems";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::werner, Family::alpha, Family::beta, Family::vv, Family::mems})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

double gamma_cap(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw DomainError("gamma_cap: gamma must lie in [0,1]");
  return gamma < 2.0 / 3.0 ? 1.0 / 3.0 : gamma / 2.0;
}

void check_family_domain(const FamilyPoint& f) {
  if (!(f.param >= 0.0 && f.param <= 1.0))
    throw DomainError(std::string(to_string(f.family)) + ": parameter " + std::to_string(f.param) +
                      " outside [0,1]");
}

XState make_family(const FamilyPoint& f) {
  check_family_domain(f);
  const double p = f.param;
  switch (f.family) {
    case Family::werner:
      // z|psi-><psi-| + (1-z)/4 I
      return XState::make((1 - p) / 4, (1 + p) / 4, (1 + p) / 4, (1 - p) / 4, 0.0, -p / 2);
    case Family::alpha:
      return XState::make(p / 2, (1 - p) / 2, (1 - p) / 2, p / 2, p / 2, 0.0);
    case Family::beta:
      return XState::make(p / 2, (1 - p) / 2, (1 - p) / 2, p / 2, p / 2, (1 - p) / 2);
    case Family::vv:
      // F|psi-><psi-| + (1-F)|00><00|
      return XState::make(1 - p, p / 2, p / 2, 0.0, 0.0, -p / 2);
    case Family::mems: {
      const double g = gamma_cap(p);
      return XState::make(g, 1 - 2 * g, 0.0, g, p / 2, 0.0);
    }
  }
  throw std::logic_error("make_family: unhandled family");
}

XState random_xstate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> w{};
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - u(rng));  // exponential weights give a flat simplex
    sum += x;
  }
  for (double& x : w) x /= sum;
  const double r = (2.0 * u(rng) - 1.0) * std::sqrt(w[0] * w[3]);
  const double s = (2.0 * u(rng) - 1.0) * std::sqrt(w[1] * w[2]);
  return XState::make(w[0], w[1], w[2], w[3], r, s);
}

}  // namespace laqc
