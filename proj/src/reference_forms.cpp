// SPDX-License-Identifier: Apache-2.0

#include "laqc/reference_forms.hpp"

#include <cmath>
#include <limits>

namespace laqc::reference_forms {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// g with no clamping: published arguments may leave [-1, 1].
double g_raw(double t) {
  if (!(std::abs(t) <= 1.0 + 1e-12)) return std::numeric_limits<double>::quiet_NaN();
  return 0.5 * (xlog2x(1.0 + t) + xlog2x(1.0 - t));
}

}  // namespace

BlochX general_bloch_raw(const BlochX& ab, const BlochX& cd, double xi) {
  const double c = std::cos(xi), s = std::sin(xi);
  return {(1.0 - cd.x3 * c) * ab.x3 + (c - cd.x3) * ab.T3,
          (ab.y3 * cd.y3 - cd.T3) * c + (cd.y3 - ab.y3 * cd.T3),
          ab.T1 * cd.T1 * s,
          ab.T2 * cd.T2 * s,
          (cd.y3 * c - cd.T3) * ab.T3 + (cd.y3 - cd.T3 * c) * ab.x3};
}

double general_norm(const BlochX& ab, const BlochX& cd, double xi) {
  return 1.0 + ab.y3 * cd.x3 + (ab.y3 + cd.x3) * std::cos(xi);
}

BlochX family_bloch(const FamilyPoint& f) {
  const double p = f.param;
  switch (f.family) {
    case Family::werner: return {0.0, 0.0, -p, -p, -p};
    case Family::alpha: return {0.0, 0.0, p, -p, 2.0 * p - 1.0};
    case Family::beta: return {0.0, 0.0, 1.0, 1.0 - 2.0 * p, -(1.0 - 2.0 * p)};
    case Family::vv: return {1.0 - p, 1.0 - p, -p, -p, 1.0 - 2.0 * p};
    case Family::mems: {
      const double g = gamma_cap(p);
      return {1.0 - 2.0 * g, -(1.0 - 2.0 * g), g, -g, 4.0 * g - 1.0};
    }
  }
  return {};
}

BlochX werner_bloch(const SwapParams& q) {
  const double c = std::cos(q.xi), s = std::sin(q.xi), zz = q.p_ab * q.p_cd;
  return {-q.p_ab * c, -q.p_cd * c, zz * s, -zz * s, zz};
}

double werner_laqc(const SwapParams& q) {
  const double u = q.p_ab * q.p_cd * std::sin(q.xi);
  return 0.5 * (xlog2x(1.0 + u) + xlog2x(1.0 - u));
}

double werner_concurrence(const SwapParams& q) {
  const double za = q.p_ab, zc = q.p_cd, s = std::sin(q.xi);
  const double root = std::sqrt((1.0 - za * za) * (1.0 - zc * zc) + (za - zc) * (za - zc) * s * s);
  return std::max(0.0, za * zc * std::abs(s) - 0.5 * root);
}

BlochX alpha_bloch(const SwapParams& q) {
  const double c = std::cos(q.xi), s = std::sin(q.xi), aa = q.p_ab * q.p_cd;
  return {(1.0 - 2.0 * q.p_ab) * c, (1.0 - 2.0 * q.p_cd) * c, aa * s, aa * s,
          (1.0 - 2.0 * q.p_ab) * (1.0 - 2.0 * q.p_cd)};
}

double alpha_laqc(const SwapParams& q) {
  const double u = q.p_ab * q.p_cd * std::sin(q.xi);
  return 0.5 * (xlog2x(1.0 + u) + xlog2x(1.0 - u));
}

BlochX beta_bloch(const SwapParams& q) {
  const double c = std::cos(q.xi), s = std::sin(q.xi);
  const double ua = 1.0 - 2.0 * q.p_ab, uc = 1.0 - 2.0 * q.p_cd;
  return {ua * c, uc * c, s, -ua * uc * s, ua * uc};
}

double beta_laqc(const SwapParams& q) { return g_raw(beta_bloch(q).T2); }

double beta_concurrence(const SwapParams& q) {
  const double ba = q.p_ab, bc = q.p_cd, s = std::sin(q.xi);
  const double lead = std::abs(s) * std::abs((2.0 * ba - 1.0) * bc + 1.0 - ba);
  const double root =
      std::sqrt((ba - bc) * (ba - bc) * s * s + 4.0 * ba * bc * (1.0 - ba) * (1.0 - bc));
  return std::max(0.0, lead - root);
}

BlochX vv_bloch_raw(const SwapParams& q) {
  const double fa = q.p_ab, fc = q.p_cd, c1 = 1.0 + std::cos(q.xi), s = std::sin(q.xi);
  const double ff = fa * fc;
  return {(2.0 - (3.0 - fc) * fa - fc) * c1 + ff,
          (2.0 - (3.0 - fa) * fc - fa) * c1 + ff,
          ff * s,
          -ff * s,
          (2.0 - (3.0 - 4.0 * fc) * fa - 3.0 * fc) * c1 + ff};
}

double vv_norm(const SwapParams& q) {
  const double fa = q.p_ab, fc = q.p_cd;
  return 1.0 + (1.0 - fa) * (1.0 - fc) + (2.0 - (fa + fc)) * std::cos(q.xi);
}

double vv_laqc(const SwapParams& q) { return g_raw(vv_bloch_raw(q).T1 / vv_norm(q)); }

double vv_concurrence(const SwapParams& q) {
  const double fa = q.p_ab, fc = q.p_cd, c = std::cos(q.xi), s = std::sin(q.xi);
  const double c1 =
      0.25 * fa * fc * std::abs(s) - (1.0 - c) * std::sqrt(fa * fc * (1.0 - fa) * (1.0 - fc));
  return std::max(0.0, c1) / vv_norm(q);
}

BlochX mems_bloch_raw(const SwapParams& q) {
  const double ga = gamma_cap(q.p_ab), gc = gamma_cap(q.p_cd);
  const double c1 = 1.0 + std::cos(q.xi), s = std::sin(q.xi);
  return {((1.0 + 2.0 * gc) * ga - gc) * c1 + 2.0 * (1.0 - 3.0 * ga) * gc,
          ((1.0 + 2.0 * ga) * gc - ga) * c1 - 2.0 * (1.0 - ga) * gc,
          0.5 * q.p_ab * q.p_cd * s,
          0.5 * q.p_ab * q.p_cd * s,
          (gc - ga) * c1 - 2.0 * (1.0 - 3.0 * ga) * gc};
}

double mems_norm(const SwapParams& q) {
  const double ga = gamma_cap(q.p_ab), gc = gamma_cap(q.p_cd);
  return (ga - gc) * (1.0 + std::cos(q.xi)) + 2.0 * (1.0 - ga) * gc;
}

double mems_laqc(const SwapParams& q) { return g_raw(mems_bloch_raw(q).T1 / mems_norm(q)); }

}  // namespace laqc::reference_forms
