// SPDX-License-Identifier: Apache-2.0

#include "laqc/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <Eigen/SVD>
#include <boost/math/tools/roots.hpp>

namespace laqc {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Columns are the rotated basis vectors |0~>, |1~>.
Mat2 local_rotation(double theta, double phi) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const cplx e = std::polar(1.0, phi);
  Mat2 u;
  u << c, s, s * e, -c * e;
  return u;
}

Mat2 complementary_rotation(double phase) {
  const cplx e = std::polar(1.0, phase);
  Mat2 u;
  u << 1.0, 1.0, e, -e;
  return u / std::numbers::sqrt2;
}

Mat4 as_fixed(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("expected a two-qubit density matrix");
  return rho.matrix();
}

// R_ij = <v_i w_j| rho |v_i w_j> for the columns v of ua and w of ub.
std::array<double, 4> readout(const Mat4& rho, const Mat2& ua, const Mat2& ub) {
  std::array<double, 4> p{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Eigen::Vector4cd v;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) v(2 * a + b) = ua(a, i) * ub(b, j);
      p[static_cast<std::size_t>(2 * i + j)] = v.dot(rho * v).real();
    }
  return p;
}

double readout_mi(const Mat4& rho, const Mat2& ua, const Mat2& ub) {
  return mutual_information(JointDistribution(readout(rho, ua, ub)));
}

LocalBasisAngles angles_from_directions(const Eigen::Vector3d& na, const Eigen::Vector3d& nb) {
  auto to_angles = [](const Eigen::Vector3d& n, double& theta, double& phi) {
    const Eigen::Vector3d u = n.normalized();
    theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    phi = wrap_2pi(std::atan2(u.y(), u.x()));
  };
  LocalBasisAngles a;
  to_angles(na, a.theta_a, a.phi_a);
  to_angles(nb, a.theta_b, a.phi_b);
  return a;
}

}  // namespace

LocalBasisAngles LocalBasisAngles::canonical() const {
  auto fold = [](double theta, double phi, double& t, double& p) {
    t = wrap_2pi(theta);
    p = phi;
    if (t > std::numbers::pi) {
      t = kTwoPi - t;
      p += std::numbers::pi;
    }
    p = wrap_2pi(p);
  };
  LocalBasisAngles out;
  fold(theta_a, phi_a, out.theta_a, out.phi_a);
  fold(theta_b, phi_b, out.theta_b, out.phi_b);
  return out;
}

ComplementaryPhases ComplementaryPhases::canonical() const {
  return {wrap_2pi(phase_a), wrap_2pi(phase_b)};
}

JointDistribution::JointDistribution(std::array<double, 4> p) : p_(p) {
  double sum = 0.0;
  for (double& x : p_) {
    if (!std::isfinite(x) || x < -kTol)
      throw std::invalid_argument("JointDistribution: negative or non-finite probability " +
                                  std::to_string(x));
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (std::abs(sum - 1.0) > kTol)
    throw std::invalid_argument("JointDistribution: probabilities sum to " + std::to_string(sum));
}

double mutual_information(const JointDistribution& r) {
  double mi = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double p = r(i, j);
      if (p <= 0.0) continue;
      mi += p * std::log2(p / (r.marginal_a(i) * r.marginal_b(j)));
    }
  // rounding can leave -1e-17 for product distributions
  return std::max(mi, 0.0);
}

JointDistribution classical_state_probs(const DensityMatrix& rho, const LocalBasisAngles& ang) {
  return JointDistribution(readout(as_fixed(rho), local_rotation(ang.theta_a, ang.phi_a),
                                   local_rotation(ang.theta_b, ang.phi_b)));
}

JointDistribution complementary_probs(const DensityMatrix& rho, const LocalBasisAngles& ang,
                                      const ComplementaryPhases& ph) {
  const Mat2 ua = local_rotation(ang.theta_a, ang.phi_a) * complementary_rotation(ph.phase_a);
  const Mat2 ub = local_rotation(ang.theta_b, ang.phi_b) * complementary_rotation(ph.phase_b);
  return JointDistribution(readout(as_fixed(rho), ua, ub));
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const OracleOptions& opt) {
  const Mat4 m = as_fixed(rho);
  const Objective f = [&m](std::span<const double> x) {
    return readout_mi(m, local_rotation(x[0], x[2]), local_rotation(x[1], x[3]));
  };
  const std::array<GridAxis, 4> axes{{{0.0, std::numbers::pi, opt.theta_steps, false},
                                      {0.0, std::numbers::pi, opt.theta_steps, false},
                                      {0.0, kTwoPi, opt.phi_steps, true},
                                      {0.0, kTwoPi, opt.phi_steps, true}}};
  const GridResult g = minimize_on_grid(f, axes, opt.search);
  ClassicalCorrelation out;
  out.value = g.value;
  out.angles = LocalBasisAngles{g.x[0], g.x[1], g.x[2], g.x[3]}.canonical();
  out.evaluations = g.evaluations;
  return out;
}

ComplementaryMax maximize_complementary(const DensityMatrix& rho, const LocalBasisAngles& basis,
                                        const OracleOptions& opt) {
  const Mat4 m = as_fixed(rho);
  const Mat2 ra = local_rotation(basis.theta_a, basis.phi_a);
  const Mat2 rb = local_rotation(basis.theta_b, basis.phi_b);
  const Objective f = [&](std::span<const double> x) {
    return -readout_mi(m, ra * complementary_rotation(x[0]), rb * complementary_rotation(x[1]));
  };
  const std::array<GridAxis, 2> axes{{{0.0, kTwoPi, opt.complementary_steps, true},
                                      {0.0, kTwoPi, opt.complementary_steps, true}}};
  const GridResult g = minimize_on_grid(f, axes, opt.search);
  return {std::max(-g.value, 0.0), ComplementaryPhases{g.x[0], g.x[1]}.canonical()};
}

std::array<LocalBasisAngles, 3> principal_axis_bases(const DensityMatrix& rho) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  if (off_x_residual(rho) <= 1e-12) {
    return {{{kHalfPi, kHalfPi, 0.0, 0.0},
             {kHalfPi, kHalfPi, kHalfPi, kHalfPi},
             {0.0, 0.0, 0.0, 0.0}}};
  }
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j) = fano_component(rho, i + 1, j + 1);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  std::array<LocalBasisAngles, 3> out;
  for (int k = 0; k < 3; ++k)
    out[static_cast<std::size_t>(k)] =
        angles_from_directions(svd.matrixU().col(k), svd.matrixV().col(k));
  return out;
}

OracleResult laqc_oracle(const DensityMatrix& rho, OracleMode mode, const OracleOptions& opt) {
  OracleResult out;
  if (mode == OracleMode::literal) {
    const ClassicalCorrelation cc = classical_correlation(rho, opt);
    out.classical = cc.value;
    out.basis = cc.angles;
  } else {
    const auto candidates = principal_axis_bases(rho);
    double best = -1.0;
    for (const auto& c : candidates) {
      const double mi = mutual_information(classical_state_probs(rho, c));
      // strict: ties keep the earlier axis
      if (mi > best) {
        best = mi;
        out.basis = c;
      }
    }
    out.classical = best;
  }
  const ComplementaryMax cm = maximize_complementary(rho, out.basis, opt);
  out.value = cm.value;
  out.phases = cm.phases;
  return out;
}

double g_function(double T) {
  constexpr double kClamp = 1e-12;
  if (!(std::abs(T) <= 1.0 + kClamp))
    throw DomainError("g_function: |T| = " + std::to_string(std::abs(T)) + " exceeds 1");
  T = std::clamp(T, -1.0, 1.0);
  // (1+T)/2 log2(1+T) = xlog2x(1+T)/2
  return 0.5 * (xlog2x(1.0 + T) + xlog2x(1.0 - T));
}

double g3_with_prefactor(const XState& x, double prefactor) {
  const BlochX p = bloch_from_xstate(x);
  auto term = [](double pop, double num, double den) {
    if (pop <= 0.0) return 0.0;
    return pop * std::log2(num / den);
  };
  const double sum = term(x.a(), 1 + p.x3 + p.y3 + p.T3, (1 + p.x3) * (1 + p.y3)) +
                     term(x.b(), 1 + p.x3 - p.y3 - p.T3, (1 + p.x3) * (1 - p.y3)) +
                     term(x.c(), 1 - p.x3 + p.y3 - p.T3, (1 - p.x3) * (1 + p.y3)) +
                     term(x.d(), 1 - p.x3 - p.y3 + p.T3, (1 - p.x3) * (1 - p.y3));
  return prefactor * sum;
}

XStateLaqc laqc_xstate(const XState& x) {
  const BlochX p = bloch_from_xstate(x);
  XStateLaqc out;
  out.g1 = g_function(p.T1);
  out.g2 = g_function(p.T2);
  out.g3 = std::max(g3_with_prefactor(x, 1.0), 0.0);
  out.g3_printed = g3_with_prefactor(x, 0.25);
  const std::array<double, 3> g{out.g1, out.g2, out.g3};
  int top = 0;
  for (int k = 1; k < 3; ++k)
    if (g[static_cast<std::size_t>(k)] > g[static_cast<std::size_t>(top)]) top = k;
  out.excluded = top;
  out.literal_max = g[static_cast<std::size_t>(top)];
  double rest = 0.0;
  for (int k = 0; k < 3; ++k)
    if (k != top) rest = std::max(rest, g[static_cast<std::size_t>(k)]);
  out.closed = rest;
  return out;
}

double laqc_family(const FamilyPoint& f) {
  check_family_domain(f);
  const double p = f.param;
  switch (f.family) {
    case Family::werner:
    case Family::alpha:
    case Family::vv:
    case Family::mems:
      return 0.5 * (xlog2x(1.0 + p) + xlog2x(1.0 - p));
    case Family::beta:
      return 1.0 + xlog2x(p) + xlog2x(1.0 - p);
  }
  throw std::logic_error("laqc_family: unhandled family");
}

double concurrence_family(const FamilyPoint& f) {
  check_family_domain(f);
  const double p = f.param;
  switch (f.family) {
    case Family::werner: return std::max(0.0, 0.5 * (3.0 * p - 1.0));
    case Family::alpha: return std::max(0.0, 2.0 * p - 1.0);
    case Family::beta: return std::abs(1.0 - 2.0 * p);
    case Family::vv: return p;
    case Family::mems: return p;
  }
  throw std::logic_error("concurrence_family: unhandled family");
}

double concurrence(const DensityMatrix& rho) {
  const Mat4 m = as_fixed(rho);
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kTolHerm) throw NotHermitian("concurrence: residual " + std::to_string(herm));
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (m + m.adjoint()));
  Eigen::Vector4d ev = es.eigenvalues();
  if (ev.minCoeff() < -kTolPsd)
    throw NotPositive("concurrence: eigenvalue " + std::to_string(ev.minCoeff()));
  // Round-off zeros would otherwise turn into ~1e-8 after the square root.
  for (int k = 0; k < 4; ++k) ev(k) = ev(k) <= 1e-13 ? 0.0 : std::sqrt(ev(k));
  const Mat4 root = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  Mat4 yy = Mat4::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  // lambda_i of rho (yy) rho* (yy) are the singular values of root (yy) root*
  const Mat4 w = root * yy * root.conjugate();
  Eigen::JacobiSVD<Mat4> svd(w);
  const auto& s = svd.singularValues();
  return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

CorrelationReport correlation_report(const XState& x, bool run_oracle, const OracleOptions& opt) {
  CorrelationReport r;
  const XStateLaqc l = laqc_xstate(x);
  r.laqc_closed = l.closed;
  r.laqc_literal_max = l.literal_max;
  r.g_values = {l.g1, l.g2, l.g3};
  const DensityMatrix rho = density_matrix(x);
  r.concurrence = concurrence(rho);
  if (run_oracle) {
    const OracleResult c = laqc_oracle(rho, OracleMode::constructive, opt);
    const OracleResult lit = laqc_oracle(rho, OracleMode::literal, opt);
    r.laqc_oracle = c.value;
    r.laqc_oracle_literal = lit.value;
    r.classical_corr = lit.classical;
    r.basis = c.basis;
    r.phases = c.phases;
    r.oracle_run = true;
  }
  return r;
}

double alpha_crossing() {
  auto h = [](double a) {
    return laqc_family({Family::alpha, a}) - concurrence_family({Family::alpha, a});
  };
  // h > 0 at 1/2 and h < 0 at 0.9; the other zero sits at alpha = 1
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      h, 0.5, 0.9, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (lo + hi);
}

}  // namespace laqc
