// SPDX-License-Identifier: Apache-2.0

#include "laqc/swap.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace laqc {

MeasurementState::MeasurementState(double xi) : xi_(xi) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  // accept a few ulps of slack so that grids built as lo + k*step reach the ends
  if (!(std::abs(xi) <= kHalfPi * (1.0 + 1e-14)))
    throw DomainError("measurement angle xi = " + std::to_string(xi) + " outside [-pi/2, pi/2]");
}

std::array<cplx, 4> MeasurementState::amplitudes(bool x_gate) const {
  const double c = std::cos(0.5 * xi_), s = std::sin(0.5 * xi_);
  if (x_gate) return {0.0, c, s, 0.0};
  return {c, 0.0, 0.0, s};
}

BlochX swap_bloch_raw(const BlochX& ab, const BlochX& cd, const MeasurementState& m) {
  const double c = std::cos(m.xi()), s = std::sin(m.xi());
  BlochX r;
  r.x3 = (1.0 + cd.x3 * c) * ab.x3 + (c + cd.x3) * ab.T3;
  r.y3 = (ab.y3 * cd.y3 + cd.T3) * c + (cd.y3 + ab.y3 * cd.T3);
  r.T1 = ab.T1 * cd.T1 * s;
  r.T2 = -ab.T2 * cd.T2 * s;
  r.T3 = (cd.y3 * c + cd.T3) * ab.T3 + (cd.y3 + cd.T3 * c) * ab.x3;
  return r;
}

double swap_norm(const BlochX& ab, const BlochX& cd, const MeasurementState& m) {
  return 1.0 + ab.y3 * cd.x3 + (ab.y3 + cd.x3) * std::cos(m.xi());
}

DensityMatrix project_bc(const DensityMatrix& rho_abcd, const std::array<cplx, 4>& phi) {
  if (rho_abcd.dim() != 16) throw DimensionError("project_bc: expected 16x16");
  // P = I_A (x) |phi><phi| (x) I_D
  const CMatrix v = Eigen::Map<const Eigen::Vector4cd>(phi.data());
  const CMatrix p = kron(kron(CMatrix::Identity(2, 2), CMatrix(v * v.adjoint())),
                         CMatrix::Identity(2, 2));
  return DensityMatrix(CMatrix(p * rho_abcd.matrix() * p));
}

namespace {

OracleSwap project_and_reduce(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                              const std::array<cplx, 4>& phi) {
  if (rho_ab.dim() != 4 || rho_cd.dim() != 4)
    throw DimensionError("swap_oracle: expected two 4x4 density matrices");
  const DensityMatrix projected = project_bc(kron(rho_ab, rho_cd), phi);
  const double prob = projected.trace().real();
  if (!(prob > kTolProb))
    throw UndefinedOutcome("BC projection has probability " + std::to_string(prob));
  return {partial_trace_BC(projected).scaled(1.0 / prob), prob};
}

}  // namespace

OracleSwap swap_oracle(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                       const MeasurementState& m) {
  return project_and_reduce(rho_ab, rho_cd, m.amplitudes(false));
}

OracleSwap swap_oracle_xgate_variant(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                                     const MeasurementState& m) {
  return project_and_reduce(rho_ab, rho_cd, m.amplitudes(true));
}

double norm_per_probability() {
  static const double ratio = [] {
    // generic full-rank X states so that no term of N vanishes
    const XState ab = XState::make(0.4, 0.3, 0.2, 0.1, 0.1, -0.05);
    const XState cd = XState::make(0.15, 0.25, 0.35, 0.25, 0.12, 0.2);
    const MeasurementState m(0.3);
    const double prob = swap_oracle(density_matrix(ab), density_matrix(cd), m).prob;
    return swap_norm(bloch_from_xstate(ab), bloch_from_xstate(cd), m) / prob;
  }();
  return ratio;
}

SwapOutcome swap_bloch(const BlochX& ab, const BlochX& cd, const MeasurementState& m) {
  SwapOutcome o;
  o.raw = swap_bloch_raw(ab, cd, m);
  o.norm = swap_norm(ab, cd, m);
  if (!(o.norm > kTolProb))
    throw UndefinedOutcome("normalization factor N = " + std::to_string(o.norm));
  o.normalized = o.raw.scaled(1.0 / o.norm);
  o.prob = o.norm / norm_per_probability();
  o.u_v = o.normalized.T1;
  return o;
}

FamilySwap swap_xstates(const XState& ab, const XState& cd, const MeasurementState& m) {
  const SwapOutcome o = swap_bloch(bloch_from_xstate(ab), bloch_from_xstate(cd), m);
  const XState ad = xstate_from_bloch(o.normalized);
  return {o, ad, laqc_xstate(ad), concurrence(density_matrix(ad))};
}

FamilySwap swap_family(const FamilyPoint& ab, const FamilyPoint& cd, const MeasurementState& m) {
  if (ab.family != cd.family)
    throw std::invalid_argument("swap_family: both pairs must come from the same family");
  return swap_xstates(make_family(ab), make_family(cd), m);
}

}  // namespace laqc
