// SPDX-License-Identifier: Apache-2.0
//
// Correlation swapping: pairs AB and CD are prepared independently, qubits
// B and C are projected onto
//     |phi> = cos(xi/2)|00> + sin(xi/2)|11>,     xi in [-pi/2, pi/2],
// and the conditional state of A and D is kept.
//
// swap_bloch is the closed-form Bloch map for X-state inputs. swap_oracle
// builds the 16x16 product state and projects it; it is the reference the
// closed form is checked against.

#pragma once

#include <array>
#include <stdexcept>

#include "laqc/correlations.hpp"
#include "laqc/qmat.hpp"
#include "laqc/xstate.hpp"

namespace laqc {

inline constexpr double kTolProb = 1e-12;

/// The BC projection has (numerically) zero probability, so the
/// conditional AD state is undefined.
class UndefinedOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MeasurementState {
 public:
  /// Throws DomainError outside [-pi/2, pi/2].
  explicit MeasurementState(double xi);

  double xi() const noexcept { return xi_; }

  /// Amplitudes on |00>,|01>,|10>,|11> of B,C. With x_gate the state is
  /// (I (x) X)|phi> = cos(xi/2)|01> + sin(xi/2)|10>.
  std::array<cplx, 4> amplitudes(bool x_gate = false) const;

 private:
  double xi_;
};

struct SwapOutcome {
  BlochX raw;          // before normalization
  double norm = 0.0;   // N
  BlochX normalized;   // raw / N
  double prob = 0.0;   // probability of the BC projection
  double u_v = 0.0;    // normalized T1
};

/// Unnormalized post-measurement Bloch parameters:
///   x3 = (1 + x3' cos) x3 + (cos + x3') T3
///   y3 = (y3 y3' + T3') cos + (y3' + y3 T3')
///   T1 = T1 T1' sin,   T2 = -T2 T2' sin
///   T3 = (y3' cos + T3') T3 + (y3' + T3' cos) x3
///   N  = 1 + y3 x3' + (y3 + x3') cos
/// with unprimed = AB, primed = CD.
BlochX swap_bloch_raw(const BlochX& ab, const BlochX& cd, const MeasurementState& m);
double swap_norm(const BlochX& ab, const BlochX& cd, const MeasurementState& m);

/// N divided by the outcome probability, measured once per process from
/// the 16x16 oracle on a fixed reference pair.
double norm_per_probability();

/// Throws UndefinedOutcome when N <= kTolProb.
SwapOutcome swap_bloch(const BlochX& ab, const BlochX& cd, const MeasurementState& m);

struct OracleSwap {
  DensityMatrix rho_ad;
  double prob = 0.0;
};

/// Projects rhoAB (x) rhoCD with I (x) |phi><phi| (x) I. Throws
/// UndefinedOutcome when the probability is <= kTolProb.
OracleSwap swap_oracle(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                       const MeasurementState& m);

/// Same with the measurement state (I (x) X)|phi>.
OracleSwap swap_oracle_xgate_variant(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                                     const MeasurementState& m);

/// Unnormalized projected 16x16 operator P rho P.
DensityMatrix project_bc(const DensityMatrix& rho_abcd, const std::array<cplx, 4>& phi);

struct FamilySwap {
  SwapOutcome outcome;
  XState state;          // normalized AD state
  XStateLaqc laqc;       // closed-form pieces; laqc.closed is the LAQC
  double concurrence = 0.0;
};

/// Post-swap state of two members of the same family. Throws
/// std::invalid_argument for mismatched families.
FamilySwap swap_family(const FamilyPoint& ab, const FamilyPoint& cd, const MeasurementState& m);

/// Same pipeline on arbitrary X states.
FamilySwap swap_xstates(const XState& ab, const XState& cd, const MeasurementState& m);

}  // namespace laqc
