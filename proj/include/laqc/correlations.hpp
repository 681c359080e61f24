// SPDX-License-Identifier: Apache-2.0
//
// Correlation quantifiers for two-qubit states.
//
// Local-available quantum correlations (LAQC) are computed two ways:
//
//  * laqc_oracle works on a density matrix. It picks a computational
//    product basis, then maximizes the mutual information of the state read
//    out in a basis mutually unbiased to it, over the two free phases.
//  * laqc_xstate is the closed form for X states in terms of
//        g(T)  = (1+T)/2 log2(1+T) + (1-T)/2 log2(1-T)
//        g1 = g(T1), g2 = g(T2), g3 = z-basis mutual information.
//    g1, g2, g3 are the classical correlations read along the x, y and z
//    axes. The computational basis is the axis with the largest of them;
//    the LAQC is the largest of the other two.

#pragma once

#include <array>
#include <cstddef>

#include "laqc/optimize.hpp"
#include "laqc/qmat.hpp"
#include "laqc/xstate.hpp"

namespace laqc {

/// Product basis |i~ j~> from the local rotations
///   U = [[cos(t/2), sin(t/2)], [sin(t/2) e^{ip}, -cos(t/2) e^{ip}]].
struct LocalBasisAngles {
  double theta_a = 0.0;  // [0, pi]
  double theta_b = 0.0;
  double phi_a = 0.0;    // [0, 2 pi)
  double phi_b = 0.0;

  /// Folds arbitrary optimizer output back into the canonical ranges
  /// without changing the basis (up to relabeling and phases).
  LocalBasisAngles canonical() const;
};

/// Phases of the basis complementary to a computational basis:
///   U_hat = 1/sqrt2 [[1, 1], [e^{iP}, -e^{iP}]].
struct ComplementaryPhases {
  double phase_a = 0.0;  // [0, 2 pi)
  double phase_b = 0.0;

  ComplementaryPhases canonical() const;
};

/// Joint distribution of two binary outcomes, p[2*i + j].
class JointDistribution {
 public:
  static constexpr double kTol = 1e-12;

  /// Throws std::invalid_argument if the entries do not sum to one or an
  /// entry is below -kTol. Entries in (-kTol, 0) are clamped to zero.
  explicit JointDistribution(std::array<double, 4> p);

  double operator()(int i, int j) const { return p_[static_cast<std::size_t>(2 * i + j)]; }
  double marginal_a(int i) const { return (*this)(i, 0) + (*this)(i, 1); }
  double marginal_b(int j) const { return (*this)(0, j) + (*this)(1, j); }
  const std::array<double, 4>& probs() const { return p_; }

 private:
  std::array<double, 4> p_;
};

/// Mutual information in bits; 0 log 0 = 0.
double mutual_information(const JointDistribution& r);

JointDistribution classical_state_probs(const DensityMatrix& rho, const LocalBasisAngles& ang);

/// Readout in the basis U(ang) U_hat(phases), complementary to ang.
JointDistribution complementary_probs(const DensityMatrix& rho, const LocalBasisAngles& ang,
                                      const ComplementaryPhases& ph);

struct OracleOptions {
  int theta_steps = 17;          // closed grid on [0, pi]
  int phi_steps = 9;             // periodic grid on [0, 2 pi)
  int complementary_steps = 64;  // per phase, periodic
  SearchOptions search{};
};

struct ClassicalCorrelation {
  double value = 0.0;
  LocalBasisAngles angles{};
  std::size_t evaluations = 0;
};

/// Global minimum over all product bases of the readout mutual information.
/// For X states this is generically 0 on a continuum of bases.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const OracleOptions& opt = {});

struct ComplementaryMax {
  double value = 0.0;
  ComplementaryPhases phases{};
};

ComplementaryMax maximize_complementary(const DensityMatrix& rho, const LocalBasisAngles& basis,
                                        const OracleOptions& opt = {});

enum class OracleMode {
  literal,       // computational basis = global minimizer of the readout MI
  constructive,  // computational basis = principal axis with the largest readout MI
};

struct OracleResult {
  double value = 0.0;
  double classical = 0.0;  // readout MI in the chosen computational basis
  LocalBasisAngles basis{};
  ComplementaryPhases phases{};
};

OracleResult laqc_oracle(const DensityMatrix& rho, OracleMode mode, const OracleOptions& opt = {});

/// The principal-axis candidate bases used by the constructive oracle.
/// For X-form input these are the Pauli x, y, z axes on both qubits;
/// otherwise the singular vectors of the correlation tensor.
std::array<LocalBasisAngles, 3> principal_axis_bases(const DensityMatrix& rho);

/// (1+T)/2 log2(1+T) + (1-T)/2 log2(1-T). |T| may exceed 1 by 1e-12 at most.
double g_function(double T);

/// z-basis term with an arbitrary prefactor; prefactor 1/4 is the
/// published form, prefactor 1 equals the z-basis mutual information.
double g3_with_prefactor(const XState& x, double prefactor);

struct XStateLaqc {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;          // z-basis mutual information
  double g3_printed = 0.0;  // same expression with the 1/4 prefactor
  double literal_max = 0.0; // max{g1, g2, g3}
  double closed = 0.0;      // LAQC
  int excluded = 0;         // 0, 1, 2 for g1, g2, g3: the computational basis
};

XStateLaqc laqc_xstate(const XState& x);

/// Family closed forms for LAQC and concurrence.
double laqc_family(const FamilyPoint& f);
double concurrence_family(const FamilyPoint& f);

/// Root of laqc_family(alpha) = concurrence_family(alpha) on (1/2, 1),
/// where LAQC stops exceeding concurrence.
double alpha_crossing();

class NotPositive : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Wootters concurrence. Throws NotPositive if rho has an eigenvalue below
/// -kTolPsd.
double concurrence(const DensityMatrix& rho);

struct CorrelationReport {
  double laqc_closed = 0.0;
  double laqc_literal_max = 0.0;
  double laqc_oracle = 0.0;          // constructive
  double laqc_oracle_literal = 0.0;
  double classical_corr = 0.0;       // literal global minimum
  double concurrence = 0.0;
  LocalBasisAngles basis{};
  ComplementaryPhases phases{};
  std::array<double, 3> g_values{};
  bool oracle_run = false;
};

CorrelationReport correlation_report(const XState& x, bool run_oracle,
                                     const OracleOptions& opt = {});

}  // namespace laqc
