// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex matrices for 1 to 4 qubits.
//
// Qubit ordering is fixed everywhere in this library: for a four-qubit
// register the basis index is  a*8 + b*4 + c*2 + d  (qubit A is the most
// significant bit, then B, C, D). Two-qubit states use  a*2 + b.

#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace laqc {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolTrace = 1e-10;
inline constexpr double kTolPsd = 1e-9;
inline constexpr int kMaxDim = 16;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense square complex matrix of dimension 2, 4, 8 or 16. Used both for
/// normalized density matrices and for raw (unnormalized) projected
/// operators, which is why the constructor does not enforce unit trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(int dim);
  explicit DensityMatrix(CMatrix m);

  static DensityMatrix identity(int dim);
  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for the given amplitudes (not renormalized).
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  cplx operator()(int i, int j) const { return m_(i, j); }
  cplx& operator()(int i, int j) { return m_(i, j); }

  const CMatrix& matrix() const noexcept { return m_; }
  cplx trace() const { return m_.trace(); }

  DensityMatrix scaled(double k) const { return DensityMatrix(CMatrix(m_ * k)); }
  DensityMatrix conjugated_by(const CMatrix& u) const;  // U rho U^dagger

  /// Largest |entry| of this minus other.
  double max_abs_diff(const DensityMatrix& other) const;

 private:
  CMatrix m_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Tr_BC of a four-qubit operator ordered A,B,C,D; result is ordered A,D.
DensityMatrix partial_trace_BC(const DensityMatrix& rho);

/// Single-qubit marginals of a two-qubit operator.
DensityMatrix partial_trace_first(const DensityMatrix& rho);   // keeps B
DensityMatrix partial_trace_second(const DensityMatrix& rho);  // keeps A

/// Real spectrum, descending. The solver runs on (M + M^dagger)/2; the
/// input must already be Hermitian within kTolHerm.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m);

double hermiticity_residual(const DensityMatrix& m);

struct DensityReport {
  double hermiticity_residual = 0.0;
  double trace_deviation = 0.0;  // |Tr M - 1|
  double min_eigenvalue = 0.0;
  bool unnormalized = false;     // trace outside tolerance
  bool pass = false;
};

/// Report-style validity check. tol bounds the Hermiticity residual and the
/// trace deviation; the spectrum is allowed to dip to -max(tol, kTolPsd).
DensityReport validate_density(const DensityMatrix& m, double tol = kTolHerm);

/// Pauli matrix sigma_k, k = 0 (identity), 1, 2, 3.
const CMatrix& pauli(int k);

/// T_ij = Tr[(sigma_i (x) sigma_j) rho] for a two-qubit operator.
double fano_component(const DensityMatrix& rho, int i, int j);

/// U_A (x) U_B.
CMatrix local_unitary(const CMatrix& ua, const CMatrix& ub);

/// Haar-random 2x2 unitary.
CMatrix random_unitary_2(std::mt19937_64& rng);

}  // namespace laqc
