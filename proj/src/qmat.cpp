// SPDX-License-Identifier: Apache-2.0

#include "laqc/qmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace laqc {

namespace {

bool valid_dim(Eigen::Index n) {
  return n == 2 || n == 4 || n == 8 || n == 16;
}

}  // namespace

DensityMatrix::DensityMatrix(int dim) : m_(CMatrix::Zero(dim, dim)) {
  if (!valid_dim(dim))
    throw DimensionError("DensityMatrix: dimension must be 2, 4, 8 or 16, got " +
                         std::to_string(dim));
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw DimensionError("DensityMatrix: matrix is not square");
  if (!valid_dim(m_.rows()))
    throw DimensionError("DensityMatrix: dimension must be 2, 4, 8 or 16, got " +
                         std::to_string(m_.rows()));
}

DensityMatrix DensityMatrix::identity(int dim) {
  DensityMatrix r(dim);
  r.m_.setIdentity();
  return r;
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return identity(dim).scaled(1.0 / dim);
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  return DensityMatrix(CMatrix(psi * psi.adjoint()));
}

DensityMatrix DensityMatrix::conjugated_by(const CMatrix& u) const {
  if (u.rows() != m_.rows() || u.cols() != m_.cols())
    throw DimensionError("conjugated_by: unitary dimension mismatch");
  return DensityMatrix(CMatrix(u * m_ * u.adjoint()));
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  if (other.dim() != dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  CMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() * b.dim() > kMaxDim)
    throw DimensionError("kron: product dimension " + std::to_string(a.dim() * b.dim()) +
                         " exceeds 16");
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace_BC(const DensityMatrix& rho) {
  if (rho.dim() != 16) throw DimensionError("partial_trace_BC: expected a 16x16 operator");
  DensityMatrix out(4);
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int d2 = 0; d2 < 2; ++d2) {
          cplx acc = 0.0;
          for (int bc = 0; bc < 4; ++bc) {
            const int i = a * 8 + bc * 2 + d;
            const int j = a2 * 8 + bc * 2 + d2;
            acc += rho(i, j);
          }
          out(a * 2 + d, a2 * 2 + d2) = acc;
        }
  return out;
}

DensityMatrix partial_trace_first(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("partial_trace_first: expected 4x4");
  DensityMatrix out(2);
  for (int b = 0; b < 2; ++b)
    for (int b2 = 0; b2 < 2; ++b2) out(b, b2) = rho(b, b2) + rho(2 + b, 2 + b2);
  return out;
}

DensityMatrix partial_trace_second(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("partial_trace_second: expected 4x4");
  DensityMatrix out(2);
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2) out(a, a2) = rho(2 * a, 2 * a2) + rho(2 * a + 1, 2 * a2 + 1);
  return out;
}

double hermiticity_residual(const DensityMatrix& m) {
  return (m.matrix() - m.matrix().adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& m) {
  const double res = hermiticity_residual(m);
  if (res > kTolHerm)
    throw NotHermitian("hermitian_eigenvalues: residual " + std::to_string(res));
  const CMatrix sym = 0.5 * (m.matrix() + m.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DensityReport validate_density(const DensityMatrix& m, double tol) {
  DensityReport r;
  r.hermiticity_residual = hermiticity_residual(m);
  r.trace_deviation = std::abs(m.trace() - 1.0);
  r.unnormalized = r.trace_deviation > tol;
  const CMatrix sym = 0.5 * (m.matrix() + m.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.pass = r.hermiticity_residual <= tol && !r.unnormalized &&
           r.min_eigenvalue >= -std::max(tol, kTolPsd);
  return r;
}

const CMatrix& pauli(int k) {
  static const std::array<CMatrix, 4> s = [] {
    std::array<CMatrix, 4> p;
    const cplx i(0.0, 1.0);
    p[0] = CMatrix::Identity(2, 2);
    p[1] = CMatrix(2, 2);
    p[1] << 0.0, 1.0, 1.0, 0.0;
    p[2] = CMatrix(2, 2);
    p[2] << 0.0, -i, i, 0.0;
    p[3] = CMatrix(2, 2);
    p[3] << 1.0, 0.0, 0.0, -1.0;
    return p;
  }();
  if (k < 0 || k > 3) throw std::out_of_range("pauli: index must be 0..3");
  return s[static_cast<std::size_t>(k)];
}

double fano_component(const DensityMatrix& rho, int i, int j) {
  if (rho.dim() != 4) throw DimensionError("fano_component: expected a two-qubit operator");
  return (kron(pauli(i), pauli(j)) * rho.matrix()).trace().real();
}

CMatrix local_unitary(const CMatrix& ua, const CMatrix& ub) {
  if (ua.rows() != 2 || ub.rows() != 2) throw DimensionError("local_unitary: expected 2x2 factors");
  return kron(ua, ub);
}

CMatrix random_unitary_2(std::mt19937_64& rng) {
  // QR of a complex Ginibre matrix with the phases of R's diagonal divided out
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix z(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z(i, j) = cplx(n(rng), n(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

}  // namespace laqc
