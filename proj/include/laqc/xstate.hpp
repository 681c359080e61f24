// SPDX-License-Identifier: Apache-2.0
//
// Real two-qubit X states, their five-parameter Bloch form, and the
// one-parameter families used throughout the library.
//
//        | a  0  0  r |
//  rho = | 0  b  s  0 |      x3 = a+b-c-d   T1 = 2(s+r)
//        | 0  s  c  0 |      y3 = a-b+c-d   T2 = 2(s-r)
//        | r  0  0  d |      T3 = a-b-c+d

#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "laqc/qmat.hpp"

namespace laqc {

class InvalidState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Five Bloch (Fano) parameters of an X state. Also used for the raw,
/// unnormalized parameters produced by the swap map, so no range check.
struct BlochX {
  double x3 = 0.0;
  double y3 = 0.0;
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;

  double max_abs_diff(const BlochX& o) const;
  BlochX scaled(double k) const { return {x3 * k, y3 * k, T1 * k, T2 * k, T3 * k}; }
};

/// Canonical real X state. Coherences are signed; validity is checked on
/// |r| <= sqrt(ad) and |s| <= sqrt(bc).
class XState {
 public:
  static constexpr double kTol = 1e-12;

  /// Validates and throws InvalidState naming the failed constraint.
  static XState make(double a, double b, double c, double d, double r, double s);

  /// Returns a description of the first violated constraint, if any.
  static std::optional<std::string> check(double a, double b, double c, double d, double r,
                                          double s, double tol = kTol);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double r() const noexcept { return r_; }
  double s() const noexcept { return s_; }

 private:
  XState(double a, double b, double c, double d, double r, double s)
      : a_(a), b_(b), c_(c), d_(d), r_(r), s_(s) {}
  double a_, b_, c_, d_, r_, s_;
};

/// Strips the coherence phases of a general X state (phases chi on the
/// |00><11| element and xi_ph on |01><10|) with a local diagonal unitary.
XState canonicalize_phases(double a, double b, double c, double d, double r, double chi, double s,
                           double xi_ph);

/// The phased 4x4 matrix before canonicalization.
DensityMatrix phased_density_matrix(double a, double b, double c, double d, double r, double chi,
                                    double s, double xi_ph);

/// Local unitary diag(1,e^{ia}) (x) diag(1,e^{ib}) that maps the phased
/// matrix onto the canonical one.
CMatrix phase_stripping_unitary(double chi, double xi_ph);

BlochX bloch_from_xstate(const XState& x);
XState xstate_from_bloch(const BlochX& p);

DensityMatrix density_matrix(const XState& x);

/// Reads the X pattern out of a 4x4 operator. Off-pattern entries and the
/// imaginary parts of the coherences must be below tol.
XState xstate_from_density(const DensityMatrix& rho, double tol = 1e-10);

/// Largest |entry| outside the X pattern.
double off_x_residual(const DensityMatrix& rho);

enum class Family { werner, alpha, beta, vv, mems };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

struct FamilyPoint {
  Family family;
  double param;  // z, alpha, beta, F or gamma; all in [0,1]
};

/// Gamma(gamma) of the MEMS family: 1/3 below gamma = 2/3, gamma/2 above.
double gamma_cap(double gamma);

void check_family_domain(const FamilyPoint& f);

/// Family member built from its defining density matrix.
XState make_family(const FamilyPoint& f);

/// Uniform populations on the simplex, coherences uniform within their
/// bounds (signed).
XState random_xstate(std::mt19937_64& rng);

}  // namespace laqc
