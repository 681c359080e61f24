#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "laqc/xstate.hpp"

using namespace laqc;

TEST_CASE("Bloch map on a fixed state") {
  const XState x = XState::make(0.4, 0.3, 0.2, 0.1, 0.1, -0.05);
  const BlochX p = bloch_from_xstate(x);
  CHECK(p.x3 == doctest::Approx(0.4));   // a+b-c-d
  CHECK(p.y3 == doctest::Approx(0.2));   // a-b+c-d
  CHECK(p.T1 == doctest::Approx(0.1));   // 2(s+r)
  CHECK(p.T2 == doctest::Approx(-0.3));  // 2(s-r)
  CHECK(p.T3 == doctest::Approx(0.0));   // a-b-c+d
}

TEST_CASE("validity constraints name the failure") {
  CHECK_THROWS_AS(XState::make(0.5, 0.5, 0.1, 0.0, 0.0, 0.0), InvalidState);  // trace
  CHECK_THROWS_AS(XState::make(1.2, -0.2, 0.0, 0.0, 0.0, 0.0), InvalidState);  // sign
  CHECK_THROWS_AS(XState::make(0.25, 0.25, 0.25, 0.25, 0.3, 0.0), InvalidState);  // |r| > sqrt(ad)
  CHECK(XState::check(0.25, 0.25, 0.25, 0.25, 0.25, -0.25) == std::nullopt);
  CHECK(XState::check(0.25, 0.25, 0.25, 0.25, 0.0, 0.26).has_value());
  CHECK_THROWS_AS(xstate_from_bloch({0.0, 0.0, 1.5, 0.0, 0.0}), InvalidState);
}

TEST_CASE("round trips on random states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const XState x = random_xstate(rng);
    const XState y = xstate_from_bloch(bloch_from_xstate(x));
    CHECK(std::abs(x.a() - y.a()) < 1e-14);
    CHECK(std::abs(x.r() - y.r()) < 1e-14);
    CHECK(std::abs(x.s() - y.s()) < 1e-14);
    const XState z = xstate_from_density(density_matrix(x));
    CHECK(std::abs(x.d() - z.d()) < 1e-15);
    CHECK(validate_density(density_matrix(x)).pass);
    CHECK(off_x_residual(density_matrix(x)) == 0.0);
  }
}

TEST_CASE("phase stripping") {
  const double chi = 0.7, xi_ph = -1.9;
  const DensityMatrix phased = phased_density_matrix(0.3, 0.2, 0.1, 0.4, 0.2, chi, 0.1, xi_ph);
  const DensityMatrix stripped = phased.conjugated_by(phase_stripping_unitary(chi, xi_ph));
  const XState x = canonicalize_phases(0.3, 0.2, 0.1, 0.4, 0.2, chi, 0.1, xi_ph);
  CHECK(stripped.max_abs_diff(density_matrix(x)) < 1e-14);
  CHECK(x.r() == doctest::Approx(0.2));
  CHECK_THROWS_AS(canonicalize_phases(0.3, 0.2, 0.1, 0.4, -0.2, chi, 0.1, xi_ph), InvalidState);
}

TEST_CASE("complex coherences are rejected until canonicalized") {
  const DensityMatrix phased = phased_density_matrix(0.25, 0.25, 0.25, 0.25, 0.2, 0.5, 0.0, 0.0);
  CHECK_THROWS_AS(xstate_from_density(phased), InvalidState);
}

TEST_CASE("family Bloch tuples") {
  const BlochX w = bloch_from_xstate(make_family({Family::werner, 0.6}));
  CHECK(w.max_abs_diff({0.0, 0.0, -0.6, -0.6, -0.6}) < 1e-15);

  const BlochX a = bloch_from_xstate(make_family({Family::alpha, 0.3}));
  CHECK(a.max_abs_diff({0.0, 0.0, 0.3, -0.3, -0.4}) < 1e-15);

  const BlochX b = bloch_from_xstate(make_family({Family::beta, 0.2}));
  CHECK(b.max_abs_diff({0.0, 0.0, 1.0, 0.6, -0.6}) < 1e-15);

  const BlochX v = bloch_from_xstate(make_family({Family::vv, 0.25}));
  CHECK(v.max_abs_diff({0.75, 0.75, -0.25, -0.25, 0.5}) < 1e-15);

  // the defining MEMS matrix has coherence gamma/2, so T1 = -T2 = gamma
  const BlochX m = bloch_from_xstate(make_family({Family::mems, 0.5}));
  CHECK(m.max_abs_diff({1.0 / 3.0, -1.0 / 3.0, 0.5, -0.5, 1.0 / 3.0}) < 1e-15);
}

TEST_CASE("MEMS cap") {
  CHECK(gamma_cap(0.0) == doctest::Approx(1.0 / 3.0));
  CHECK(gamma_cap(0.5) == doctest::Approx(1.0 / 3.0));
  CHECK(gamma_cap(0.8) == doctest::Approx(0.4));
  CHECK(gamma_cap(1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(gamma_cap(1.5), DomainError);
}

TEST_CASE("family endpoints are valid and out-of-domain parameters throw") {
  for (Family f : {Family::werner, Family::alpha, Family::beta, Family::vv, Family::mems}) {
    CHECK_NOTHROW(make_family({f, 0.0}));
    CHECK_NOTHROW(make_family({f, 1.0}));
    CHECK_THROWS_AS(make_family({f, -0.01}), DomainError);
    CHECK_THROWS_AS(make_family({f, 1.01}), DomainError);
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS(parse_family("ghz"));
}
