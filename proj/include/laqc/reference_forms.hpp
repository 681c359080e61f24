// SPDX-License-Identifier: Apache-2.0
//
// Closed forms from the literature, transcribed exactly as published,
// including their sign conventions and typos. Nothing in the computation
// path calls these; they exist so the audit can measure each one against
// the projection oracle.

#pragma once

#include "laqc/swap.hpp"
#include "laqc/xstate.hpp"

namespace laqc::reference_forms {

struct SwapParams {
  double p_ab;
  double p_cd;
  double xi;
};

// General X-state swap map and its normalization.
BlochX general_bloch_raw(const BlochX& ab, const BlochX& cd, double xi);
double general_norm(const BlochX& ab, const BlochX& cd, double xi);

// One-parameter family Bloch tuples.
BlochX family_bloch(const FamilyPoint& f);

// Werner pairs.
BlochX werner_bloch(const SwapParams& q);
double werner_laqc(const SwapParams& q);
double werner_concurrence(const SwapParams& q);

// alpha pairs. The published concurrence claim is C = 0.
BlochX alpha_bloch(const SwapParams& q);
double alpha_laqc(const SwapParams& q);
inline double alpha_concurrence(const SwapParams&) { return 0.0; }

// beta pairs. LAQC is published as g2 of the listed T2.
BlochX beta_bloch(const SwapParams& q);
double beta_laqc(const SwapParams& q);
/// The exponent printed as beta_AB^{beta_CD} is read as a product.
double beta_concurrence(const SwapParams& q);

// vv pairs (psi- mixed with |00>); Bloch tuple before normalization.
BlochX vv_bloch_raw(const SwapParams& q);
double vv_norm(const SwapParams& q);
double vv_laqc(const SwapParams& q);
double vv_concurrence(const SwapParams& q);

// MEMS pairs; Bloch tuple before normalization. Concurrence claim is C = 0.
BlochX mems_bloch_raw(const SwapParams& q);
double mems_norm(const SwapParams& q);
double mems_laqc(const SwapParams& q);
inline double mems_concurrence(const SwapParams&) { return 0.0; }

}  // namespace laqc::reference_forms
