// SPDX-License-Identifier: Apache-2.0
//
// Measures every published closed form against the projection oracle and
// classifies it. A formula is CONFIRMED when its largest deviation on the
// grid is at most kConfirmTol; anything else is DISCREPANT and carries a
// deviation profile.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laqc/xstate.hpp"

namespace laqc {

inline constexpr double kConfirmTol = 1e-9;

enum class Verdict { confirmed, discrepant };
std::string_view to_string(Verdict v);

struct ComponentDeviation {
  std::string name;
  double max_abs = 0.0;
  bool sign_flipped = false;             // printed == -oracle wherever they differ
  std::optional<double> constant_ratio;  // oracle / printed, if constant
};

struct DeviationProfile {
  double max_abs = 0.0;
  std::vector<double> worst_at;  // (p_ab, p_cd, xi) or (param)
  std::size_t points = 0;        // points where both sides are defined
  std::size_t undefined = 0;     // zero-probability outcomes or printed NaN
  std::size_t exceeding = 0;     // points with deviation > kConfirmTol
  std::vector<ComponentDeviation> components;
};

struct AuditEntry {
  std::string id;
  std::string target;  // what the formula computes
  std::string grid;    // e.g. "11x11x11"
  DeviationProfile profile;
  Verdict verdict = Verdict::confirmed;
  std::string note;
};

struct AuditGrid {
  int density = 11;          // points per axis for swap grids
  int family_points = 101;   // points for single-parameter family grids
  std::uint64_t seed = 7;    // random pairs for the general map
};

/// Static family entries plus post-swap entries for one family.
std::vector<AuditEntry> audit_family(Family f, const AuditGrid& grid = {});

/// Entries that are not tied to one family: general swap map, its
/// normalization, the g3 prefactor.
std::vector<AuditEntry> audit_general(const AuditGrid& grid = {});

std::vector<AuditEntry> audit_all(const AuditGrid& grid = {});

}  // namespace laqc
