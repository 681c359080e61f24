// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over the families: single-state curves and post-swap
// grids. Rows are computed in parallel and returned in grid order.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "laqc/xstate.hpp"

namespace laqc {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain radians, or a multiple of pi written with the suffix "pi"
/// ("0.5pi", "-pi"). Fractions like "pi/2" are rejected.
double parse_angle(std::string_view s);

/// Inclusive linear grid.
struct Range {
  double start = 0.0;
  double stop = 1.0;
  int count = 101;

  std::vector<double> values() const;
};

/// "start:stop:count"; with angles = true each bound goes through
/// parse_angle.
Range parse_range(std::string_view s, bool angles = false);

enum class Slice { fixed_xi, equal_params };
enum class Format { csv, json };

std::string_view to_string(Slice s);
std::string_view to_string(Format f);
Slice parse_slice(std::string_view s);
Format parse_format(std::string_view s);

struct SweepSpec {
  Family family = Family::werner;
  Range grid{0.0, 1.0, 101};
  std::optional<Range> grid2;    // pCD for the fixed-xi slice; defaults to grid
  std::optional<Range> xi_grid;  // xi for the equal-params slice
  double xi = 0.0;               // fixed-xi slice angle; set to pi/2 by default
  Slice slice = Slice::fixed_xi;
  std::string out;
  Format format = Format::csv;
  std::uint64_t seed = 42;
  int oracle_every = 10;  // family sweeps: numeric spot check every k rows, 0 = never

  SweepSpec();

  /// Throws SpecError on grids outside the family domain, count < 2, or
  /// a measurement angle outside [-pi/2, pi/2].
  void validate(bool swap) const;

  nlohmann::ordered_json to_json() const;
};

struct FamilyRow {
  Family family;
  double param = 0.0;
  double laqc = 0.0;
  double concurrence = 0.0;
  std::optional<double> oracle_laqc;         // numeric LAQC on spot-check rows
  std::optional<double> oracle_concurrence;  // Wootters on spot-check rows
  std::string check;                         // "", "ok" or "mismatch"
};

struct SwapRow {
  Family family;
  double p_ab = 0.0;
  double p_cd = 0.0;
  double xi = 0.0;
  bool defined = false;  // false: zero-probability outcome
  BlochX bloch;
  double norm = 0.0;
  double prob = 0.0;
  double laqc = 0.0;
  double concurrence = 0.0;
};

std::vector<FamilyRow> family_sweep(const SweepSpec& spec);
std::vector<SwapRow> swap_sweep(const SweepSpec& spec);

/// %.17g: enough digits for every double to round-trip.
std::string format_double(double v);

std::string family_csv(const std::vector<FamilyRow>& rows);
std::string swap_csv(const std::vector<SwapRow>& rows);
nlohmann::ordered_json family_json(const std::vector<FamilyRow>& rows);
nlohmann::ordered_json swap_json(const std::vector<SwapRow>& rows);

}  // namespace laqc
