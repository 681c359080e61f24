// SPDX-License-Identifier: Apache-2.0
//
// Cross-module verification suites behind `laqc verify`. Every suite is
// deterministic for a given seed; the report carries no timestamp.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace laqc {

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  std::optional<double> tol;  // replaces every suite tolerance when set
};

struct SuiteResult {
  std::string name;
  double tol = 0.0;  // nominal tolerance; cases may carry their own
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  std::optional<nlohmann::ordered_json> first_failure;

  bool pass() const { return failures == 0; }
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteResult> suites;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace laqc
