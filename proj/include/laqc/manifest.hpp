// SPDX-License-Identifier: Apache-2.0
//
// Run manifests: every data file gets a sidecar <path>.manifest.json with
// the command, the resolved configuration, the library version, a UTC
// timestamp and a summary of the formula audit.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "laqc/audit.hpp"

namespace laqc {

std::string_view library_version();

/// ISO 8601, seconds resolution, UTC.
std::string utc_timestamp();

nlohmann::ordered_json to_json(const AuditEntry& e);

/// Counts per verdict plus the ids of the DISCREPANT entries.
nlohmann::ordered_json audit_summary(const std::vector<AuditEntry>& entries);

struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::string version;
  std::string timestamp;
  nlohmann::ordered_json audit;

  nlohmann::ordered_json to_json() const;
};

/// Manifest for a command run now, with the audit summary on the default
/// grid.
RunManifest make_manifest(std::string command, nlohmann::ordered_json config);

/// Same, with an audit summary the caller already has.
RunManifest make_manifest(std::string command, nlohmann::ordered_json config,
                          nlohmann::ordered_json audit);

/// Pretty-printed, one key per line, so the timestamp sits on its own line.
std::string dump(const nlohmann::ordered_json& j);

std::string manifest_path(const std::string& data_path);

/// Writes text to path; throws std::runtime_error if the file cannot be
/// written.
void write_text(const std::string& path, const std::string& text);

/// Reads a JSON config in the manifest schema and returns its "config"
/// object (or the whole document if there is no such key).
nlohmann::ordered_json read_config(const std::string& path);

}  // namespace laqc
