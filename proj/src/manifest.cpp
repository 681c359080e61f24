// SPDX-License-Identifier: Apache-2.0

#include "laqc/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace laqc {

std::string_view library_version() { return LAQC_VERSION; }

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json to_json(const AuditEntry& e) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : e.profile.components) {
    comps.push_back({{"name", c.name},
                     {"max_abs", c.max_abs},
                     {"sign_flipped", c.sign_flipped},
                     {"constant_ratio", c.constant_ratio ? nlohmann::ordered_json(*c.constant_ratio)
                                                         : nlohmann::ordered_json(nullptr)}});
  }
  return {{"id", e.id},
          {"target", e.target},
          {"grid", e.grid},
          {"verdict", std::string(to_string(e.verdict))},
          {"max_deviation", e.profile.max_abs},
          {"worst_at", e.profile.worst_at},
          {"points", e.profile.points},
          {"undefined", e.profile.undefined},
          {"exceeding", e.profile.exceeding},
          {"components", comps},
          {"note", e.note}};
}

nlohmann::ordered_json audit_summary(const std::vector<AuditEntry>& entries) {
  std::size_t confirmed = 0;
  nlohmann::ordered_json bad = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    if (e.verdict == Verdict::confirmed) ++confirmed;
    else bad.push_back(e.id);
  }
  return {{"entries", entries.size()},
          {"confirmed", confirmed},
          {"discrepant", entries.size() - confirmed},
          {"discrepant_ids", bad}};
}

nlohmann::ordered_json RunManifest::to_json() const {
  return {{"command", command},
          {"config", config},
          {"version", version},
          {"timestamp", timestamp},
          {"audit", audit}};
}

RunManifest make_manifest(std::string command, nlohmann::ordered_json config) {
  // the audit is deterministic, so one evaluation per process is enough
  static const nlohmann::ordered_json summary = audit_summary(audit_all());
  return make_manifest(std::move(command), std::move(config), summary);
}

RunManifest make_manifest(std::string command, nlohmann::ordered_json config,
                          nlohmann::ordered_json audit) {
  return {std::move(command), std::move(config), std::string(library_version()), utc_timestamp(),
          std::move(audit)};
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string manifest_path(const std::string& data_path) { return data_path + ".manifest.json"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

nlohmann::ordered_json read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config '" + path + "'");
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(f);
  if (j.contains("config")) return j["config"];
  return j;
}

}  // namespace laqc
