// Copyright 2026 The mgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgraph/manifest.hpp"

#include <fmt/format.h>

#include "mgraph/common.hpp"

namespace mgraph {

nlohmann::ordered_json Manifest::to_json() const {
  nlohmann::ordered_json j;
  j["stage"] = stage;
  j["format_version"] = format_version;
  j["config_hash"] = config_hash;
  j["seed"] = seed;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

std::string Manifest::to_line() const {
  nlohmann::ordered_json j;
  j["manifest"] = to_json();
  return j.dump();
}

Manifest Manifest::from_json(const nlohmann::json& j) {
  Manifest m;
  try {
    m.stage = j.at("stage").get<std::string>();
    m.format_version = j.at("format_version").get<int>();
    m.config_hash = j.value("config_hash", std::string());
    m.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("extra")) m.extra = j.at("extra");
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("malformed manifest: {}", e.what()));
  }
  return m;
}

bool check_manifest_line(std::string_view line, int expected_version) {
  if (line.find("\"manifest\"") == std::string_view::npos) return false;
  nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object() || !j.contains("manifest")) return false;
  Manifest m = Manifest::from_json(j.at("manifest"));
  if (m.format_version != expected_version) {
    throw VersionError(fmt::format("artifact format version {} (stage '{}'), expected {}",
                                   m.format_version, m.stage, expected_version));
  }
  return true;
}

}  // namespace mgraph
