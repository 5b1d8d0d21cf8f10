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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mgraph {

// Provenance block carried by every stage artifact. Contains no timestamps,
// so re-running a stage on identical inputs reproduces identical bytes.
struct Manifest {
  std::string stage;
  int format_version = 1;
  std::string config_hash;
  std::uint64_t seed = 0;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  // {"manifest":{...}} on one line.
  std::string to_line() const;
  static Manifest from_json(const nlohmann::json& j);
};

// If `line` is a manifest line, validates its format version against
// `expected_version` (VersionError on mismatch) and returns true.
bool check_manifest_line(std::string_view line, int expected_version);

}  // namespace mgraph
