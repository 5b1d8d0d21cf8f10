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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mgraph {

// Error hierarchy. The CLI maps each class onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line usage or configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input data, or a missing prior-stage artifact.
class DataError : public Error {
 public:
  using Error::Error;
};

// A file header names a format version this build cannot read.
class VersionError : public Error {
 public:
  using Error::Error;
};

// A caller violated a function precondition (e.g. tuple arity mismatch).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Calendar date with day arithmetic. Stored as days since the Unix epoch.
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::sys_days days) : days_(days) {}

  // Parses "YYYY-MM-DD". Returns nullopt on any syntax or range error.
  static std::optional<Date> parse(std::string_view text);

  std::string to_string() const;
  std::chrono::sys_days days() const { return days_; }
  long day_number() const { return days_.time_since_epoch().count(); }
  Date plus_days(int n) const { return Date(days_ + std::chrono::days{n}); }

  auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days days_{};
};

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);
// Whole-string parses; nullopt on any leftover or malformed text.
std::optional<double> parse_double(std::string_view text);
std::optional<std::uint64_t> parse_uint(std::string_view text);

// Stable 64-bit FNV-1a hash; used for config hashes in manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

std::vector<std::string> split(std::string_view text, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Lowercases ASCII and collapses runs of whitespace into single spaces.
std::string normalize_surface(std::string_view text);

}  // namespace mgraph
