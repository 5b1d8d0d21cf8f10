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


// Helpers for building small corpora and scratch directories in tests.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/corpus.hpp"

namespace mgraph::testing {

struct Arg {
  std::string surface;
  std::string type;
};

// Already-normalized records; every argument is a named entity.
RawRecord binary(const std::string& lemma, const Arg& subject, const Arg& object,
                 const std::string& date = "", const std::string& article = "a1");
RawRecord unary(const std::string& lemma, int case_marker, const Arg& arg,
                const std::string& date = "", const std::string& article = "a1");

Corpus build_corpus(const std::vector<RawRecord>& records);

// Dated news-like corpus over `days` days. Entity mentions are skewed so a
// few people and pairs recur often, and predicates come in pairs with their
// WordNet-narrower substitutes (kill/murder, visit/tour, defeat/rout, ...).
// About 2% of records are undated.
Corpus synthetic_news(std::uint64_t seed, std::size_t n, int days);

std::filesystem::path source_dir();
std::filesystem::path wordnet_dir();

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace mgraph::testing
