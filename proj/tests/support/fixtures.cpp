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


#include "support/fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "mgraph/random.hpp"

namespace mgraph::testing {

namespace {

RawArg raw_arg(const Arg& a, int role) {
  RawArg r;
  r.surface = a.surface;
  r.type = a.type;
  r.is_named = true;
  r.role_index = role;
  return r;
}

RawRecord base(const std::string& lemma, const std::string& date, const std::string& article) {
  RawRecord r;
  r.article_id = article;
  if (!date.empty()) r.date = Date::parse(date);
  r.predicate = lemma;
  r.voice = Voice::Normalized;
  return r;
}

}  // namespace

RawRecord binary(const std::string& lemma, const Arg& subject, const Arg& object,
                 const std::string& date, const std::string& article) {
  RawRecord r = base(lemma, date, article);
  r.args = {raw_arg(subject, 1), raw_arg(object, 2)};
  return r;
}

RawRecord unary(const std::string& lemma, int case_marker, const Arg& arg, const std::string& date,
                const std::string& article) {
  RawRecord r = base(lemma, date, article);
  r.args = {raw_arg(arg, case_marker)};
  return r;
}

Corpus build_corpus(const std::vector<RawRecord>& records) {
  CorpusBuilder b;
  for (const auto& r : records) b.add(r);
  return b.build();
}

Corpus synthetic_news(std::uint64_t seed, std::size_t n, int days) {
  struct Pred {
    const char* lemma;
    int case_marker;  // 0 = binary
  };
  static const Pred preds[] = {
      {"kill", 2},  {"die", 1},         {"visit", 1},  {"criticize", 2}, {"hurt", 2},
      {"defeat", 0}, {"buy", 0},        {"receive.from", 0}, {"write", 0},
      {"murder", 2}, {"tour", 1},       {"denounce", 2}, {"burn", 2}, {"rout", 0},
      {"bribe", 0},  {"inherit.from", 0}, {"not.visit", 1},
  };
  Rng rng(seed);
  // Squaring a uniform draw favours low indexes.
  auto skewed = [&](std::uint64_t range) {
    const std::uint64_t r = rng.below(range);
    return r * r / range;
  };
  const Date start = *Date::parse("2025-03-01");
  std::vector<RawRecord> records;
  records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Pred& p = preds[rng.below(std::size(preds))];
    std::string date;
    if (rng.below(50) != 0) date = start.plus_days(static_cast<int>(rng.below(days))).to_string();
    const std::string article = "n" + std::to_string(i / 7);
    Arg a{"person " + std::to_string(skewed(60)), "person"};
    if (p.case_marker != 0) {
      records.push_back(unary(p.lemma, p.case_marker, a, date, article));
    } else {
      Arg b{"person " + std::to_string(skewed(60)), "person"};
      // A third of binaries reuse one of a few recurring pairs.
      if (rng.below(3) == 0) {
        const auto pair = rng.below(4);
        a.surface = "person " + std::to_string(pair);
        b.surface = "person " + std::to_string(pair + 4);
      }
      if (b.surface == a.surface) b.surface += " jr";
      records.push_back(binary(p.lemma, a, b, date, article));
    }
    records.back().sentence_idx = static_cast<int>(i % 7);
  }
  return build_corpus(records);
}

std::filesystem::path source_dir() { return MGRAPH_SOURCE_DIR; }

std::filesystem::path wordnet_dir() { return source_dir() / "data" / "sample" / "wordnet"; }

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("mgraph-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace mgraph::testing
