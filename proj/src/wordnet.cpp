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


#include "mgraph/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "mgraph/common.hpp"

namespace mgraph {

namespace fs = std::filesystem;

namespace {

const std::vector<std::uint64_t> kNoSenses;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot read lexical resource file {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(const std::string& tok, int base, const fs::path& file, std::size_t where) {
  std::uint64_t v = 0;
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (r.ec != std::errc() || r.ptr != tok.data() + tok.size()) {
    throw DataError(fmt::format("{}: bad number '{}' near byte {}", file.string(), tok, where));
  }
  return v;
}

std::string lowercase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Strips an adjective marker such as "(p)" from a data-file word.
std::string clean_word(std::string w) {
  if (auto paren = w.find('('); paren != std::string::npos) w.resize(paren);
  return lowercase(std::move(w));
}

std::string dotted(std::string w) {
  std::replace(w.begin(), w.end(), '_', '.');
  return w;
}

}  // namespace

WordNetPos WordNetPos::load(const fs::path& dir, WordPos pos) {
  const char* suffix = pos == WordPos::Noun ? "noun" : "verb";
  const fs::path index_file = dir / fmt::format("index.{}", suffix);
  const fs::path data_file = dir / fmt::format("data.{}", suffix);
  WordNetPos out;

  // index: lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt offsets...
  std::istringstream index(read_file(index_file));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(index, line)) {
    ++line_no;
    if (line.empty() || line[0] == ' ') continue;
    auto t = tokens(line);
    if (t.size() < 4) throw DataError(fmt::format("{}:{}: short record", index_file.string(), line_no));
    const auto synset_cnt = number(t[2], 10, index_file, line_no);
    const auto p_cnt = number(t[3], 10, index_file, line_no);
    const std::size_t first = 4 + p_cnt + 2;
    if (t.size() != first + synset_cnt) {
      throw DataError(fmt::format("{}:{}: sense count disagrees with record", index_file.string(),
                                  line_no));
    }
    auto& senses = out.index_[lowercase(t[0])];
    for (std::size_t k = first; k < t.size(); ++k) senses.push_back(number(t[k], 10, index_file, line_no));
  }

  // data: offset lex_filenum ss_type w_cnt(hex) [word lex_id]... p_cnt [ptr]... | gloss
  const std::string data = read_file(data_file);
  std::set<std::uint64_t> wanted;
  for (const auto& [lemma, senses] : out.index_) wanted.insert(senses.begin(), senses.end());
  std::size_t pos_in_file = 0;
  while (pos_in_file < data.size()) {
    std::size_t end = data.find('\n', pos_in_file);
    if (end == std::string::npos) end = data.size();
    std::string_view record(data.data() + pos_in_file, end - pos_in_file);
    const std::size_t offset = pos_in_file;
    pos_in_file = end + 1;
    if (record.empty() || record[0] == ' ') continue;
    if (auto bar = record.find(" | "); bar != std::string_view::npos) record = record.substr(0, bar);
    auto t = tokens(record);
    if (t.size() < 4) throw DataError(fmt::format("{}: short record at byte {}", data_file.string(), offset));
    if (number(t[0], 10, data_file, offset) != offset) {
      throw DataError(fmt::format("{}: record at byte {} carries offset {}", data_file.string(),
                                  offset, t[0]));
    }
    Synset s;
    s.offset = offset;
    const auto w_cnt = number(t[3], 16, data_file, offset);
    std::size_t k = 4;
    for (std::uint64_t w = 0; w < w_cnt; ++w, k += 2) {
      if (k + 1 >= t.size()) throw DataError(fmt::format("{}: truncated words at byte {}", data_file.string(), offset));
      s.words.push_back(clean_word(t[k]));
    }
    if (k >= t.size()) throw DataError(fmt::format("{}: missing pointer count at byte {}", data_file.string(), offset));
    const auto p_cnt = number(t[k++], 10, data_file, offset);
    for (std::uint64_t p = 0; p < p_cnt; ++p, k += 4) {
      if (k + 3 >= t.size()) throw DataError(fmt::format("{}: truncated pointers at byte {}", data_file.string(), offset));
      // "~" is hyponym for nouns and troponym for verbs; "~i" (instance) is skipped.
      if (t[k] == "~" && t[k + 2] == std::string(1, pos == WordPos::Noun ? 'n' : 'v')) {
        s.narrower.push_back(number(t[k + 1], 10, data_file, offset));
      }
    }
    out.synsets_.emplace(offset, std::move(s));
  }
  for (auto off : wanted) {
    if (!out.synsets_.contains(off)) {
      throw DataError(fmt::format("{}: index points at offset {} with no record", index_file.string(), off));
    }
  }
  return out;
}

const std::vector<std::uint64_t>& WordNetPos::senses(std::string_view lemma) const {
  auto it = index_.find(lemma);
  return it == index_.end() ? kNoSenses : it->second;
}

const Synset* WordNetPos::synset(std::uint64_t offset) const {
  auto it = synsets_.find(offset);
  return it == synsets_.end() ? nullptr : &it->second;
}

LexicalResource LexicalResource::load(const fs::path& dir, bool first_sense) {
  if (!fs::is_directory(dir)) {
    throw DataError(fmt::format("lexical resource directory {} not found", dir.string()));
  }
  return LexicalResource(WordNetPos::load(dir, WordPos::Noun), WordNetPos::load(dir, WordPos::Verb),
                         first_sense);
}

LexicalResource::LexicalResource(WordNetPos nouns, WordNetPos verbs, bool first_sense)
    : nouns_(std::move(nouns)), verbs_(std::move(verbs)), first_sense_(first_sense) {}

std::vector<std::string> LexicalResource::narrower(const WordNetPos& pos,
                                                   std::string_view lemma) const {
  std::vector<std::string> out;
  std::set<std::string> seen{std::string(lemma)};
  const auto& senses = pos.senses(lemma);
  const std::size_t n = first_sense_ ? std::min<std::size_t>(1, senses.size()) : senses.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Synset* s = pos.synset(senses[i]);
    for (auto off : s->narrower) {
      const Synset* child = pos.synset(off);
      if (child == nullptr) continue;
      for (const auto& w : child->words) {
        if (seen.insert(w).second) out.push_back(w);
      }
    }
  }
  return out;
}

std::vector<std::string> LexicalResource::noun_hyponyms(std::string_view lemma) const {
  return narrower(nouns_, lemma);
}

std::vector<std::string> LexicalResource::verb_troponyms(std::string_view lemma) const {
  return narrower(verbs_, lemma);
}

std::vector<std::string> LexicalResource::substitutes(std::string_view predicate_lemma,
                                                      std::string* relation) const {
  std::vector<std::string> out;
  auto parts = split(predicate_lemma, '.');
  if (parts.empty() || parts[0] == "not") return out;

  if (parts[0] == "be" && parts.size() >= 2) {
    if (relation) *relation = "hyponym";
    std::vector<std::string> rest(parts.begin() + 1, parts.end());
    std::string prefix = "be.";
    std::string suffix;
    auto found = noun_hyponyms(join(rest, "_"));
    if (found.empty() && rest.size() > 1) {
      // Compound head ("be.tennis.player"), then a noun before a particle
      // ("be.author.of").
      found = noun_hyponyms(rest.back());
      if (!found.empty()) {
        prefix += join({rest.begin(), rest.end() - 1}, ".") + ".";
      } else {
        found = noun_hyponyms(rest.front());
        suffix = "." + join({rest.begin() + 1, rest.end()}, ".");
      }
    }
    for (const auto& w : found) out.push_back(prefix + dotted(w) + suffix);
    return out;
  }

  if (relation) *relation = "troponym";
  if (parts.size() > 1) {
    for (const auto& w : verb_troponyms(join(parts, "_"))) out.push_back(dotted(w));
    if (!out.empty()) return out;
  }
  std::vector<std::string> tail(parts.begin() + 1, parts.end());
  const std::string suffix = tail.empty() ? "" : "." + join(tail, ".");
  for (const auto& w : verb_troponyms(parts[0])) out.push_back(dotted(w) + suffix);
  return out;
}

}  // namespace mgraph
