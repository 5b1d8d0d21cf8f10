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

#include "mgraph/types.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>

#include <fmt/format.h>

#include "mgraph/common.hpp"

namespace mgraph {

namespace {

const char* const kFigerBaseTypes[] = {
    "art",          "astral_body",   "award",
    "biology",      "body_part",     "broadcast",
    "broadcast_network", "broadcast_program", "building",
    "chemistry",    "computer",      "disease",
    "education",    "event",         "finance",
    "food",         "game",          "geography",
    "god",          "government",    "government_agency",
    "internet",     "language",      "law",
    "living_thing", "location",      "medicine",
    "metropolitan_transit", "military", "music",
    "news_agency",  "newspaper",     "organization",
    "park",         "people",        "person",
    "play",         "product",       "rail",
    "religion",     "software",      "sports",
    "time",         "title",         "train",
    "transit",      "transportation", "visual_art",
    "written_work",
};

bool valid_type_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

int parse_int(std::string_view text) {
  int value = 0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
    throw DataError(fmt::format("expected integer, got '{}'", text));
  }
  return value;
}

}  // namespace

TypeInventory TypeInventory::defaults() {
  return TypeInventory(std::vector<std::string>(std::begin(kFigerBaseTypes),
                                                std::end(kFigerBaseTypes)));
}

TypeInventory TypeInventory::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot read type inventory {}", path.string()));
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    std::string label = normalize_surface(line);
    if (label.empty() || label[0] == '#') continue;
    labels.push_back(label);
  }
  return TypeInventory(std::move(labels));
}

TypeInventory::TypeInventory(std::vector<std::string> labels) {
  for (auto& label : labels) {
    if (!valid_type_label(label)) {
      throw DataError(fmt::format("invalid type label '{}'", label));
    }
    if (label != kFallbackType.name) labels_.insert(std::move(label));
  }
}

bool TypeInventory::contains(std::string_view label) const {
  return label == kFallbackType.name || labels_.find(label) != labels_.end();
}

EntityType TypeInventory::resolve(std::string_view label, bool* unknown) const {
  bool known = contains(label);
  if (unknown) *unknown = !known;
  return known ? EntityType{std::string(label)} : kFallbackType;
}

TypedPredicate TypedPredicate::unary(std::string lemma, int case_marker, EntityType type) {
  TypedPredicate p{std::move(lemma), case_marker, {std::move(type)}};
  p.validate();
  return p;
}

TypedPredicate TypedPredicate::binary(std::string lemma, EntityType first, EntityType second) {
  TypedPredicate p{std::move(lemma), 0, {std::move(first), std::move(second)}};
  p.validate();
  return p;
}

TypedPredicate TypedPredicate::parse_key(std::string_view key) {
  auto parts = split(key, '#');
  if (parts.size() < 2 || parts.size() > 3 || parts[0].empty()) {
    throw DataError(fmt::format("malformed predicate key '{}'", key));
  }
  TypedPredicate p;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!valid_type_label(parts[i])) {
      throw DataError(fmt::format("malformed predicate key '{}'", key));
    }
    p.slot_types.push_back(EntityType{parts[i]});
  }
  std::string name = parts[0];
  if (p.is_unary()) {
    auto dot = name.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == name.size()) {
      throw DataError(fmt::format("unary key '{}' lacks a case marker", key));
    }
    p.case_marker = parse_int(std::string_view(name).substr(dot + 1));
    name.resize(dot);
  }
  p.lemma = std::move(name);
  try {
    p.validate();
  } catch (const ContractError& e) {
    throw DataError(e.what());
  }
  return p;
}

std::string TypedPredicate::name() const {
  return case_marker > 0 ? fmt::format("{}.{}", lemma, case_marker) : lemma;
}

std::string TypedPredicate::key() const {
  std::string out = name();
  for (const auto& t : slot_types) {
    out += '#';
    out += t.name;
  }
  return out;
}

std::string TypedPredicate::untyped_key() const {
  return fmt::format("{}/{}", name(), valency());
}

void TypedPredicate::validate() const {
  if (lemma.empty()) throw ContractError("predicate lemma is empty");
  if (valency() != 1 && valency() != 2) {
    throw ContractError(fmt::format("predicate '{}' has valency {}", lemma, valency()));
  }
  if (is_unary() && case_marker <= 0) {
    throw ContractError(fmt::format("unary predicate '{}' needs a case marker", lemma));
  }
  if (!is_unary() && case_marker != 0) {
    throw ContractError(fmt::format("binary predicate '{}' carries a case marker", lemma));
  }
}

TypeSignature TypeSignature::parse(std::string_view text) {
  auto parts = split(text, '#');
  if (parts.empty() || parts.size() > 2) {
    throw DataError(fmt::format("malformed type signature '{}'", text));
  }
  TypeSignature sig;
  for (auto& p : parts) {
    if (!valid_type_label(p)) throw DataError(fmt::format("malformed type signature '{}'", text));
    sig.types.push_back(EntityType{p});
  }
  return sig;
}

bool TypeSignature::contains(const EntityType& t) const {
  return std::find(types.begin(), types.end(), t) != types.end();
}

std::string TypeSignature::key() const {
  std::vector<std::string> names;
  for (const auto& t : types) names.push_back(t.name);
  return join(names, "#");
}

std::string TypeSignature::file_stem() const {
  std::string out = is_bivalent() ? "bi" : "uni";
  for (const auto& t : types) out += "__" + t.name;
  return out;
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::BB: return "BB";
    case EdgeKind::BU: return "BU";
    case EdgeKind::UU: return "UU";
  }
  return "?";
}

EdgeKind parse_edge_kind(std::string_view text) {
  if (text == "BB") return EdgeKind::BB;
  if (text == "BU") return EdgeKind::BU;
  if (text == "UU") return EdgeKind::UU;
  throw DataError(fmt::format("unknown edge kind '{}'", text));
}

EdgeKind edge_kind_for(int premise_valency, int hypothesis_valency) {
  if (premise_valency == 2 && hypothesis_valency == 2) return EdgeKind::BB;
  if (premise_valency == 2 && hypothesis_valency == 1) return EdgeKind::BU;
  if (premise_valency == 1 && hypothesis_valency == 1) return EdgeKind::UU;
  throw ContractError(
      fmt::format("no edge kind for valency {} -> {}", premise_valency, hypothesis_valency));
}

ArgMap ArgMap::identity(int n) {
  ArgMap a;
  for (int i = 1; i <= n; ++i) {
    a.j.push_back(i);
    a.m.push_back(i);
  }
  return a;
}

ArgMap ArgMap::swap() { return ArgMap{{1, 2}, {2, 1}}; }

ArgMap ArgMap::select(int premise_slot) { return ArgMap{{premise_slot}, {1}}; }

ArgMap ArgMap::parse(std::string_view text) {
  auto halves = split(text, '>');
  if (halves.size() != 2) throw DataError(fmt::format("malformed arg map '{}'", text));
  ArgMap a;
  for (const auto& s : split(halves[0], ',')) a.j.push_back(parse_int(s));
  for (const auto& s : split(halves[1], ',')) a.m.push_back(parse_int(s));
  if (a.j.size() != a.m.size()) throw DataError(fmt::format("malformed arg map '{}'", text));
  return a;
}

std::string ArgMap::to_string() const {
  return fmt::format("{}>{}", fmt::join(j, ","), fmt::join(m, ","));
}

bool ArgMap::valid_for(int premise_valency, int hypothesis_valency) const {
  const int J = static_cast<int>(j.size());
  if (J != hypothesis_valency || m.size() != j.size()) return false;
  if (J < 1 || J > premise_valency) return false;
  for (int k = 0; k < J; ++k) {
    if (j[k] < 1 || j[k] > premise_valency) return false;
    if (k > 0 && j[k] <= j[k - 1]) return false;
  }
  std::vector<int> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < J; ++k) {
    if (sorted[k] != k + 1) return false;
  }
  return true;
}

std::vector<ArgMap> valid_arg_maps(int premise_valency, int hypothesis_valency) {
  std::vector<ArgMap> out;
  const int I = premise_valency, J = hypothesis_valency;
  if (J < 1 || J > I) return out;
  // Increasing selections of J slots out of I, each with every permutation.
  std::vector<bool> chosen(I, false);
  std::fill(chosen.begin(), chosen.begin() + J, true);
  std::vector<std::vector<int>> selections;
  do {
    std::vector<int> sel;
    for (int i = 0; i < I; ++i) {
      if (chosen[i]) sel.push_back(i + 1);
    }
    selections.push_back(sel);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  for (const auto& sel : selections) {
    std::vector<int> perm(J);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      out.push_back(ArgMap{sel, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace mgraph
