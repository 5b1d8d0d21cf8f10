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

// Vocabulary types shared by every stage: entity types, typed predicates,
// subgraph signatures and argument maps.

#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mgraph {

struct EntityType {
  std::string name;

  auto operator<=>(const EntityType&) const = default;
};

inline const EntityType kFallbackType{"thing"};

// Closed inventory of entity type labels. Unknown labels resolve to the
// fallback type "thing", which is always a member.
class TypeInventory {
 public:
  // The 49 coarse FIGER labels (plus the fallback).
  static TypeInventory defaults();
  // One label per line; blank lines and lines starting with '#' are ignored.
  static TypeInventory load(const std::filesystem::path& path);

  explicit TypeInventory(std::vector<std::string> labels);

  bool contains(std::string_view label) const;
  // Returns the type for `label`, or the fallback when the label is unknown.
  EntityType resolve(std::string_view label, bool* unknown = nullptr) const;
  // Labels excluding the fallback.
  std::size_t size() const { return labels_.size(); }
  const std::set<std::string, std::less<>>& labels() const { return labels_; }

 private:
  std::set<std::string, std::less<>> labels_;
};

// A graph vertex: lemma, valency and per-slot types. Unary predicates carry
// the case marker of their argument (kill.2 = the accusative of kill).
struct TypedPredicate {
  std::string lemma;
  int case_marker = 0;
  std::vector<EntityType> slot_types;

  static TypedPredicate unary(std::string lemma, int case_marker, EntityType type);
  static TypedPredicate binary(std::string lemma, EntityType first, EntityType second);
  // Parses the output of key(). Throws DataError on malformed keys.
  static TypedPredicate parse_key(std::string_view key);

  int valency() const { return static_cast<int>(slot_types.size()); }
  bool is_unary() const { return valency() == 1; }
  // "kill.2", "be.author.1", "buy".
  std::string name() const;
  // "kill.2#person", "buy#organization#organization".
  std::string key() const;
  // Type-free identity used for back-off: "kill.2/1", "buy/2".
  std::string untyped_key() const;
  // Throws ContractError unless valency and case marker are consistent.
  void validate() const;

  auto operator<=>(const TypedPredicate&) const = default;
};

// Type signature of a typed subgraph: one type (univalent) or an ordered
// pair (bivalent).
struct TypeSignature {
  std::vector<EntityType> types;

  static TypeSignature univalent(EntityType t) { return {{std::move(t)}}; }
  static TypeSignature bivalent(EntityType a, EntityType b) {
    return {{std::move(a), std::move(b)}};
  }
  static TypeSignature parse(std::string_view text);

  bool is_bivalent() const { return types.size() == 2; }
  bool contains(const EntityType& t) const;
  // "person" or "person#location".
  std::string key() const;
  // File stem: "uni__person", "bi__person__location".
  std::string file_stem() const;

  auto operator<=>(const TypeSignature&) const = default;
};

enum class EdgeKind : std::uint8_t { BB, BU, UU };

std::string_view to_string(EdgeKind kind);
EdgeKind parse_edge_kind(std::string_view text);
// BB for 2->2, BU for 2->1, UU for 1->1; throws ContractError otherwise.
EdgeKind edge_kind_for(int premise_valency, int hypothesis_valency);

// Selects premise slots `j` (1-based, ascending) and sends the k-th selected
// slot to hypothesis slot `m[k]`. For valencies {1,2} the valid maps are the
// 2->2 identity and swap, 2->1 on slot 1 or slot 2, and the 1->1 identity.
struct ArgMap {
  std::vector<int> j;
  std::vector<int> m;

  static ArgMap identity(int n);
  static ArgMap swap();
  static ArgMap select(int premise_slot);
  // Parses "1,2>2,1". Throws DataError on malformed text.
  static ArgMap parse(std::string_view text);

  std::size_t size() const { return j.size(); }
  std::string to_string() const;
  // True iff j is a strictly increasing selection from 1..premise_valency,
  // m is a permutation of 1..J and J <= I.
  bool valid_for(int premise_valency, int hypothesis_valency) const;
  // Hypothesis argument tuple induced by a premise tuple.
  template <typename T>
  std::vector<T> apply(const std::vector<T>& premise_args) const {
    std::vector<T> out(m.size());
    for (std::size_t k = 0; k < j.size(); ++k) out[m[k] - 1] = premise_args[j[k] - 1];
    return out;
  }

  auto operator<=>(const ArgMap&) const = default;
};

// Every valid map for the given valencies, in a fixed order (identity first).
std::vector<ArgMap> valid_arg_maps(int premise_valency, int hypothesis_valency);

}  // namespace mgraph
