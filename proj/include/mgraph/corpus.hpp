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

// Proposition corpus: record format, ingestion and occurrence indexes.

#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgraph/common.hpp"
#include "mgraph/lemmatizer.hpp"
#include "mgraph/types.hpp"

namespace mgraph {

inline constexpr int kCorpusFormatVersion = 1;

// Entity identity. Two ids are equal when both carry a knowledge-base id and
// those match; otherwise when their normalized surfaces match.
struct EntityId {
  std::string surface;
  std::optional<std::string> kb_id;
  bool is_named = false;

  // Interning key: "kb:<id>" when linked, "s:<surface>" otherwise.
  std::string canonical_key() const;
  bool operator==(const EntityId& other) const;
};

struct EntityRef {
  std::uint32_t index = 0;
  auto operator<=>(const EntityRef&) const = default;
};

struct PredicateRef {
  std::uint32_t index = 0;
  auto operator<=>(const PredicateRef&) const = default;
};

// One argument of a raw extraction record. `role_index` is the surface
// argument position (1 = subject, 2 = object, 3+ = obliques).
struct RawArg {
  std::string surface;
  std::optional<std::string> kb_id;
  std::string type;
  bool is_named = false;
  int role_index = 0;
};

// One line of a proposition file, before normalization.
struct RawRecord {
  std::string article_id;
  std::optional<Date> date;
  int sentence_idx = 0;
  std::string predicate;
  Voice voice = Voice::Active;
  std::vector<std::string> modifiers;
  std::vector<RawArg> args;
};

// Throws DataError describing the first problem found.
RawRecord parse_record(std::string_view json_line);
std::string record_to_json(const RawRecord& record);

// A record after predicate normalization and passive role mapping: `lemma`
// is final and `args` are sorted by role.
struct NormalizedRecord {
  RawRecord source;
  std::string lemma;
  std::vector<RawArg> args;
};

// Applies normalize_predicate and the passive role swap. Throws DataError.
NormalizedRecord normalize_record(const RawRecord& record);

// Splits an n-ary record (n >= 3) into the n(n-1)/2 binaries over ordered
// role pairs, naming each `<lemma>.<r1>.<r2>`. Records of valency <= 2 pass
// through unchanged. Throws DataError on duplicate role labels.
std::vector<NormalizedRecord> decompose_higher_valency(const NormalizedRecord& record);

struct Proposition {
  PredicateRef predicate;
  std::vector<EntityRef> args;
  std::string article_id;
  std::optional<Date> date;
  int sentence_idx = 0;
  bool negated = false;

  bool operator==(const Proposition&) const = default;
};

struct IngestConfig {
  TypeInventory types = TypeInventory::defaults();
};

struct IngestStats {
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t unnamed_filtered = 0;
  std::size_t unknown_types = 0;
  std::size_t decomposed_records = 0;
};

// Immutable after construction; safe for concurrent readers.
class Corpus {
 public:
  Corpus() = default;

  const std::vector<Proposition>& propositions() const { return propositions_; }
  std::size_t size() const { return propositions_.size(); }
  const Proposition& proposition(std::size_t id) const { return propositions_.at(id); }

  std::size_t entity_count() const { return entities_.size(); }
  const EntityId& entity(EntityRef ref) const { return entities_.at(ref.index); }
  std::string entity_key(EntityRef ref) const { return entity(ref).canonical_key(); }
  std::optional<EntityRef> find_entity(std::string_view canonical_key) const;

  std::size_t predicate_count() const { return predicates_.size(); }
  const TypedPredicate& predicate(PredicateRef ref) const { return predicates_.at(ref.index); }
  std::optional<PredicateRef> find_predicate(const TypedPredicate& p) const;

  std::uint64_t entity_occurrences(EntityRef ref) const { return entity_counts_.at(ref.index); }
  std::uint64_t predicate_occurrences(PredicateRef ref) const {
    return predicate_counts_.at(ref.index);
  }
  std::uint64_t predicate_occurrences(const TypedPredicate& p) const;
  std::uint64_t pair_occurrences(EntityRef a, EntityRef b) const;
  const std::map<std::pair<EntityRef, EntityRef>, std::uint64_t>& pair_index() const {
    return pair_counts_;
  }

  // Canonical entity keys of a proposition's arguments, in slot order.
  std::vector<std::string> arg_keys(const Proposition& p) const;

  const IngestStats& stats() const { return stats_; }

  // Recomputes every index from the proposition list and compares; also
  // checks valency/arity agreement. Throws ContractError on violation.
  void check_invariants() const;

  // Equality over propositions, tables and indexes (stats excluded).
  bool operator==(const Corpus& other) const;

 private:
  friend class CorpusBuilder;

  std::vector<Proposition> propositions_;
  std::vector<EntityId> entities_;
  std::unordered_map<std::string, EntityRef> entity_lookup_;
  std::vector<TypedPredicate> predicates_;
  std::map<TypedPredicate, PredicateRef> predicate_lookup_;
  std::vector<std::uint64_t> entity_counts_;
  std::vector<std::uint64_t> predicate_counts_;
  std::map<std::pair<EntityRef, EntityRef>, std::uint64_t> pair_counts_;
  IngestStats stats_;
};

// Collects records, then resolves entities and builds indexes in build().
class CorpusBuilder {
 public:
  explicit CorpusBuilder(IngestConfig config = {});

  // Malformed records are counted in stats, never thrown.
  void add(const RawRecord& record);
  void add_line(std::string_view json_line);

  Corpus build();

 private:
  IngestConfig config_;
  std::vector<NormalizedRecord> pending_;
  IngestStats stats_;
};

// Reads a proposition file. An optional first line {"manifest": {...}} is
// checked for a compatible format version. Throws DataError if unreadable
// and VersionError on an incompatible manifest.
Corpus ingest(const std::filesystem::path& path, const IngestConfig& config = {});
Corpus ingest(std::istream& in, const IngestConfig& config = {});

// Writes the corpus in normalized record form: re-ingesting the output yields
// an equal corpus. `manifest_json`, when non-empty, is written as line one.
void write_corpus(const Corpus& corpus, std::ostream& out,
                  const std::string& manifest_json = {});

}  // namespace mgraph
