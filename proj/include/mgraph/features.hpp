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

// Count statistics and PMI-weighted feature vectors.
//
// Pair mode counts (binary predicate, ordered argument pair) events and
// yields one PairVector per binary predicate. Slot mode counts
// (predicate, slot, entity) events for the unary slot and both binary slots
// and yields one SlotVector per (predicate, slot). Slot-vector keys are
// corpus entity indexes, so slot vectors of the same entity type are directly
// comparable.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgraph/corpus.hpp"
#include "mgraph/sparse_vector.hpp"
#include "mgraph/types.hpp"

namespace mgraph {

inline constexpr int kCountCacheVersion = 1;

enum class CountMode : std::uint8_t { Pair, Slot };

struct JointCount {
  std::uint32_t row = 0;
  std::uint32_t feature = 0;
  std::uint64_t count = 0;

  bool operator==(const JointCount&) const = default;
};

class CountStore {
 public:
  // A row is a binary predicate (pair mode, slot 0) or a predicate slot.
  struct Row {
    PredicateRef predicate;
    int slot = 0;
    EntityType type;

    bool operator==(const Row&) const = default;
  };

  explicit CountStore(CountMode mode = CountMode::Pair) : mode_(mode) {}

  CountMode mode() const { return mode_; }
  const std::vector<Row>& rows() const { return rows_; }
  // Sorted by (row, feature).
  const std::vector<JointCount>& joint() const { return joint_; }
  std::uint64_t row_marginal(std::uint32_t row) const { return row_marginal_.at(row); }
  std::uint64_t feature_marginal(std::uint32_t feature) const;
  std::uint64_t total() const { return total_; }
  std::size_t feature_count() const { return feature_marginal_.size(); }

  std::uint64_t joint_count(std::uint32_t row, std::uint32_t feature) const;
  std::optional<std::uint32_t> find_row(PredicateRef predicate, int slot) const;

  // Pair mode: the argument pair behind a feature id, and the id of a pair.
  std::pair<EntityRef, EntityRef> pair_of(std::uint32_t feature) const { return pairs_.at(feature); }
  std::optional<std::uint32_t> find_pair(EntityRef a, EntityRef b) const;

  // total == sum of joint counts; marginals are its row/column sums.
  void check_invariants() const;

  bool operator==(const CountStore& other) const;

 private:
  friend CountStore count(const Corpus&, CountMode);
  friend CountStore read_count_cache(std::istream&, const Corpus&);

  std::uint32_t intern_row(PredicateRef predicate, int slot, const EntityType& type);
  std::uint32_t intern_pair(EntityRef a, EntityRef b);
  void finalize(std::unordered_map<std::uint64_t, std::uint64_t>& cells);

  CountMode mode_;
  std::vector<Row> rows_;
  std::map<std::pair<std::uint32_t, int>, std::uint32_t> row_lookup_;
  std::vector<std::pair<EntityRef, EntityRef>> pairs_;
  std::map<std::pair<EntityRef, EntityRef>, std::uint32_t> pair_lookup_;
  std::vector<JointCount> joint_;
  std::vector<std::uint64_t> row_marginal_;
  std::vector<std::uint64_t> feature_marginal_;
  std::uint64_t total_ = 0;
};

// Empty corpus yields an empty store.
CountStore count(const Corpus& corpus, CountMode mode);

// Positive PMI, natural log:
//   max(0, log( joint * total / (row_marginal * feature_marginal) ))
// Unseen (row, feature) cells are 0 by definition.
double pmi(const CountStore& store, std::uint32_t row, std::uint32_t feature);

struct PairVector {
  PredicateRef predicate;
  SparseVector features;
};

struct SlotVector {
  PredicateRef predicate;
  int slot = 0;
  EntityType slot_type;
  SparseVector features;
};

struct FeatureConfig {
  // Predicates seen fewer times get no vector.
  std::uint64_t min_predicate_count = 3;
};

struct VectorSet {
  std::map<PredicateRef, PairVector> pair;
  std::map<std::pair<PredicateRef, int>, SlotVector> slot;
  // Pair-mode feature space size; keys >= this are swap-only placeholders.
  std::uint32_t pair_feature_count = 0;
};

// Fills `pair` (pair mode) or `slot` (slot mode). Zero-weight features are
// dropped; weights are accumulated in sorted key order.
VectorSet build_vectors(const CountStore& store, const FeatureConfig& config = {});

// Convenience: both modes merged into one set.
VectorSet build_all_vectors(const CountStore& pair_store, const CountStore& slot_store,
                            const FeatureConfig& config = {});

// Re-keys a pair vector so feature (a, b) becomes (b, a). Pairs whose reverse
// never occurs get unique placeholder keys that match nothing, so totals are
// preserved.
SparseVector swapped_pair_vector(const SparseVector& v, const CountStore& pair_store);

// Binary cache with a versioned header. Predicates and entities are stored by
// key and resolved against `corpus` when reading (DataError on mismatch,
// VersionError on an unknown version).
void write_count_cache(const CountStore& store, const Corpus& corpus, std::ostream& out);
CountStore read_count_cache(std::istream& in, const Corpus& corpus);

// Debug dump: row, feature, count, pmi (tab separated, one cell per line).
void write_count_tsv(const CountStore& store, const Corpus& corpus, std::ostream& out);

}  // namespace mgraph
