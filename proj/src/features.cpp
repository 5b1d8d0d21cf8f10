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

#include "mgraph/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace mgraph {

namespace {

constexpr char kCacheMagic[4] = {'M', 'G', 'C', 'S'};

std::uint64_t cell_key(std::uint32_t row, std::uint32_t feature) {
  return (static_cast<std::uint64_t>(row) << 32) | feature;
}

// Little-endian fixed-width encoding.
template <typename T>
void put(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

void put_string(std::ostream& out, const std::string& s) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

template <typename T>
T get(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) {
    throw DataError("count cache is truncated");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return static_cast<T>(v);
}

std::string get_string(std::istream& in) {
  auto n = get<std::uint32_t>(in);
  if (n > (1u << 24)) throw DataError("count cache string length is implausible");
  std::string s(n, '\0');
  if (n > 0 && !in.read(s.data(), n)) throw DataError("count cache is truncated");
  return s;
}

std::string row_label(const CountStore& store, const Corpus& corpus, std::uint32_t row) {
  const auto& r = store.rows().at(row);
  std::string key = corpus.predicate(r.predicate).key();
  return r.slot > 0 ? fmt::format("{}@{}", key, r.slot) : key;
}

std::string feature_label(const CountStore& store, const Corpus& corpus, std::uint32_t f) {
  if (store.mode() == CountMode::Pair) {
    auto [a, b] = store.pair_of(f);
    return fmt::format("({},{})", corpus.entity_key(a), corpus.entity_key(b));
  }
  return corpus.entity_key(EntityRef{f});
}

}  // namespace

std::uint64_t CountStore::feature_marginal(std::uint32_t feature) const {
  return feature < feature_marginal_.size() ? feature_marginal_[feature] : 0;
}

std::uint64_t CountStore::joint_count(std::uint32_t row, std::uint32_t feature) const {
  auto it = std::lower_bound(joint_.begin(), joint_.end(), JointCount{row, feature, 0},
                             [](const JointCount& a, const JointCount& b) {
                               return std::tie(a.row, a.feature) < std::tie(b.row, b.feature);
                             });
  if (it == joint_.end() || it->row != row || it->feature != feature) return 0;
  return it->count;
}

std::optional<std::uint32_t> CountStore::find_row(PredicateRef predicate, int slot) const {
  auto it = row_lookup_.find({predicate.index, slot});
  if (it == row_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> CountStore::find_pair(EntityRef a, EntityRef b) const {
  auto it = pair_lookup_.find({a, b});
  if (it == pair_lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t CountStore::intern_row(PredicateRef predicate, int slot, const EntityType& type) {
  auto [it, inserted] = row_lookup_.try_emplace({predicate.index, slot},
                                                static_cast<std::uint32_t>(rows_.size()));
  if (inserted) rows_.push_back(Row{predicate, slot, type});
  return it->second;
}

std::uint32_t CountStore::intern_pair(EntityRef a, EntityRef b) {
  auto [it, inserted] = pair_lookup_.try_emplace({a, b}, static_cast<std::uint32_t>(pairs_.size()));
  if (inserted) pairs_.emplace_back(a, b);
  return it->second;
}

void CountStore::finalize(std::unordered_map<std::uint64_t, std::uint64_t>& cells) {
  joint_.clear();
  joint_.reserve(cells.size());
  for (const auto& [key, n] : cells) {
    joint_.push_back(JointCount{static_cast<std::uint32_t>(key >> 32),
                                static_cast<std::uint32_t>(key & 0xffffffffu), n});
  }
  std::sort(joint_.begin(), joint_.end(), [](const JointCount& a, const JointCount& b) {
    return std::tie(a.row, a.feature) < std::tie(b.row, b.feature);
  });
  row_marginal_.assign(rows_.size(), 0);
  if (mode_ == CountMode::Pair) feature_marginal_.assign(pairs_.size(), 0);
  total_ = 0;
  for (const auto& c : joint_) {
    row_marginal_[c.row] += c.count;
    if (c.feature >= feature_marginal_.size()) feature_marginal_.resize(c.feature + 1, 0);
    feature_marginal_[c.feature] += c.count;
    total_ += c.count;
  }
}

void CountStore::check_invariants() const {
  std::vector<std::uint64_t> rows(rows_.size(), 0), feats(feature_marginal_.size(), 0);
  std::uint64_t total = 0;
  for (const auto& c : joint_) {
    if (c.count == 0) throw ContractError("zero joint count stored");
    rows.at(c.row) += c.count;
    feats.at(c.feature) += c.count;
    total += c.count;
  }
  if (total != total_ || rows != row_marginal_ || feats != feature_marginal_) {
    throw ContractError("count store marginals disagree with joint counts");
  }
}

bool CountStore::operator==(const CountStore& other) const {
  return mode_ == other.mode_ && rows_ == other.rows_ && pairs_ == other.pairs_ &&
         joint_ == other.joint_ && row_marginal_ == other.row_marginal_ &&
         feature_marginal_ == other.feature_marginal_ && total_ == other.total_;
}

CountStore count(const Corpus& corpus, CountMode mode) {
  CountStore store(mode);
  std::unordered_map<std::uint64_t, std::uint64_t> cells;
  for (const auto& p : corpus.propositions()) {
    const auto& tp = corpus.predicate(p.predicate);
    if (mode == CountMode::Pair) {
      if (tp.valency() != 2) continue;
      auto row = store.intern_row(p.predicate, 0, EntityType{});
      auto feature = store.intern_pair(p.args[0], p.args[1]);
      ++cells[cell_key(row, feature)];
    } else {
      for (std::size_t i = 0; i < p.args.size(); ++i) {
        auto row = store.intern_row(p.predicate, static_cast<int>(i + 1), tp.slot_types[i]);
        ++cells[cell_key(row, p.args[i].index)];
      }
    }
  }
  if (mode == CountMode::Slot) store.feature_marginal_.assign(corpus.entity_count(), 0);
  store.finalize(cells);
  return store;
}

double pmi(const CountStore& store, std::uint32_t row, std::uint32_t feature) {
  const std::uint64_t joint = store.joint_count(row, feature);
  if (joint == 0) return 0.0;
  const double ratio = static_cast<double>(joint) * static_cast<double>(store.total()) /
                       (static_cast<double>(store.row_marginal(row)) *
                        static_cast<double>(store.feature_marginal(feature)));
  return std::max(0.0, std::log(ratio));
}

VectorSet build_vectors(const CountStore& store, const FeatureConfig& config) {
  VectorSet out;
  if (store.mode() == CountMode::Pair) {
    out.pair_feature_count = static_cast<std::uint32_t>(store.feature_count());
  }
  const auto& joint = store.joint();
  const double total = static_cast<double>(store.total());
  std::size_t i = 0;
  while (i < joint.size()) {
    const std::uint32_t row = joint[i].row;
    std::size_t end = i;
    while (end < joint.size() && joint[end].row == row) ++end;
    const std::uint64_t row_count = store.row_marginal(row);
    if (row_count >= config.min_predicate_count) {
      SparseVector v;
      for (std::size_t k = i; k < end; ++k) {
        const double ratio = static_cast<double>(joint[k].count) * total /
                             (static_cast<double>(row_count) *
                              static_cast<double>(store.feature_marginal(joint[k].feature)));
        const double w = std::log(ratio);
        if (w > 0.0) {
          v.keys.push_back(joint[k].feature);
          v.weights.push_back(w);
          v.total += w;
        }
      }
      const auto& r = store.rows()[row];
      if (store.mode() == CountMode::Pair) {
        out.pair.emplace(r.predicate, PairVector{r.predicate, std::move(v)});
      } else {
        out.slot.emplace(std::make_pair(r.predicate, r.slot),
                         SlotVector{r.predicate, r.slot, r.type, std::move(v)});
      }
    }
    i = end;
  }
  return out;
}

VectorSet build_all_vectors(const CountStore& pair_store, const CountStore& slot_store,
                            const FeatureConfig& config) {
  VectorSet pairs = build_vectors(pair_store, config);
  VectorSet slots = build_vectors(slot_store, config);
  pairs.slot = std::move(slots.slot);
  return pairs;
}

SparseVector swapped_pair_vector(const SparseVector& v, const CountStore& pair_store) {
  const auto space = static_cast<std::uint32_t>(pair_store.feature_count());
  std::vector<std::pair<std::uint32_t, double>> entries;
  entries.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [a, b] = pair_store.pair_of(v.keys[i]);
    auto reversed = pair_store.find_pair(b, a);
    entries.emplace_back(reversed ? *reversed : space + v.keys[i], v.weights[i]);
  }
  return SparseVector::from_pairs(std::move(entries));
}

void write_count_cache(const CountStore& store, const Corpus& corpus, std::ostream& out) {
  out.write(kCacheMagic, 4);
  put<std::uint32_t>(out, kCountCacheVersion);
  put<std::uint8_t>(out, static_cast<std::uint8_t>(store.mode()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(store.rows().size()));
  for (const auto& r : store.rows()) {
    put_string(out, corpus.predicate(r.predicate).key());
    put<std::uint32_t>(out, static_cast<std::uint32_t>(r.slot));
  }
  if (store.mode() == CountMode::Pair) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(store.feature_count()));
    for (std::uint32_t f = 0; f < store.feature_count(); ++f) {
      auto [a, b] = store.pair_of(f);
      put_string(out, corpus.entity_key(a));
      put_string(out, corpus.entity_key(b));
    }
  } else {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(corpus.entity_count()));
    for (std::uint32_t e = 0; e < corpus.entity_count(); ++e) {
      put_string(out, corpus.entity_key(EntityRef{e}));
    }
  }
  put<std::uint64_t>(out, store.joint().size());
  for (const auto& c : store.joint()) {
    put<std::uint32_t>(out, c.row);
    put<std::uint32_t>(out, c.feature);
    put<std::uint64_t>(out, c.count);
  }
}

CountStore read_count_cache(std::istream& in, const Corpus& corpus) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kCacheMagic, 4) != 0) {
    throw DataError("not a count cache file");
  }
  auto version = get<std::uint32_t>(in);
  if (version != kCountCacheVersion) {
    throw VersionError(fmt::format("count cache version {}, expected {}", version,
                                   kCountCacheVersion));
  }
  auto mode_byte = get<std::uint8_t>(in);
  if (mode_byte > 1) throw DataError("count cache has an unknown mode");
  CountStore store(static_cast<CountMode>(mode_byte));

  auto resolve_entity = [&](const std::string& key) {
    auto ref = corpus.find_entity(key);
    if (!ref) throw DataError(fmt::format("count cache entity '{}' is not in the corpus", key));
    return *ref;
  };

  auto nrows = get<std::uint32_t>(in);
  for (std::uint32_t i = 0; i < nrows; ++i) {
    auto tp = TypedPredicate::parse_key(get_string(in));
    auto slot = static_cast<int>(get<std::uint32_t>(in));
    auto ref = corpus.find_predicate(tp);
    if (!ref) throw DataError(fmt::format("count cache predicate '{}' is not in the corpus", tp.key()));
    EntityType type = slot > 0 ? tp.slot_types.at(slot - 1) : EntityType{};
    store.intern_row(*ref, slot, type);
  }
  auto nfeatures = get<std::uint32_t>(in);
  std::vector<std::uint32_t> feature_map(nfeatures);
  for (std::uint32_t f = 0; f < nfeatures; ++f) {
    if (store.mode() == CountMode::Pair) {
      auto a = resolve_entity(get_string(in));
      auto b = resolve_entity(get_string(in));
      feature_map[f] = store.intern_pair(a, b);
    } else {
      feature_map[f] = resolve_entity(get_string(in)).index;
    }
  }
  std::unordered_map<std::uint64_t, std::uint64_t> cells;
  auto ncells = get<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < ncells; ++i) {
    auto row = get<std::uint32_t>(in);
    auto feature = get<std::uint32_t>(in);
    auto n = get<std::uint64_t>(in);
    if (row >= nrows || feature >= nfeatures) throw DataError("count cache cell out of range");
    cells[cell_key(row, feature_map[feature])] += n;
  }
  if (store.mode() == CountMode::Slot) store.feature_marginal_.assign(corpus.entity_count(), 0);
  store.finalize(cells);
  return store;
}

void write_count_tsv(const CountStore& store, const Corpus& corpus, std::ostream& out) {
  out << "row\tfeature\tcount\tpmi\n";
  for (const auto& c : store.joint()) {
    out << row_label(store, corpus, c.row) << '\t' << feature_label(store, corpus, c.feature)
        << '\t' << c.count << '\t' << format_double(pmi(store, c.row, c.feature)) << '\n';
  }
}

}  // namespace mgraph
