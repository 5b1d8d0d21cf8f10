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

#include "mgraph/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "mgraph/manifest.hpp"

namespace mgraph {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw DataError(fmt::format("missing field '{}'", field));
  return *it;
}

std::string require_string(const json& obj, const char* field) {
  const json& v = require(obj, field);
  if (!v.is_string()) throw DataError(fmt::format("field '{}' must be a string", field));
  return v.get<std::string>();
}

int require_int(const json& obj, const char* field) {
  const json& v = require(obj, field);
  if (!v.is_number_integer()) throw DataError(fmt::format("field '{}' must be an integer", field));
  return v.get<int>();
}

bool lemma_is_negated(std::string_view lemma) {
  for (const auto& tok : split(lemma, '.')) {
    if (tok == "not") return true;
  }
  return false;
}

}  // namespace

std::string EntityId::canonical_key() const {
  return kb_id ? "kb:" + *kb_id : "s:" + surface;
}

bool EntityId::operator==(const EntityId& other) const {
  if (kb_id && other.kb_id) return *kb_id == *other.kb_id;
  return surface == other.surface;
}

RawRecord parse_record(std::string_view json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw DataError(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!j.is_object()) throw DataError("record is not a JSON object");

  RawRecord r;
  r.article_id = require_string(j, "article_id");
  if (auto it = j.find("date"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError("field 'date' must be a string");
    auto text = it->get<std::string>();
    if (!text.empty()) {
      r.date = Date::parse(text);
      if (!r.date) throw DataError(fmt::format("invalid date '{}'", text));
    }
  }
  r.sentence_idx = require_int(j, "sentence_idx");
  if (r.sentence_idx < 0) throw DataError("sentence_idx must be >= 0");
  r.predicate = require_string(j, "predicate");
  auto voice = parse_voice(require_string(j, "voice"));
  if (!voice) throw DataError("unknown voice");
  r.voice = *voice;
  if (auto it = j.find("modifiers"); it != j.end()) {
    if (!it->is_array()) throw DataError("field 'modifiers' must be a list");
    for (const auto& m : *it) {
      if (!m.is_string()) throw DataError("modifiers must be strings");
      r.modifiers.push_back(m.get<std::string>());
    }
  }
  const json& args = require(j, "args");
  if (!args.is_array()) throw DataError("field 'args' must be a list");
  for (const auto& a : args) {
    if (!a.is_object()) throw DataError("argument is not an object");
    RawArg arg;
    arg.surface = require_string(a, "surface");
    if (auto it = a.find("kb_id"); it != a.end() && !it->is_null()) {
      if (!it->is_string()) throw DataError("field 'kb_id' must be a string");
      if (!it->get<std::string>().empty()) arg.kb_id = it->get<std::string>();
    }
    arg.type = require_string(a, "type");
    const json& named = require(a, "is_named");
    if (!named.is_boolean()) throw DataError("field 'is_named' must be a boolean");
    arg.is_named = named.get<bool>();
    arg.role_index = require_int(a, "role_index");
    if (arg.role_index < 1) throw DataError("role_index must be >= 1");
    r.args.push_back(std::move(arg));
  }
  return r;
}

std::string record_to_json(const RawRecord& r) {
  nlohmann::ordered_json j;
  j["article_id"] = r.article_id;
  j["date"] = r.date ? json(r.date->to_string()) : json(nullptr);
  j["sentence_idx"] = r.sentence_idx;
  j["predicate"] = r.predicate;
  j["voice"] = std::string(to_string(r.voice));
  j["modifiers"] = r.modifiers;
  j["args"] = nlohmann::ordered_json::array();
  for (const auto& a : r.args) {
    nlohmann::ordered_json arg;
    arg["surface"] = a.surface;
    if (a.kb_id) arg["kb_id"] = *a.kb_id;
    arg["type"] = a.type;
    arg["is_named"] = a.is_named;
    arg["role_index"] = a.role_index;
    j["args"].push_back(std::move(arg));
  }
  return j.dump();
}

NormalizedRecord normalize_record(const RawRecord& record) {
  NormalizedRecord out;
  out.source = record;
  auto norm = normalize_predicate(record.predicate, record.voice, record.modifiers);
  out.lemma = std::move(norm.lemma);
  out.args = record.args;
  for (auto& a : out.args) {
    a.surface = normalize_surface(a.surface);
    if (a.surface.empty()) throw DataError("argument surface is empty");
    a.type = normalize_surface(a.type);
    if (norm.swap_roles) {
      if (a.role_index == 1) {
        a.role_index = 2;
      } else if (a.role_index == 2) {
        a.role_index = 1;
      }
    }
  }
  std::stable_sort(out.args.begin(), out.args.end(),
                   [](const RawArg& a, const RawArg& b) { return a.role_index < b.role_index; });
  return out;
}

std::vector<NormalizedRecord> decompose_higher_valency(const NormalizedRecord& record) {
  std::set<int> roles;
  for (const auto& a : record.args) {
    if (!roles.insert(a.role_index).second) {
      throw DataError(fmt::format("duplicate role label {} in '{}'", a.role_index, record.lemma));
    }
  }
  if (record.args.size() <= 2) return {record};

  std::vector<RawArg> sorted = record.args;
  std::sort(sorted.begin(), sorted.end(),
            [](const RawArg& a, const RawArg& b) { return a.role_index < b.role_index; });
  std::vector<NormalizedRecord> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t k = i + 1; k < sorted.size(); ++k) {
      NormalizedRecord b;
      b.source = record.source;
      b.lemma = fmt::format("{}.{}.{}", record.lemma, sorted[i].role_index, sorted[k].role_index);
      b.args = {sorted[i], sorted[k]};
      b.args[0].role_index = 1;
      b.args[1].role_index = 2;
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::optional<EntityRef> Corpus::find_entity(std::string_view canonical_key) const {
  auto it = entity_lookup_.find(std::string(canonical_key));
  if (it == entity_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<PredicateRef> Corpus::find_predicate(const TypedPredicate& p) const {
  auto it = predicate_lookup_.find(p);
  if (it == predicate_lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Corpus::predicate_occurrences(const TypedPredicate& p) const {
  auto ref = find_predicate(p);
  return ref ? predicate_occurrences(*ref) : 0;
}

std::uint64_t Corpus::pair_occurrences(EntityRef a, EntityRef b) const {
  auto it = pair_counts_.find({a, b});
  return it == pair_counts_.end() ? 0 : it->second;
}

std::vector<std::string> Corpus::arg_keys(const Proposition& p) const {
  std::vector<std::string> out;
  out.reserve(p.args.size());
  for (auto ref : p.args) out.push_back(entity_key(ref));
  return out;
}

void Corpus::check_invariants() const {
  std::vector<std::uint64_t> ent(entities_.size(), 0), pred(predicates_.size(), 0);
  std::map<std::pair<EntityRef, EntityRef>, std::uint64_t> pairs;
  for (const auto& p : propositions_) {
    const auto& tp = predicate(p.predicate);
    if (static_cast<int>(p.args.size()) != tp.valency()) {
      throw ContractError(fmt::format("proposition arity {} != valency of {}", p.args.size(),
                                      tp.key()));
    }
    bool named = false;
    for (auto a : p.args) {
      ++ent.at(a.index);
      named = named || entity(a).is_named;
    }
    if (!named) throw ContractError("proposition without a named argument");
    ++pred.at(p.predicate.index);
    if (p.args.size() == 2) ++pairs[{p.args[0], p.args[1]}];
  }
  if (ent != entity_counts_ || pred != predicate_counts_ || pairs != pair_counts_) {
    throw ContractError("corpus index counts disagree with propositions");
  }
}

bool Corpus::operator==(const Corpus& other) const {
  if (propositions_ != other.propositions_ || predicates_ != other.predicates_) return false;
  if (entities_.size() != other.entities_.size()) return false;
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    const auto& a = entities_[i];
    const auto& b = other.entities_[i];
    if (a.surface != b.surface || a.kb_id != b.kb_id || a.is_named != b.is_named) return false;
  }
  return entity_counts_ == other.entity_counts_ &&
         predicate_counts_ == other.predicate_counts_ && pair_counts_ == other.pair_counts_;
}

CorpusBuilder::CorpusBuilder(IngestConfig config) : config_(std::move(config)) {}

void CorpusBuilder::add(const RawRecord& record) {
  ++stats_.records;
  try {
    NormalizedRecord norm = normalize_record(record);
    if (norm.args.empty()) throw DataError("record has no arguments");
    auto parts = decompose_higher_valency(norm);
    if (norm.args.size() > 2) ++stats_.decomposed_records;
    for (auto& part : parts) pending_.push_back(std::move(part));
  } catch (const DataError&) {
    ++stats_.malformed;
  }
}

void CorpusBuilder::add_line(std::string_view json_line) {
  RawRecord record;
  try {
    record = parse_record(json_line);
  } catch (const DataError&) {
    ++stats_.records;
    ++stats_.malformed;
    return;
  }
  add(record);
}

Corpus CorpusBuilder::build() {
  Corpus c;

  // Unlinked mentions adopt a kb id when exactly one linked entity has their
  // surface as its first-mention surface. Keying on the first mention (the
  // surface the entity keeps) makes write_corpus output re-ingest identically.
  std::map<std::string, std::string> first_surface;
  for (const auto& r : pending_) {
    for (const auto& a : r.args) {
      if (a.kb_id) first_surface.try_emplace(*a.kb_id, a.surface);
    }
  }
  std::map<std::string, std::set<std::string>> surface_links;
  for (const auto& [kb, surface] : first_surface) surface_links[surface].insert(kb);

  for (auto& r : pending_) {
    bool any_named = std::any_of(r.args.begin(), r.args.end(),
                                 [](const RawArg& a) { return a.is_named; });
    if (!any_named) {
      ++stats_.unnamed_filtered;
      continue;
    }
    std::vector<EntityType> types;
    std::vector<EntityRef> args;
    for (const auto& a : r.args) {
      bool unknown = false;
      types.push_back(config_.types.resolve(a.type, &unknown));
      if (unknown) ++stats_.unknown_types;

      EntityId id{a.surface, a.kb_id, a.is_named};
      if (!id.kb_id) {
        auto it = surface_links.find(a.surface);
        if (it != surface_links.end() && it->second.size() == 1) id.kb_id = *it->second.begin();
      }
      std::string key = id.canonical_key();
      auto [it, inserted] =
          c.entity_lookup_.try_emplace(key, EntityRef{static_cast<std::uint32_t>(c.entities_.size())});
      if (inserted) {
        c.entities_.push_back(id);
        c.entity_counts_.push_back(0);
      } else if (id.is_named) {
        c.entities_[it->second.index].is_named = true;
      }
      args.push_back(it->second);
    }

    TypedPredicate tp;
    if (args.size() == 1) {
      tp = TypedPredicate::unary(r.lemma, r.args[0].role_index, types[0]);
    } else {
      tp = TypedPredicate::binary(r.lemma, types[0], types[1]);
    }
    auto [pit, pinserted] = c.predicate_lookup_.try_emplace(
        tp, PredicateRef{static_cast<std::uint32_t>(c.predicates_.size())});
    if (pinserted) {
      c.predicates_.push_back(tp);
      c.predicate_counts_.push_back(0);
    }

    Proposition p;
    p.predicate = pit->second;
    p.args = std::move(args);
    p.article_id = r.source.article_id;
    p.date = r.source.date;
    p.sentence_idx = r.source.sentence_idx;
    p.negated = lemma_is_negated(r.lemma);
    c.propositions_.push_back(std::move(p));
  }

  for (const auto& p : c.propositions_) {
    ++c.predicate_counts_[p.predicate.index];
    for (auto a : p.args) ++c.entity_counts_[a.index];
    if (p.args.size() == 2) ++c.pair_counts_[{p.args[0], p.args[1]}];
  }
  c.stats_ = stats_;
  pending_.clear();
  return c;
}

Corpus ingest(std::istream& in, const IngestConfig& config) {
  CorpusBuilder builder(config);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      if (check_manifest_line(line, kCorpusFormatVersion)) continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    builder.add_line(line);
  }
  if (in.bad()) throw DataError("I/O error while reading propositions");
  return builder.build();
}

Corpus ingest(const std::filesystem::path& path, const IngestConfig& config) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot read proposition file {}", path.string()));
  return ingest(in, config);
}

void write_corpus(const Corpus& corpus, std::ostream& out, const std::string& manifest_json) {
  if (!manifest_json.empty()) out << manifest_json << '\n';
  for (const auto& p : corpus.propositions()) {
    const auto& tp = corpus.predicate(p.predicate);
    RawRecord r;
    r.article_id = p.article_id;
    r.date = p.date;
    r.sentence_idx = p.sentence_idx;
    r.predicate = tp.lemma;
    r.voice = Voice::Normalized;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      const auto& e = corpus.entity(p.args[i]);
      RawArg a;
      a.surface = e.surface;
      a.kb_id = e.kb_id;
      a.type = tp.slot_types[i].name;
      a.is_named = e.is_named;
      a.role_index = tp.is_unary() ? tp.case_marker : static_cast<int>(i + 1);
      r.args.push_back(std::move(a));
    }
    out << record_to_json(r) << '\n';
  }
}

}  // namespace mgraph
