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


#include "mgraph/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace mgraph {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kGraphMagic = "mgraph-graph";
constexpr std::string_view kProvMagic = "mgraph-prov";

[[noreturn]] void fail(const std::string& source, std::size_t line, std::string_view what) {
  throw DataError(fmt::format("{}:{}: {}", source, line, what));
}

// Parses "name=value" and returns value.
std::string_view field(const std::string& source, std::size_t line, std::string_view text,
                       std::string_view name) {
  if (text.size() <= name.size() || text.substr(0, name.size()) != name ||
      text[name.size()] != '=') {
    fail(source, line, fmt::format("expected field '{}'", name));
  }
  return text.substr(name.size() + 1);
}

std::uint64_t count_field(const std::string& source, std::size_t line, std::string_view text,
                          std::string_view name) {
  auto v = parse_uint(field(source, line, text, name));
  if (!v) fail(source, line, fmt::format("field '{}' is not a count", name));
  return *v;
}

void check_header(const std::string& source, const std::vector<std::string>& parts,
                  std::string_view magic, std::size_t expected_fields) {
  if (parts.empty() || parts[0] != magic) fail(source, 1, fmt::format("not a {} file", magic));
  if (parts.size() < 2 || parts[1] != std::to_string(kGraphFormatVersion)) {
    throw VersionError(fmt::format("{}: format version '{}', expected {}", source,
                                   parts.size() < 2 ? "" : parts[1], kGraphFormatVersion));
  }
  if (parts.size() != expected_fields) fail(source, 1, "malformed header");
}

template <typename Fn>
auto parse_or_fail(const std::string& source, std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const DataError& e) {
    fail(source, line, e.what());
  } catch (const ContractError& e) {
    fail(source, line, e.what());
  }
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(fmt::format("cannot write {}", path.string()));
  return out;
}

}  // namespace

void write_graph(const TypedSubgraph& graph, std::ostream& out) {
  out << kGraphMagic << '\t' << kGraphFormatVersion << "\tsignature=" << graph.signature.key()
      << "\tvertices=" << graph.vertices.size() << "\tedges=" << graph.edges.size() << '\n';
  for (const auto& v : graph.vertices) out << "V\t" << v.key() << '\n';
  for (const auto& e : graph.edges) {
    out << "E\t" << graph.vertices[e.premise].key() << '\t' << graph.vertices[e.hypothesis].key()
        << '\t' << to_string(e.kind) << '\t' << e.arg_map.to_string() << '\t'
        << format_double(e.score) << '\n';
  }
}

TypedSubgraph read_graph(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) fail(source, 1, "empty graph file");
  auto header = split(line, '\t');
  check_header(source, header, kGraphMagic, 5);
  TypedSubgraph g;
  g.signature = parse_or_fail(source, 1, [&] {
    return TypeSignature::parse(field(source, 1, header[2], "signature"));
  });
  const auto n_vertices = count_field(source, 1, header[3], "vertices");
  const auto n_edges = count_field(source, 1, header[4], "edges");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts[0] == "V" && parts.size() == 2) {
      if (!g.edges.empty()) fail(source, line_no, "vertex after edges");
      g.vertices.push_back(parse_or_fail(source, line_no,
                                         [&] { return TypedPredicate::parse_key(parts[1]); }));
    } else if (parts[0] == "E" && parts.size() == 6) {
      EntailmentEdge e;
      auto premise = g.find_vertex(
          parse_or_fail(source, line_no, [&] { return TypedPredicate::parse_key(parts[1]); }));
      auto hypothesis = g.find_vertex(
          parse_or_fail(source, line_no, [&] { return TypedPredicate::parse_key(parts[2]); }));
      if (!premise || !hypothesis) fail(source, line_no, "edge endpoint is not a listed vertex");
      e.premise = *premise;
      e.hypothesis = *hypothesis;
      e.kind = parse_or_fail(source, line_no, [&] { return parse_edge_kind(parts[3]); });
      e.arg_map = parse_or_fail(source, line_no, [&] { return ArgMap::parse(parts[4]); });
      auto score = parse_double(parts[5]);
      if (!score) fail(source, line_no, "bad score");
      e.score = *score;
      g.edges.push_back(std::move(e));
    } else {
      fail(source, line_no, "unrecognized record");
    }
  }
  if (g.vertices.size() != n_vertices || g.edges.size() != n_edges) {
    fail(source, 1, "record counts disagree with the header");
  }
  try {
    g.check_invariants();
  } catch (const ContractError& e) {
    throw DataError(fmt::format("{}: {}", source, e.what()));
  }
  return g;
}

fs::path graph_path(const fs::path& dir, const TypeSignature& sig) {
  return dir / (sig.file_stem() + ".graph");
}

void save_graph(const TypedSubgraph& graph, const fs::path& dir) {
  auto out = open_out(graph_path(dir, graph.signature));
  write_graph(graph, out);
}

TypedSubgraph load_graph(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot read {}", file.string()));
  return read_graph(in, file.string());
}

std::vector<VertexIndexEntry> vertex_index(const LocalGraphs& graphs) {
  std::vector<VertexIndexEntry> out;
  for (const auto* family : {&graphs.bivalent, &graphs.univalent}) {
    for (const auto& [sig, g] : *family) {
      for (const auto& v : g.vertices) out.push_back({v.untyped_key(), sig, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_vertex_index(const std::vector<VertexIndexEntry>& entries, std::ostream& out) {
  out << "untyped\tsignature\tvertex\n";
  for (const auto& e : entries) {
    out << e.untyped_key << '\t' << e.signature.key() << '\t' << e.vertex.key() << '\n';
  }
}

std::vector<VertexIndexEntry> read_vertex_index(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot read {}", file.string()));
  std::string line;
  std::getline(in, line);
  std::vector<VertexIndexEntry> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 3) fail(file.string(), line_no, "expected 3 fields");
    out.push_back(parse_or_fail(file.string(), line_no, [&] {
      return VertexIndexEntry{parts[0], TypeSignature::parse(parts[1]),
                              TypedPredicate::parse_key(parts[2])};
    }));
  }
  return out;
}

void save_graphs(const LocalGraphs& graphs, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto* family : {&graphs.bivalent, &graphs.univalent}) {
    for (const auto& [sig, g] : *family) save_graph(g, dir);
  }
  auto out = open_out(dir / kVertexIndexFile);
  write_vertex_index(vertex_index(graphs), out);
}

LocalGraphs load_graphs(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError(fmt::format("no graph directory {}", dir.string()));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  LocalGraphs out;
  for (const auto& f : files) {
    auto g = load_graph(f);
    auto& family = g.signature.is_bivalent() ? out.bivalent : out.univalent;
    family.emplace(g.signature, std::move(g));
  }
  return out;
}

fs::path provenance_path(const fs::path& dir, const TypeSignature& sig) {
  return dir / (sig.file_stem() + ".prov");
}

void write_provenance(const SubgraphProvenance& prov, std::ostream& out) {
  out << kProvMagic << '\t' << kGraphFormatVersion << "\tsignature=" << prov.signature.key()
      << "\titerations=" << prov.iterations << "\tconverged=" << (prov.converged ? 1 : 0)
      << "\tedges=" << prov.edges.size() << '\n';
  for (const auto& e : prov.edges) {
    out << e.premise.key() << '\t' << e.hypothesis.key() << '\t' << e.arg_map.to_string() << '\t'
        << format_double(e.local_score) << '\t' << format_double(e.final_score) << '\n';
  }
}

SubgraphProvenance read_provenance(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) fail(source, 1, "empty provenance file");
  auto header = split(line, '\t');
  check_header(source, header, kProvMagic, 6);
  SubgraphProvenance prov;
  prov.signature = parse_or_fail(source, 1, [&] {
    return TypeSignature::parse(field(source, 1, header[2], "signature"));
  });
  prov.iterations = static_cast<int>(count_field(source, 1, header[3], "iterations"));
  prov.converged = count_field(source, 1, header[4], "converged") != 0;
  const auto n_edges = count_field(source, 1, header[5], "edges");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 5) fail(source, line_no, "expected 5 fields");
    EdgeProvenance e = parse_or_fail(source, line_no, [&] {
      return EdgeProvenance{TypedPredicate::parse_key(parts[0]), TypedPredicate::parse_key(parts[1]),
                            ArgMap::parse(parts[2]), 0.0, 0.0};
    });
    auto local = parse_double(parts[3]);
    auto final_score = parse_double(parts[4]);
    if (!local || !final_score) fail(source, line_no, "bad score");
    e.local_score = *local;
    e.final_score = *final_score;
    prov.edges.push_back(std::move(e));
  }
  if (prov.edges.size() != n_edges) fail(source, 1, "record count disagrees with the header");
  return prov;
}

}  // namespace mgraph
