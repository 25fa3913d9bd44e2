// Copyright 2026 The bptol Authors
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

#include "bptol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "bptol/error.hpp"

namespace bptol {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename T>
T parse_integer(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) { return split_fields(line).empty(); }

std::uint64_t endpoint_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

CapacitatedGraph::CapacitatedGraph(std::size_t vertex_count,
                                   std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (edges_.size() > UINT32_MAX - 1 || vertex_count_ > UINT32_MAX - 1) {
    throw UsageError("graph too large for 32-bit ids");
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    if (index(e.u) >= vertex_count_ || index(e.v) >= vertex_count_) {
      throw UsageError("edge endpoint out of range");
    }
    ++offsets_[index(e.u) + 1];
    if (e.u != e.v) ++offsets_[index(e.v) + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidences_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    incidences_[cursor[index(e.u)]++] = {e.v, EdgeId{i}};
    if (e.u != e.v) incidences_[cursor[index(e.v)]++] = {e.u, EdgeId{i}};
  }

  by_rank_.resize(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) by_rank_[i] = EdgeId{i};
  std::sort(by_rank_.begin(), by_rank_.end(), [this](EdgeId a, EdgeId b) {
    const Capacity ca = edges_[index(a)].capacity;
    const Capacity cb = edges_[index(b)].capacity;
    return ca != cb ? ca < cb : index(a) < index(b);
  });
  rank_.resize(edges_.size());
  for (std::uint32_t r = 0; r < by_rank_.size(); ++r) rank_[index(by_rank_[r])] = r;
}

std::span<const Incidence> CapacitatedGraph::incident(VertexId v) const {
  const std::uint32_t i = index(v);
  return std::span<const Incidence>(incidences_).subspan(
      offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::optional<EdgeId> CapacitatedGraph::find_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  if (incident(u).size() > incident(v).size()) std::swap(u, v);
  for (const Incidence& inc : incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

std::optional<Violation> validate(const CapacitatedGraph& graph,
                                  const ValidationOptions& options) {
  const auto edges = graph.edges();
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u == edges[i].v) {
      return Violation{Violation::Kind::kSelfLoop, i, i,
                       "self-loop: edge " + std::to_string(i + 1) +
                           " joins vertex " +
                           std::to_string(external(edges[i].u)) +
                           " to itself"};
    }
  }

  {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keys;
    keys.reserve(edges.size());
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      keys.emplace_back(endpoint_key(index(edges[i].u), index(edges[i].v)), i);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i) {
      if (keys[i].first == keys[i - 1].first) {
        const std::uint32_t a = keys[i - 1].second;
        const std::uint32_t b = keys[i].second;
        return Violation{Violation::Kind::kParallelEdge, a, b,
                         "parallel edges " + std::to_string(a + 1) + " and " +
                             std::to_string(b + 1)};
      }
    }
  }

  if (graph.vertex_count() > 0) {
    std::vector<char> seen(graph.vertex_count(), 0);
    std::vector<VertexId> queue{VertexId{0}};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : graph.incident(queue[head])) {
        if (!seen[index(inc.neighbor)]) {
          seen[index(inc.neighbor)] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    if (queue.size() != graph.vertex_count()) {
      const auto missing = static_cast<std::uint32_t>(
          std::find(seen.begin(), seen.end(), 0) - seen.begin());
      return Violation{Violation::Kind::kDisconnected, 0, missing,
                       "disconnected: vertices 1 and " +
                           std::to_string(missing + 1) +
                           " lie in different components"};
    }
  }

  if (!options.break_ties) {
    const auto order = graph.edges_by_rank();
    for (std::size_t r = 1; r < order.size(); ++r) {
      if (graph.capacity(order[r]) == graph.capacity(order[r - 1])) {
        const std::uint32_t a = index(order[r - 1]);
        const std::uint32_t b = index(order[r]);
        return Violation{Violation::Kind::kDuplicateCapacity, a, b,
                         "duplicate capacity " +
                             std::to_string(graph.capacity(order[r])) +
                             " on edges " + std::to_string(a + 1) + " and " +
                             std::to_string(b + 1)};
      }
    }
  }
  return std::nullopt;
}

CapacitatedGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"n m\"");
  ++line_no;
  const auto header = split_fields(line);
  if (header.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
  const auto n = parse_integer<std::uint32_t>(header[0], line_no, "vertex count");
  const auto m = parse_integer<std::uint32_t>(header[1], line_no, "edge count");
  if (n == 0) throw ParseError(line_no, "vertex count must be positive");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> endpoints;
  endpoints.reserve(m);
  while (edges.size() < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edge lines, found " +
                                        std::to_string(edges.size()));
    }
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() != 3) throw ParseError(line_no, "edge line must be \"u v c\"");
    const auto u = parse_integer<std::uint32_t>(fields[0], line_no, "vertex");
    const auto v = parse_integer<std::uint32_t>(fields[1], line_no, "vertex");
    const auto c = parse_integer<Capacity>(fields[2], line_no, "capacity");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "vertex id out of range [1, " +
                                    std::to_string(n) + "]");
    }
    if (!endpoints.insert(endpoint_key(u - 1, v - 1)).second) {
      throw ParseError(line_no, "parallel edge between vertices " +
                                    std::to_string(u) + " and " +
                                    std::to_string(v));
    }
    edges.push_back({VertexId{u - 1}, VertexId{v - 1}, c});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line)) throw ParseError(line_no, "unexpected trailing content");
  }
  return CapacitatedGraph(n, std::move(edges));
}

std::vector<QueryPair> parse_pairs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"k\"");
  ++line_no;
  const auto header = split_fields(line);
  if (header.size() != 1) throw ParseError(line_no, "header must be \"k\"");
  const auto k = parse_integer<std::uint32_t>(header[0], line_no, "pair count");

  std::vector<QueryPair> pairs;
  pairs.reserve(k);
  while (pairs.size() < k) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(k) +
                                        " pair lines, found " +
                                        std::to_string(pairs.size()));
    }
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "pair line must be \"s t\"");
    const auto s = parse_integer<std::uint32_t>(fields[0], line_no, "vertex");
    const auto t = parse_integer<std::uint32_t>(fields[1], line_no, "vertex");
    if (s < 1 || t < 1) throw ParseError(line_no, "vertex ids are 1-based");
    pairs.push_back({VertexId{s - 1}, VertexId{t - 1}});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line)) throw ParseError(line_no, "unexpected trailing content");
  }
  return pairs;
}

void write_graph(std::ostream& out, const CapacitatedGraph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << external(e.u) << ' ' << external(e.v) << ' ' << e.capacity << '\n';
  }
}

std::string serialize(const CapacitatedGraph& graph) {
  std::ostringstream out;
  write_graph(out, graph);
  return out.str();
}

}  // namespace bptol
