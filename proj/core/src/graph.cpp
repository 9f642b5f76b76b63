#include "vcbsp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace vcbsp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

// Counting sort of `edges` keyed by `key`, then per-vertex ascending order.
template <class Key, class Value>
Adjacency compress(std::span<const Edge> edges, VertexId vertex_count, Key key,
                   Value value) {
  Adjacency adj;
  adj.offsets.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const Edge& e : edges) ++adj.offsets[key(e) + 1];
  for (std::size_t v = 0; v < vertex_count; ++v)
    adj.offsets[v + 1] += adj.offsets[v];

  adj.targets.resize(edges.size());
  std::vector<EdgeIndex> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const Edge& e : edges) adj.targets[cursor[key(e)]++] = value(e);

  for (std::size_t v = 0; v < vertex_count; ++v)
    std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[v]),
              adj.targets.begin() +
                  static_cast<std::ptrdiff_t>(adj.offsets[v + 1]));
  return adj;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

std::pair<Adjacency, Adjacency> build_adjacency(std::span<const Edge> edges,
                                                VertexId vertex_count) {
  for (const Edge& e : edges) {
    if (e.src >= vertex_count || e.dst >= vertex_count)
      throw std::out_of_range("edge (" + std::to_string(e.src) + "," +
                              std::to_string(e.dst) + ") exceeds vertex count " +
                              std::to_string(vertex_count));
  }
  auto src = [](const Edge& e) { return e.src; };
  auto dst = [](const Edge& e) { return e.dst; };
  return {compress(edges, vertex_count, src, dst),
          compress(edges, vertex_count, dst, src)};
}

Graph::Graph(VertexId vertex_count, std::span<const Edge> edges,
             std::vector<OriginalId> original_ids)
    : vertex_count_(vertex_count), original_ids_(std::move(original_ids)) {
  std::tie(out_, in_) = build_adjacency(edges, vertex_count);
  if (original_ids_.empty()) {
    original_ids_.resize(vertex_count);
    for (VertexId v = 0; v < vertex_count; ++v) original_ids_[v] = v;
  } else if (original_ids_.size() != vertex_count) {
    throw std::invalid_argument("original id table size does not match vertex count");
  }
  dense_of_.reserve(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (!dense_of_.emplace(original_ids_[v], v).second)
      throw std::invalid_argument("duplicate original id " +
                                  std::to_string(original_ids_[v]));
  }
}

std::optional<VertexId> Graph::dense_id(OriginalId id) const {
  auto it = dense_of_.find(id);
  if (it == dense_of_.end()) return std::nullopt;
  return it->second;
}

Graph parse_edge_list(std::string_view text, Directedness directedness) {
  std::vector<Edge> edges;
  std::vector<OriginalId> original_ids;
  std::unordered_map<OriginalId, VertexId> dense_of;

  auto intern = [&](OriginalId id) {
    auto [it, inserted] =
        dense_of.emplace(id, static_cast<VertexId>(original_ids.size()));
    if (inserted) {
      if (original_ids.size() == std::numeric_limits<VertexId>::max())
        throw std::length_error("too many vertices for 32-bit vertex ids");
      original_ids.push_back(id);
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;

    OriginalId ids[2];
    int count = 0;
    while (i < line.size()) {
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      std::string_view token = line.substr(i, j - i);
      if (count == 2) throw ParseError(line_no, "expected 2 ids, found more");
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), ids[count]);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, "invalid vertex id '" + std::string(token) + "'");
      ++count;
      i = j;
      while (i < line.size() && is_blank(line[i])) ++i;
    }
    if (count != 2) throw ParseError(line_no, "expected 2 ids, found 1");

    VertexId a = intern(ids[0]);
    VertexId b = intern(ids[1]);
    edges.push_back({a, b});
    if (directedness == Directedness::undirected) edges.push_back({b, a});
  }

  auto vertex_count = static_cast<VertexId>(original_ids.size());
  return Graph(vertex_count, edges, std::move(original_ids));
}

Graph load_edge_list(const std::filesystem::path& path,
                     Directedness directedness) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failure on " + path.string());
  return parse_edge_list(buffer.str(), directedness);
}

}  // namespace vcbsp
