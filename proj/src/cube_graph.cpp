#include "pcodes/cube_graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "pcodes/errors.hpp"

namespace pcodes {

namespace {

constexpr int kDenseIndexMaxLength = 20;

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

InducedGraph InducedGraph::build(const CubeFamily& family, int n,
                                 const GraphLimits& limits) {
  InducedGraph g;
  g.n_ = n;
  g.label_ = family.to_string();
  g.family_ = family;
  g.vertices_ = enumerate_family(family, n, limits.max_vertices);
  g.index_and_link(limits);
  return g;
}

InducedGraph InducedGraph::from_words(int n, std::vector<BitWord> words, std::string label,
                                      const GraphLimits& limits) {
  if (n < 0 || n > kMaxLength) throw RejectedInput("length out of range");
  for (const auto& w : words)
    if (w.length() != n)
      throw RejectedInput("word '" + w.to_string() + "' does not have length " +
                          std::to_string(n));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.size() > limits.max_vertices)
    throw ResourceLimit("vertex cap", limits.max_vertices);
  InducedGraph g;
  g.n_ = n;
  g.label_ = std::move(label);
  g.vertices_ = std::move(words);
  g.index_and_link(limits);
  return g;
}

void InducedGraph::index_and_link(const GraphLimits& limits) {
  id_ = next_graph_id();
  if (n_ <= kDenseIndexMaxLength) {
    dense_index_.assign(std::size_t{1} << n_, -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      dense_index_[vertices_[i].bits()] = static_cast<std::int32_t>(i);
  }
  std::size_t degree_sum = 0;
  if (vertices_.size() <= limits.stored_adjacency_limit) {
    offsets_.assign(vertices_.size() + 1, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const auto bits = vertices_[v].bits();
      const auto start = targets_.size();
      for (int pos = 0; pos < n_; ++pos)
        if (auto u = find_bits(bits ^ (std::uint64_t{1} << pos))) targets_.push_back(*u);
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(start), targets_.end());
      offsets_[v + 1] = targets_.size();
    }
    degree_sum = targets_.size();
  } else {
    for (VertexId v = 0; v < vertices_.size(); ++v) degree_sum += degree(v);
  }
  edges_ = degree_sum / 2;
}

std::optional<VertexId> InducedGraph::find_bits(std::uint64_t bits) const {
  if (!dense_index_.empty()) {
    if (bits >= dense_index_.size()) return std::nullopt;
    const auto id = dense_index_[bits];
    if (id < 0) return std::nullopt;
    return static_cast<VertexId>(id);
  }
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), bits,
      [](const BitWord& w, std::uint64_t b) { return w.bits() < b; });
  if (it == vertices_.end() || it->bits() != bits) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<VertexId> InducedGraph::find(const BitWord& w) const {
  if (w.length() != n_) return std::nullopt;
  return find_bits(w.bits());
}

VertexId InducedGraph::id_of(const BitWord& w) const {
  if (auto id = find(w)) return *id;
  throw RejectedInput("word '" + w.to_string() + "' is not a vertex of " + label_ +
                      " at n = " + std::to_string(n_));
}

std::vector<VertexId> InducedGraph::neighbors(VertexId v) const {
  if (v >= order()) throw RejectedInput("vertex id out of range");
  std::vector<VertexId> out;
  for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t InducedGraph::degree(VertexId v) const {
  if (v >= order()) throw RejectedInput("vertex id out of range");
  if (stores_adjacency()) return offsets_[v + 1] - offsets_[v];
  std::size_t d = 0;
  for_each_neighbor(v, [&](VertexId) { ++d; });
  return d;
}

VertexSet InducedGraph::full_set() const {
  auto s = empty_set();
  for (VertexId v = 0; v < order(); ++v) s.insert(v);
  return s;
}

VertexSet InducedGraph::make_set(std::span<const BitWord> words) const {
  auto s = empty_set();
  for (const auto& w : words) s.insert(id_of(w));
  return s;
}

std::vector<BitWord> InducedGraph::words_of(const VertexSet& set) const {
  if (set.graph_id() != id_) throw RejectedInput("vertex set belongs to another graph");
  std::vector<BitWord> out;
  for (auto v : set.members()) out.push_back(vertices_[v]);
  return out;
}

VertexSet closed_neighborhood(const InducedGraph& g, VertexId v) {
  if (v >= g.order()) throw RejectedInput("vertex id out of range");
  auto s = g.empty_set();
  s.insert(v);
  g.for_each_neighbor(v, [&](VertexId u) { s.insert(u); });
  return s;
}

VertexSet closed_neighborhood(const InducedGraph& g, const BitWord& v) {
  return closed_neighborhood(g, g.id_of(v));
}

std::vector<int> bfs_distances(const InducedGraph& g, VertexId source) {
  if (source >= g.order()) throw RejectedInput("vertex id out of range");
  std::vector<int> dist(g.order(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    g.for_each_neighbor(v, [&](VertexId u) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    });
  }
  return dist;
}

std::optional<int> graph_distance(const InducedGraph& g, const BitWord& u, const BitWord& v) {
  const auto from = g.id_of(u);
  const auto to = g.id_of(v);
  const int d = bfs_distances(g, from)[to];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_connected(const InducedGraph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> level_degree_profile(const InducedGraph& g, int k_from, int k_to,
                                      const WordFilter& filter) {
  const int n = g.length();
  if (k_from < 0 || k_from > n || k_to < 0 || k_to > n || std::abs(k_from - k_to) != 1)
    throw RejectedInput("invalid level pair (" + std::to_string(k_from) + ", " +
                        std::to_string(k_to) + ") for n = " + std::to_string(n));
  std::vector<int> profile;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& w = g.word(v);
    if (w.weight() != k_from || (filter && !filter(w))) continue;
    int count = 0;
    g.for_each_neighbor(v, [&](VertexId u) {
      const auto& x = g.word(u);
      if (x.weight() == k_to && (!filter || filter(x))) ++count;
    });
    profile.push_back(count);
  }
  return profile;
}

std::string to_dot(const InducedGraph& g, const VertexSet* highlight) {
  std::ostringstream out;
  out << "graph \"" << g.label() << "_n" << g.length() << "\" {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  v" << v << " [label=\"" << g.word(v).to_string() << '"';
    if (highlight && highlight->contains(v)) out << ", style=filled, fillcolor=gray";
    out << "];\n";
  }
  for (VertexId v = 0; v < g.order(); ++v)
    for (auto u : g.neighbors(v))
      if (v < u) out << "  v" << v << " -- v" << u << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const InducedGraph& g, const VertexSet* highlight) {
  nlohmann::ordered_json doc;
  doc["n"] = g.length();
  doc["family"] = g.label();
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& w : g.vertices()) vertices.push_back(w.to_string());
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.order(); ++v)
    for (auto u : g.neighbors(v))
      if (v < u) edges.push_back({v, u});
  doc["edges"] = std::move(edges);
  if (highlight) {
    auto code = nlohmann::ordered_json::array();
    for (const auto& w : g.words_of(*highlight)) code.push_back(w.to_string());
    doc["code"] = std::move(code);
  }
  return doc.dump() + "\n";
}

}  // namespace pcodes
