#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcodes/bitword.hpp"
#include "pcodes/family.hpp"
#include "pcodes/vertex_set.hpp"

namespace pcodes {

struct GraphLimits {
  std::uint64_t max_vertices = std::uint64_t{1} << 24;
  /// Neighbor lists are stored up to this many vertices; larger graphs probe
  /// the n single-bit flips on demand.
  std::uint64_t stored_adjacency_limit = std::uint64_t{1} << 16;
};

/// The subgraph of Q_n induced by a set of words. Vertex ids are the ranks of
/// the words in ascending packed order. Immutable once built.
class InducedGraph {
public:
  static InducedGraph build(const CubeFamily& family, int n, const GraphLimits& limits = {});
  /// Arbitrary induced subgraph; duplicates are removed.
  static InducedGraph from_words(int n, std::vector<BitWord> words,
                                 std::string label = "custom",
                                 const GraphLimits& limits = {});

  int length() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<CubeFamily>& family() const noexcept { return family_; }
  /// Distinguishes graphs for VertexSet compatibility checks.
  std::uint64_t id() const noexcept { return id_; }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  const std::vector<BitWord>& vertices() const noexcept { return vertices_; }
  const BitWord& word(VertexId v) const { return vertices_.at(v); }

  std::optional<VertexId> find(const BitWord& w) const;
  /// Throws RejectedInput naming the word when it is not a vertex.
  VertexId id_of(const BitWord& w) const;

  bool stores_adjacency() const noexcept { return !offsets_.empty(); }
  /// Neighbors in ascending id order.
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  template <typename Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    if (stores_adjacency()) {
      for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) fn(targets_[i]);
      return;
    }
    const auto bits = vertices_[v].bits();
    for (int pos = 0; pos < n_; ++pos) {
      if (auto u = find_bits(bits ^ (std::uint64_t{1} << pos))) fn(*u);
    }
  }

  VertexSet empty_set() const { return VertexSet(id_, order()); }
  VertexSet full_set() const;
  /// Throws RejectedInput naming the first word that is not a vertex.
  VertexSet make_set(std::span<const BitWord> words) const;
  std::vector<BitWord> words_of(const VertexSet& set) const;

private:
  InducedGraph() = default;
  void index_and_link(const GraphLimits& limits);
  std::optional<VertexId> find_bits(std::uint64_t bits) const;

  int n_ = 0;
  std::string label_;
  std::optional<CubeFamily> family_;
  std::uint64_t id_ = 0;
  std::vector<BitWord> vertices_;
  std::vector<std::int32_t> dense_index_;  // packed word -> id, or -1; only for small n
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::size_t edges_ = 0;
};

inline InducedGraph build_graph(const CubeFamily& family, int n,
                                const GraphLimits& limits = {}) {
  return InducedGraph::build(family, n, limits);
}

/// N[v]: v and its neighbors.
VertexSet closed_neighborhood(const InducedGraph& g, VertexId v);
VertexSet closed_neighborhood(const InducedGraph& g, const BitWord& v);

/// Shortest-path length; nullopt when v is unreachable from u.
std::optional<int> graph_distance(const InducedGraph& g, const BitWord& u, const BitWord& v);
/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const InducedGraph& g, VertexId source);
bool is_connected(const InducedGraph& g);

using WordFilter = std::function<bool(const BitWord&)>;

/// For each vertex of weight k_from (ascending id), the number of its neighbors
/// of weight k_to. When `filter` is set both endpoints must satisfy it.
std::vector<int> level_degree_profile(const InducedGraph& g, int k_from, int k_to,
                                      const WordFilter& filter = {});

/// Graphviz rendering: one line per vertex, then one line per edge.
std::string to_dot(const InducedGraph& g, const VertexSet* highlight = nullptr);
/// {"n", "family", "vertices", "edges"} plus "code" when a highlight is given.
std::string to_json(const InducedGraph& g, const VertexSet* highlight = nullptr);

}  // namespace pcodes
