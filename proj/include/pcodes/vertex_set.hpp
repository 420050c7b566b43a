#pragma once

#include <cstdint>
#include <vector>

namespace pcodes {

using VertexId = std::uint32_t;

/// Membership bitmap over the dense vertex ids of one graph.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::uint64_t graph_id, std::size_t universe);

  std::uint64_t graph_id() const noexcept { return graph_id_; }
  std::size_t universe() const noexcept { return universe_; }

  void insert(VertexId v);
  void erase(VertexId v);
  bool contains(VertexId v) const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool full() const noexcept { return size() == universe_; }

  /// Member ids in ascending order.
  std::vector<VertexId> members() const;

  bool intersects(const VertexSet& other) const;
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void require_compatible(const VertexSet& other) const;

  std::uint64_t graph_id_ = 0;
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pcodes
