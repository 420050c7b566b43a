#include "pcodes/vertex_set.hpp"

#include <bit>
#include <string>

#include "pcodes/errors.hpp"

namespace pcodes {

VertexSet::VertexSet(std::uint64_t graph_id, std::size_t universe)
    : graph_id_(graph_id), universe_(universe), words_((universe + 63) / 64, 0) {}

void VertexSet::insert(VertexId v) {
  if (v >= universe_)
    throw RejectedInput("vertex id " + std::to_string(v) + " outside graph of " +
                        std::to_string(universe_) + " vertices");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_) return;
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::contains(VertexId v) const {
  return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
  }
  return out;
}

void VertexSet::require_compatible(const VertexSet& other) const {
  if (graph_id_ != other.graph_id_ || universe_ != other.universe_)
    throw RejectedInput("vertex sets belong to different graphs");
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

}  // namespace pcodes
