#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcodes/cube_graph.hpp"

namespace pcodes {

/// A set of vertices of one graph, tested against the code predicates.
class CodeSet {
public:
  explicit CodeSet(VertexSet members) : members_(std::move(members)) {}
  /// Throws RejectedInput naming the first word that is not a vertex of g.
  static CodeSet from_words(const InducedGraph& g, std::span<const BitWord> words);

  const VertexSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::vector<BitWord> words(const InducedGraph& g) const { return g.words_of(members_); }

  friend bool operator==(const CodeSet&, const CodeSet&) = default;

private:
  VertexSet members_;
};

/// Closed neighborhoods of distinct members are pairwise disjoint.
bool is_code(const InducedGraph& g, const CodeSet& c);
/// Every vertex lies in the closed neighborhood of some member.
bool is_dominating(const InducedGraph& g, const CodeSet& c);
/// The closed neighborhoods of the members partition V(G).
bool is_perfect_code(const InducedGraph& g, const CodeSet& c);

enum class SearchMode { First, ProveNone, Enumerate };
enum class SearchStatus { Found, Exhausted, Enumerated, BudgetExceeded };

std::string to_string(SearchMode mode);
std::string to_string(SearchStatus status);
/// Accepts "first", "prove-none" (or "prove_none") and "enumerate".
SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
  SearchMode mode = SearchMode::First;
  /// 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// 0 means unlimited.
  double max_seconds = 0.0;
  /// Permutes the order in which covering blocks are tried; 0 keeps id order.
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Enumerate mode keeps at most this many witnesses.
  std::size_t max_witnesses = 0;
  /// Only vertices accepted by the filter may be codewords. Empty: all vertices.
  WordFilter allowed_codeword;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
  std::uint64_t seed = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<CodeSet> witness;
  std::uint64_t count = 0;
  std::vector<CodeSet> witnesses;
  SearchStats stats;
};

/// Exact-cover search for perfect codes: the universe is V(G), the blocks are
/// the closed neighborhoods N[v], and a solution is a set of disjoint blocks
/// covering V(G). Branches on the uncovered vertex with the fewest live
/// blocks (lowest id on ties). No symmetry reduction is applied.
SearchOutcome find_perfect_code(const InducedGraph& g, const SearchOptions& options = {});

/// find_perfect_code restricted to codewords for which `forbidden` is false.
SearchOutcome search_constrained(const InducedGraph& g, const WordFilter& forbidden,
                                 SearchOptions options = {});

/// {"status", "witness"?, "count"?, "nodes", "millis", "seed"} in that order.
std::string outcome_to_json(const InducedGraph& g, const SearchOutcome& outcome);

/// CLI exit code for a search status: 0 Found/Enumerated, 3 Exhausted, 4 BudgetExceeded.
int exit_code(SearchStatus status);

}  // namespace pcodes
