#pragma once

#include <cstdint>
#include <vector>

#include "pcodes/bitword.hpp"
#include "pcodes/cube_graph.hpp"
#include "pcodes/perfect_code.hpp"

namespace pcodes {

/// Binary Hamming code of length n = 2^p - 1. Column j of the parity-check
/// matrix (position j of the word, 1-based) is the p-bit binary expansion of
/// j, so the syndrome of a word read as an integer is the position to flip.
class HammingCode {
public:
  static constexpr int kMinP = 2;
  static constexpr int kMaxP = 5;
  /// Codewords are listed explicitly up to this p; beyond it only membership
  /// and decoding are available.
  static constexpr int kMaxMaterializedP = 4;

  /// Throws RejectedInput unless 2 <= p <= 5.
  explicit HammingCode(int p);

  int p() const noexcept { return p_; }
  int length() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_ - p_); }

  /// Row r has a 1 in column j iff bit r of j is set.
  const std::vector<std::uint64_t>& parity_check_rows() const noexcept { return rows_; }

  /// H x read as an integer in [0, n].
  unsigned syndrome(const BitWord& x) const;
  bool contains(const BitWord& x) const { return syndrome(x) == 0; }
  /// The unique codeword within distance 1 of u.
  BitWord decode(const BitWord& u) const;

  bool materialized() const noexcept { return p_ <= kMaxMaterializedP; }
  /// Sorted codewords; throws ResourceLimit when p > kMaxMaterializedP.
  const std::vector<BitWord>& codewords() const;

private:
  void require_length(const BitWord& x) const;

  int p_;
  int n_;
  std::vector<std::uint64_t> rows_;
  std::vector<BitWord> codewords_;
};

inline HammingCode build_hamming(int p) { return HammingCode(p); }

/// The coset {d XOR t : d in code}, sorted.
std::vector<BitWord> translate(const HammingCode& code, const BitWord& t);

/// Which generalized Lucas cube the construction targets: Λ_n(1^n),
/// Λ_n(1^{n-1}) or Λ_n(1^{n-2}).
enum class RunKind { N, NMinus1, NMinus2 };

std::string to_string(RunKind kind);
int run_length(RunKind kind, int n);

struct GenLucasConstruction {
  CubeFamily family;
  InducedGraph graph;
  CodeSet code;
};

/// For RunKind::N the Hamming code translated by 0^{n-1}1; otherwise the
/// Hamming code without 1^n. The code is returned on the built graph.
GenLucasConstruction construct_gen_lucas_code(int p, RunKind kind,
                                              const GraphLimits& limits = {});

}  // namespace pcodes
