#include "pcodes/hamming.hpp"

#include <algorithm>
#include <stdexcept>

#include "pcodes/errors.hpp"

namespace pcodes {

HammingCode::HammingCode(int p) : p_(p), n_(0) {
  if (p < kMinP || p > kMaxP)
    throw RejectedInput("Hamming parameter p = " + std::to_string(p) + " outside [" +
                        std::to_string(kMinP) + ", " + std::to_string(kMaxP) + "]");
  n_ = (1 << p) - 1;
  rows_.assign(static_cast<std::size_t>(p), 0);
  for (int j = 1; j <= n_; ++j) {
    const auto column_bit = std::uint64_t{1} << (n_ - j);  // position j of the word
    for (int r = 0; r < p; ++r)
      if ((j >> r) & 1) rows_[static_cast<std::size_t>(r)] |= column_bit;
  }
  // Every row has 2^{p-1} ones, so H 1^n = 0.
  if (!contains(BitWord::ones(n_)))
    throw std::logic_error("all-ones word is not a Hamming codeword");
  if (materialized()) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_); ++b) {
      const BitWord w(n_, b);
      if (syndrome(w) == 0) codewords_.push_back(w);
    }
  }
}

void HammingCode::require_length(const BitWord& x) const {
  if (x.length() != n_)
    throw RejectedInput("word of length " + std::to_string(x.length()) +
                        " for a Hamming code of length " + std::to_string(n_));
}

unsigned HammingCode::syndrome(const BitWord& x) const {
  require_length(x);
  unsigned s = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    s |= static_cast<unsigned>(std::popcount(rows_[r] & x.bits()) & 1) << r;
  return s;
}

BitWord HammingCode::decode(const BitWord& u) const {
  const auto position = static_cast<int>(syndrome(u));
  return position == 0 ? u : u.with_flipped(position);
}

const std::vector<BitWord>& HammingCode::codewords() const {
  if (!materialized())
    throw ResourceLimit("materialized Hamming codewords (max p)", kMaxMaterializedP);
  return codewords_;
}

std::vector<BitWord> translate(const HammingCode& code, const BitWord& t) {
  if (t.length() != code.length())
    throw RejectedInput("translation vector of length " + std::to_string(t.length()) +
                        " for a code of length " + std::to_string(code.length()));
  std::vector<BitWord> out;
  out.reserve(code.codewords().size());
  for (const auto& d : code.codewords()) out.push_back(d ^ t);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(RunKind kind) {
  switch (kind) {
    case RunKind::N: return "n";
    case RunKind::NMinus1: return "n-1";
    case RunKind::NMinus2: return "n-2";
  }
  return {};
}

int run_length(RunKind kind, int n) {
  switch (kind) {
    case RunKind::N: return n;
    case RunKind::NMinus1: return n - 1;
    case RunKind::NMinus2: return n - 2;
  }
  return n;
}

GenLucasConstruction construct_gen_lucas_code(int p, RunKind kind,
                                              const GraphLimits& limits) {
  const HammingCode code(p);
  const int n = code.length();
  auto family = CubeFamily::gen_lucas(run_length(kind, n));
  auto graph = InducedGraph::build(family, n, limits);

  std::vector<BitWord> words;
  if (kind == RunKind::N) {
    words = translate(code, BitWord(n, 1));
  } else {
    const auto all_ones = BitWord::ones(n);
    for (const auto& d : code.codewords())
      if (d != all_ones) words.push_back(d);
  }
  auto set = CodeSet::from_words(graph, words);
  return GenLucasConstruction{family, std::move(graph), std::move(set)};
}

}  // namespace pcodes
