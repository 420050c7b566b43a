#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcodes/bitword.hpp"

namespace pcodes {

/// Vertex-membership predicate selecting an induced subgraph of Q_n.
class CubeFamily {
public:
  enum class Kind { Hypercube, Fibonacci, Lucas, GenFibonacci, GenLucas };

  static CubeFamily hypercube() { return CubeFamily(Kind::Hypercube, 0); }
  static CubeFamily fibonacci() { return CubeFamily(Kind::Fibonacci, 0); }
  static CubeFamily lucas() { return CubeFamily(Kind::Lucas, 0); }
  /// Strings without 1^s as a substring. Throws InvalidParameter for s < 1.
  static CubeFamily gen_fibonacci(int s);
  /// Strings without a circulation containing 1^s. Throws InvalidParameter for s < 1.
  static CubeFamily gen_lucas(int s);

  /// Grammar: qn | fib | lucas | fib1s:<s> | lucas1s:<s>.
  static CubeFamily parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  /// Forbidden run length; 0 for the non-generalized kinds.
  int run_length() const noexcept { return s_; }
  bool is_generalized() const noexcept {
    return kind_ == Kind::GenFibonacci || kind_ == Kind::GenLucas;
  }

  bool contains(const BitWord& w) const;
  std::string to_string() const;

  friend bool operator==(const CubeFamily&, const CubeFamily&) = default;

private:
  CubeFamily(Kind kind, int s) : kind_(kind), s_(s) {}

  Kind kind_;
  int s_;
};

inline bool is_member(const CubeFamily& f, const BitWord& w) { return f.contains(w); }

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// Members of the family at length n in ascending packed order. Throws
/// ResourceLimit as soon as more than `cap` members would be produced.
std::vector<BitWord> enumerate_family(const CubeFamily& f, int n,
                                      std::uint64_t cap = kDefaultEnumerationCap);

enum class LevelRestriction { None, FirstBitOne };

/// Number of weight-k members. Closed forms for the hypercube, Fibonacci and
/// Lucas kinds; the generalized kinds are counted by enumeration.
std::uint64_t count_weight_level(const CubeFamily& f, int n, int k,
                                 LevelRestriction restriction = LevelRestriction::None);

}  // namespace pcodes
