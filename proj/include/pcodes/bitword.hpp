#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pcodes {

inline constexpr int kMaxLength = 62;

/// A binary string b_1 ... b_n packed into an integer with b_1 as the most
/// significant of the n used bits, so that the integer order is the
/// lexicographic order of the strings. n = 0 is the empty word.
class BitWord {
public:
  constexpr BitWord() = default;

  /// Throws RejectedInput unless 0 <= length <= 62 and bits < 2^length.
  BitWord(int length, std::uint64_t bits);

  static BitWord zeros(int length);
  static BitWord ones(int length);
  /// Parses a string of '0'/'1' characters; the empty string is the empty word.
  static BitWord parse(std::string_view text);

  constexpr int length() const noexcept { return length_; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }
  int weight() const noexcept { return std::popcount(bits_); }

  /// b_i for 1 <= i <= n.
  int bit(int i) const;
  BitWord with_flipped(int i) const;

  std::string to_string() const;

  /// Binary sum (bitwise XOR); lengths must agree.
  BitWord operator^(const BitWord& other) const;

  friend constexpr bool operator==(const BitWord&, const BitWord&) = default;
  friend constexpr std::strong_ordering operator<=>(const BitWord& a,
                                                    const BitWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

constexpr std::uint64_t low_mask(int length) noexcept {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

/// True iff 1^s occurs as a contiguous substring. s > n gives false.
bool has_ones_run(const BitWord& w, int s);

/// The i-th circulation b_i ... b_n b_1 ... b_{i-1}, 1 <= i <= n.
BitWord circulation(const BitWord& w, int i);

/// True iff some circulation of w contains 1^s, i.e. w has a cyclic run of
/// at least s ones.
bool has_circular_ones_run(const BitWord& w, int s);

bool is_fibonacci(const BitWord& w);
bool is_lucas(const BitWord& w);

/// Population count of x XOR y; lengths must agree.
int hamming_distance(const BitWord& x, const BitWord& y);

/// Binomial coefficient with C(a, b) = 0 whenever a < 0, b < 0 or b > a.
std::uint64_t binomial(int a, int b);

}  // namespace pcodes
