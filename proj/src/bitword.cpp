#include "pcodes/bitword.hpp"

#include <array>

#include "pcodes/errors.hpp"

namespace pcodes {

BitWord::BitWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength)
    throw RejectedInput("word length " + std::to_string(length) +
                        " outside [0, " + std::to_string(kMaxLength) + "]");
  if ((bits & ~low_mask(length)) != 0)
    throw RejectedInput("bits do not fit in a word of length " +
                        std::to_string(length));
}

BitWord BitWord::zeros(int length) { return BitWord(length, 0); }

BitWord BitWord::ones(int length) {
  if (length < 0 || length > kMaxLength)
    throw RejectedInput("word length " + std::to_string(length) + " out of range");
  return BitWord(length, low_mask(length));
}

BitWord BitWord::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength))
    throw RejectedInput("word longer than " + std::to_string(kMaxLength) + " bits");
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw RejectedInput("not a binary word: '" + std::string(text) + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitWord(static_cast<int>(text.size()), bits);
}

int BitWord::bit(int i) const {
  if (i < 1 || i > length_)
    throw RejectedInput("bit index " + std::to_string(i) + " outside [1, " +
                        std::to_string(length_) + "]");
  return static_cast<int>((bits_ >> (length_ - i)) & 1U);
}

BitWord BitWord::with_flipped(int i) const {
  if (i < 1 || i > length_)
    throw RejectedInput("bit index " + std::to_string(i) + " out of range");
  BitWord out = *this;
  out.bits_ ^= std::uint64_t{1} << (length_ - i);
  return out;
}

std::string BitWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> (length_ - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitWord BitWord::operator^(const BitWord& other) const {
  if (length_ != other.length_)
    throw RejectedInput("length mismatch: " + std::to_string(length_) + " vs " +
                        std::to_string(other.length_));
  BitWord out = *this;
  out.bits_ ^= other.bits_;
  return out;
}

namespace {

void require_run_length(int s) {
  if (s < 1) throw RejectedInput("run length must be >= 1, got " + std::to_string(s));
}

// Bit j of the result is set iff bits j .. j+s-1 of x are all set.
std::uint64_t run_starts(std::uint64_t x, int s) {
  std::uint64_t y = x;
  for (int k = 1; k < s && y != 0; ++k) y &= x >> k;
  return y;
}

}  // namespace

bool has_ones_run(const BitWord& w, int s) {
  require_run_length(s);
  if (s > w.length()) return false;
  return run_starts(w.bits(), s) != 0;
}

BitWord circulation(const BitWord& w, int i) {
  const int n = w.length();
  if (i < 1 || i > n)
    throw RejectedInput("circulation index " + std::to_string(i) + " outside [1, " +
                        std::to_string(n) + "]");
  const int r = i - 1;
  if (r == 0) return w;
  const std::uint64_t rotated =
      ((w.bits() << r) | (w.bits() >> (n - r))) & low_mask(n);
  return BitWord(n, rotated);
}

bool has_circular_ones_run(const BitWord& w, int s) {
  require_run_length(s);
  const int n = w.length();
  if (s > n) return false;
  if (w.bits() == low_mask(n)) return true;
  // Rotate a zero into the last position; cyclic runs then become linear runs.
  const int last_zero = n - 1 - std::countr_one(w.bits());  // 0-based from the left
  return has_ones_run(circulation(w, last_zero + 2 > n ? 1 : last_zero + 2), s);
}

bool is_fibonacci(const BitWord& w) { return !has_ones_run(w, 2); }

bool is_lucas(const BitWord& w) {
  if (w.length() == 0) return true;
  return is_fibonacci(w) && !(w.bit(1) == 1 && w.bit(w.length()) == 1);
}

int hamming_distance(const BitWord& x, const BitWord& y) {
  if (x.length() != y.length())
    throw RejectedInput("hamming distance of words with lengths " +
                        std::to_string(x.length()) + " and " +
                        std::to_string(y.length()));
  return std::popcount(x.bits() ^ y.bits());
}

std::uint64_t binomial(int a, int b) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 64>, 64> t{};
    for (int i = 0; i < 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (a < 0 || b < 0 || b > a) return 0;
  if (a >= 64) throw RejectedInput("binomial argument too large");
  return table[a][b];
}

}  // namespace pcodes
