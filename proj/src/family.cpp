#include "pcodes/family.hpp"

#include <charconv>

#include "pcodes/errors.hpp"

namespace pcodes {

CubeFamily CubeFamily::gen_fibonacci(int s) {
  if (s < 1) throw InvalidParameter("fib1s requires s >= 1, got " + std::to_string(s));
  return CubeFamily(Kind::GenFibonacci, s);
}

CubeFamily CubeFamily::gen_lucas(int s) {
  if (s < 1) throw InvalidParameter("lucas1s requires s >= 1, got " + std::to_string(s));
  return CubeFamily(Kind::GenLucas, s);
}

CubeFamily CubeFamily::parse(std::string_view spec) {
  if (spec == "qn") return hypercube();
  if (spec == "fib") return fibonacci();
  if (spec == "lucas") return lucas();
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto head = spec.substr(0, colon);
    const auto tail = spec.substr(colon + 1);
    int s = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), s);
    if (ec != std::errc{} || ptr != tail.data() + tail.size() || tail.empty())
      throw InvalidParameter("bad run length in family '" + std::string(spec) + "'");
    if (head == "fib1s") return gen_fibonacci(s);
    if (head == "lucas1s") return gen_lucas(s);
  }
  throw InvalidParameter("unknown family '" + std::string(spec) +
                         "' (expected qn | fib | lucas | fib1s:<s> | lucas1s:<s>)");
}

bool CubeFamily::contains(const BitWord& w) const {
  switch (kind_) {
    case Kind::Hypercube: return true;
    case Kind::Fibonacci: return is_fibonacci(w);
    case Kind::Lucas: return is_lucas(w);
    case Kind::GenFibonacci: return !has_ones_run(w, s_);
    case Kind::GenLucas: return !has_circular_ones_run(w, s_);
  }
  return false;
}

std::string CubeFamily::to_string() const {
  switch (kind_) {
    case Kind::Hypercube: return "qn";
    case Kind::Fibonacci: return "fib";
    case Kind::Lucas: return "lucas";
    case Kind::GenFibonacci: return "fib1s:" + std::to_string(s_);
    case Kind::GenLucas: return "lucas1s:" + std::to_string(s_);
  }
  return {};
}

namespace {

// Depth-first generation, b_1 first, trying 0 before 1 so output is ascending.
// `forbidden_run` bounds linear runs of ones; `circular` additionally bounds
// the wrap-around run (leading run + trailing run).
class Generator {
public:
  Generator(int n, int forbidden_run, bool circular, std::uint64_t cap,
            std::vector<BitWord>& out)
      : n_(n), run_(forbidden_run), circular_(circular), cap_(cap), out_(out) {}

  void run() { step(0, 0, 0, 0, true); }

private:
  void step(int depth, std::uint64_t bits, int leading, int trailing, bool all_ones) {
    if (depth == n_) {
      if (circular_ && !all_ones && leading + trailing >= run_) return;
      if (circular_ && all_ones && n_ >= run_ && n_ > 0) return;
      if (out_.size() >= cap_) throw ResourceLimit("enumeration cap", cap_);
      out_.emplace_back(n_, bits);
      return;
    }
    step(depth + 1, bits << 1, leading, 0, false);
    if (trailing + 1 < run_) {
      step(depth + 1, (bits << 1) | 1U, all_ones ? leading + 1 : leading, trailing + 1,
           all_ones);
    }
  }

  int n_;
  int run_;
  bool circular_;
  std::uint64_t cap_;
  std::vector<BitWord>& out_;
};

}  // namespace

std::vector<BitWord> enumerate_family(const CubeFamily& f, int n, std::uint64_t cap) {
  if (n < 0 || n > kMaxLength)
    throw RejectedInput("length " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxLength) + "]");
  std::vector<BitWord> out;
  switch (f.kind()) {
    case CubeFamily::Kind::Hypercube: {
      if (n >= 63 || (std::uint64_t{1} << n) > cap)
        throw ResourceLimit("enumeration cap", cap);
      out.reserve(std::size_t{1} << n);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(n, b);
      return out;
    }
    case CubeFamily::Kind::Fibonacci: Generator(n, 2, false, cap, out).run(); break;
    case CubeFamily::Kind::Lucas:
      Generator(n, 2, true, cap, out).run();
      // "1" has no circulation containing 11, but b_1 * b_n = 1 rejects it.
      if (n == 1) std::erase_if(out, [](const BitWord& w) { return w.bits() != 0; });
      break;
    case CubeFamily::Kind::GenFibonacci:
      Generator(n, f.run_length(), false, cap, out).run();
      break;
    case CubeFamily::Kind::GenLucas:
      Generator(n, f.run_length(), true, cap, out).run();
      break;
  }
  return out;
}

std::uint64_t count_weight_level(const CubeFamily& f, int n, int k,
                                 LevelRestriction restriction) {
  if (n < 0 || n > kMaxLength)
    throw RejectedInput("length " + std::to_string(n) + " out of range");
  if (k < 0 || k > n)
    throw RejectedInput("weight " + std::to_string(k) + " outside [0, " +
                        std::to_string(n) + "]");
  const bool first_one = restriction == LevelRestriction::FirstBitOne;
  switch (f.kind()) {
    case CubeFamily::Kind::Hypercube:
      return first_one ? binomial(n - 1, k - 1) : binomial(n, k);
    case CubeFamily::Kind::Fibonacci:
      // 1 0 s with s a Fibonacci string of length n-2 (just "1" when n = 1).
      if (first_one) return n == 1 ? (k == 1 ? 1 : 0) : binomial(n - k, k - 1);
      return binomial(n - k + 1, k);
    case CubeFamily::Kind::Lucas:
      if (first_one) return binomial(n - 1 - k, k - 1);
      return binomial(n - k, k) + binomial(n - k - 1, k - 1);
    case CubeFamily::Kind::GenFibonacci:
    case CubeFamily::Kind::GenLucas: break;
  }
  std::uint64_t count = 0;
  for (const auto& w : enumerate_family(f, n)) {
    if (w.weight() != k) continue;
    if (first_one && (n == 0 || w.bit(1) != 1)) continue;
    ++count;
  }
  return count;
}

}  // namespace pcodes
