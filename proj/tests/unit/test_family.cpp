#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pcodes/errors.hpp"
#include "pcodes/family.hpp"

using namespace pcodes;

namespace {

BitWord w(const char* s) { return BitWord::parse(s); }

std::vector<std::string> strings(const std::vector<BitWord>& words) {
  std::vector<std::string> out;
  for (const auto& x : words) out.push_back(x.to_string());
  return out;
}

std::vector<CubeFamily> families_for(int n) {
  std::vector<CubeFamily> out{CubeFamily::hypercube(), CubeFamily::fibonacci(),
                              CubeFamily::lucas()};
  for (int s = 1; s <= n + 1; ++s) {
    out.push_back(CubeFamily::gen_fibonacci(s));
    out.push_back(CubeFamily::gen_lucas(s));
  }
  return out;
}

}  // namespace

TEST_CASE("family spec strings") {
  for (const char* spec : {"qn", "fib", "lucas", "fib1s:3", "lucas1s:7"})
    CHECK(CubeFamily::parse(spec).to_string() == spec);
  CHECK(CubeFamily::parse("lucas1s:4").run_length() == 4);
  CHECK_THROWS_AS(CubeFamily::parse("lucas1s:0"), InvalidParameter);
  CHECK_THROWS_AS(CubeFamily::parse("lucas1s:"), InvalidParameter);
  CHECK_THROWS_AS(CubeFamily::parse("lucas1s:2x"), InvalidParameter);
  CHECK_THROWS_AS(CubeFamily::parse("gamma"), InvalidParameter);
  CHECK_THROWS_AS(CubeFamily::gen_lucas(-1), InvalidParameter);
}

TEST_CASE("membership") {
  CHECK(is_member(CubeFamily::lucas(), w("10010")));
  CHECK_FALSE(is_member(CubeFamily::gen_lucas(7), w("1111111")));
  CHECK_FALSE(is_member(CubeFamily::gen_lucas(6), w("1111101")));
  CHECK(is_member(CubeFamily::gen_lucas(7), w("1111101")));
  CHECK(is_member(CubeFamily::hypercube(), w("111")));
  // s = 1 leaves only the zero word.
  CHECK(is_member(CubeFamily::gen_lucas(1), w("000")));
  CHECK_FALSE(is_member(CubeFamily::gen_lucas(1), w("010")));
}

TEST_CASE("generalized kinds with s = 2 agree with Fibonacci and Lucas") {
  for (int n = 0; n <= 12; ++n)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const BitWord x(n, b);
      REQUIRE(is_member(CubeFamily::gen_fibonacci(2), x) == is_fibonacci(x));
      if (n != 1) REQUIRE(is_member(CubeFamily::gen_lucas(2), x) == is_lucas(x));
    }
  // At n = 1 the circulation definition keeps "1" but Λ_1 = K_1.
  CHECK(is_member(CubeFamily::gen_lucas(2), w("1")));
  CHECK_FALSE(is_lucas(w("1")));
}

TEST_CASE("GenLucas membership is monotone in s") {
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const BitWord x(n, b);
      for (int s = 1; s <= n + 1; ++s)
        if (is_member(CubeFamily::gen_lucas(s), x))
          REQUIRE(is_member(CubeFamily::gen_lucas(s + 1), x));
    }
}

TEST_CASE("enumeration of small Lucas cubes") {
  CHECK(strings(enumerate_family(CubeFamily::lucas(), 4)) ==
        std::vector<std::string>{"0000", "0001", "0010", "0100", "0101", "1000", "1010"});
  CHECK(enumerate_family(CubeFamily::lucas(), 5).size() == 11);
  CHECK(enumerate_family(CubeFamily::hypercube(), 3).size() == 8);
  CHECK(enumerate_family(CubeFamily::gen_lucas(7), 7).size() == 127);
  CHECK(strings(enumerate_family(CubeFamily::lucas(), 1)) == std::vector<std::string>{"0"});
  CHECK(strings(enumerate_family(CubeFamily::fibonacci(), 0)) == std::vector<std::string>{""});
  CHECK(strings(enumerate_family(CubeFamily::lucas(), 0)) == std::vector<std::string>{""});
}

TEST_CASE("enumeration matches filtering all words, ascending and duplicate free") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& f : families_for(n)) {
      const auto got = enumerate_family(f, n);
      std::vector<BitWord> expected;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const BitWord x(n, b);
        const auto text = x.to_string();
        bool member = true;
        switch (f.kind()) {
          case CubeFamily::Kind::Hypercube: break;
          case CubeFamily::Kind::Fibonacci: member = oracle::fibonacci(text); break;
          case CubeFamily::Kind::Lucas: member = oracle::lucas(text); break;
          case CubeFamily::Kind::GenFibonacci:
            member = !oracle::contains_run(text, f.run_length());
            break;
          case CubeFamily::Kind::GenLucas:
            member = !oracle::circular_run(text, f.run_length());
            break;
        }
        if (member) expected.push_back(x);
      }
      INFO("family " << f.to_string() << " n = " << n);
      REQUIRE(got == expected);
      REQUIRE(std::adjacent_find(got.begin(), got.end(), std::greater_equal<>()) == got.end());
    }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_family(CubeFamily::hypercube(), 10, 1000), ResourceLimit);
  CHECK_THROWS_AS(enumerate_family(CubeFamily::lucas(), 20, 100), ResourceLimit);
  try {
    (void)enumerate_family(CubeFamily::fibonacci(), 12, 10);
    FAIL("expected ResourceLimit");
  } catch (const ResourceLimit& e) {
    CHECK(e.cap() == 10);
    CHECK(std::string(e.what()).find("enumeration cap") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_family(CubeFamily::lucas(), 63), RejectedInput);
}

TEST_CASE("Lucas words decompose into 0s and 10s0") {
  for (int n = 3; n <= 14; ++n) {
    std::set<BitWord> expected;
    for (const auto& s : enumerate_family(CubeFamily::fibonacci(), n - 1))
      expected.insert(BitWord(n, s.bits()));  // 0 || s
    std::size_t second = 0;
    for (const auto& s : enumerate_family(CubeFamily::fibonacci(), n - 3)) {
      const BitWord x(n, (std::uint64_t{1} << (n - 1)) | (s.bits() << 1));  // 10 || s || 0
      CHECK(expected.insert(x).second);  // disjoint union
      ++second;
    }
    const auto lucas = enumerate_family(CubeFamily::lucas(), n);
    CHECK(std::set<BitWord>(lucas.begin(), lucas.end()) == expected);
    CHECK(second > 0);
  }
}

TEST_CASE("weight-level counts") {
  const auto lucas = CubeFamily::lucas();
  CHECK(count_weight_level(lucas, 5, 2) == 5);
  for (std::uint64_t n = 6; n <= 20; ++n) {
    const int in = static_cast<int>(n);
    CHECK(count_weight_level(lucas, in, 2) == n * (n - 3) / 2);
    CHECK(count_weight_level(lucas, in, 3) == n * (n - 4) * (n - 5) / 6);
    CHECK(count_weight_level(lucas, in, 2, LevelRestriction::FirstBitOne) == n - 3);
  }
  CHECK(count_weight_level(CubeFamily::hypercube(), 7, 3) == 35);
  CHECK_THROWS_AS(count_weight_level(lucas, 5, 6), RejectedInput);
  CHECK_THROWS_AS(count_weight_level(lucas, 5, -1), RejectedInput);
}

TEST_CASE("weight-level counts agree with enumeration") {
  for (int n = 0; n <= 14; ++n)
    for (const auto& f : families_for(std::min(n, 6))) {
      const auto words = enumerate_family(f, n);
      for (int k = 0; k <= n; ++k) {
        std::uint64_t all = 0;
        std::uint64_t first_one = 0;
        for (const auto& x : words) {
          if (x.weight() != k) continue;
          ++all;
          if (n > 0 && x.bit(1) == 1) ++first_one;
        }
        INFO("family " << f.to_string() << " n = " << n << " k = " << k);
        REQUIRE(count_weight_level(f, n, k) == all);
        REQUIRE(count_weight_level(f, n, k, LevelRestriction::FirstBitOne) == first_one);
      }
    }
}
