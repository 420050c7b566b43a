// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcodes/bitword.hpp"
#include "pcodes/claims.hpp"
#include "pcodes/cube_graph.hpp"
#include "pcodes/family.hpp"
#include "pcodes/hamming.hpp"
#include "pcodes/perfect_code.hpp"

using namespace pcodes;

namespace {

// Time limits in seconds.
constexpr double kLimitTheorem = 60;
constexpr double kLimitCounting = 5;
constexpr double kLimitHamming = 30;
constexpr double kLimitConstructions = 120;
constexpr double kLimitAvoidance = 600;
constexpr double kLimitFibonacci = 60;
constexpr double kLimitArithmetic = 5;
constexpr double kLimitEngine = 120;

// Frozen only after the engine and the oracle agree on it.
constexpr std::uint64_t kQ7PerfectCodes = 240;

struct Check {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs <= limit, "over time limit");
  if (!c.ok) ++failures;
  std::printf("[%s] %s %s (%.2fs, limit %.0fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs,
              limit, c.ok ? "" : ": ", c.note.c_str());
  std::fflush(stdout);
}

const nlohmann::ordered_json* per_n(const ClaimReport& r, int n) {
  for (const auto& e : r.evidence["per_n"])
    if (e["n"] == n) return &e;
  return nullptr;
}

int avoid_run = 0;
bool avoids_circular_run(std::uint64_t c, int n) {
  return !oracle::circular_run(oracle::to_string(n, c), avoid_run);
}

// Every vertex of g has exactly one member of `code` at Hamming distance <= 1.
bool covers_exactly_once(const InducedGraph& g, const std::vector<BitWord>& code) {
  for (const auto& v : g.vertices()) {
    int hits = 0;
    for (const auto& c : code) hits += oracle::distance(v.bits(), c.bits()) <= 1;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> raw(const std::vector<BitWord>& words) {
  std::vector<std::uint64_t> out;
  for (const auto& w : words) out.push_back(w.bits());
  return out;
}

std::uint64_t engine_count(const InducedGraph& g) {
  SearchOptions opt;
  opt.mode = SearchMode::Enumerate;
  const auto r = find_perfect_code(g, opt);
  return r.status == SearchStatus::Enumerated ? r.count : ~std::uint64_t{0};
}

}  // namespace

int main() {
  criterion("AC1", "Lucas cube theorem for n <= 14", kLimitTheorem, [](Check& c) {
    const auto r = verify_theorem_main(14);
    c.expect(r.verdict == Verdict::Pass, "claim verdict " + to_string(r.verdict));
    for (int n = 0; n <= 14; ++n) {
      const auto* e = per_n(r, n);
      if (e == nullptr) {
        if (n > 0) c.expect(false, "missing n=" + std::to_string(n));
        continue;
      }
      if (n <= 3) {
        c.expect((*e)["status"] == "found", "n<=3 not found");
        c.expect((*e)["witness"] == nlohmann::ordered_json::array({std::string(n, '0')}),
                 "witness is not {0^n} at n=" + std::to_string(n));
      } else {
        c.expect((*e)["status"] == "exhausted", "not exhausted at n=" + std::to_string(n));
      }
    }
  });

  criterion("AC2", "weight-level counts and spot values", kLimitCounting, [](Check& c) {
    c.expect(verify_counting(14).verdict == Verdict::Pass, "closed forms vs enumeration");
    const auto lucas = CubeFamily::parse("lucas");
    for (int n = 6; n <= 20; ++n) {
      std::vector<std::uint64_t> level(n + 1, 0);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (oracle::lucas(oracle::to_string(n, x))) ++level[std::popcount(x)];
      const auto k2 = static_cast<std::uint64_t>(n * (n - 3) / 2);
      const auto k3 = static_cast<std::uint64_t>(n * (n - 4) * (n - 5) / 6);
      c.expect(level[2] == k2 && count_weight_level(lucas, n, 2) == k2,
               "|L(n,2)| at n=" + std::to_string(n));
      c.expect(level[3] == k3 && count_weight_level(lucas, n, 3) == k3,
               "|L(n,3)| at n=" + std::to_string(n));
    }
  });

  criterion("AC3", "Hamming codes p = 2..4", kLimitHamming, [](Check& c) {
    for (int p = 2; p <= 4; ++p) {
      const HammingCode h(p);
      const int n = h.length();
      const auto& words = h.codewords();
      const auto tag = " at p=" + std::to_string(p);
      c.expect(words.size() == (std::uint64_t{1} << n) / (n + 1), "size" + tag);
      int dmin = n + 1;
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
          dmin = std::min(dmin, oracle::distance(words[i].bits(), words[j].bits()));
      c.expect(dmin == 3, "minimum distance" + tag);
      c.expect(h.contains(BitWord::ones(n)), "1^n missing" + tag);
      for (const auto& w : words) {
        c.expect(w.weight() != n - 1 && w.weight() != n - 2, "weight n-1 or n-2" + tag);
      }
      const auto qn = build_graph(CubeFamily::parse("qn"), n);
      c.expect(is_perfect_code(qn, CodeSet::from_words(qn, words)), "not perfect" + tag);
      c.expect(covers_exactly_once(qn, words), "oracle coverage" + tag);
    }
  });

  criterion("AC4", "generalized Lucas constructions p = 2..4", kLimitConstructions, [](Check& c) {
    for (int p = 2; p <= 4; ++p) {
      const int n = (1 << p) - 1;
      const std::uint64_t order = (std::uint64_t{1} << n) / (n + 1);
      for (auto kind : {RunKind::N, RunKind::NMinus1, RunKind::NMinus2}) {
        const auto built = construct_gen_lucas_code(p, kind);
        const auto tag = " " + to_string(kind) + " p=" + std::to_string(p);
        const auto words = built.code.words(built.graph);
        c.expect(words.size() == (kind == RunKind::N ? order : order - 1), "order" + tag);
        c.expect(is_perfect_code(built.graph, built.code), "not perfect" + tag);
        c.expect(built.graph.order() > 0 && covers_exactly_once(built.graph, words),
                 "oracle coverage" + tag);
        const int s = run_length(kind, n);
        for (const auto& v : built.graph.vertices())
          c.expect(!oracle::circular_run(v.to_string(), s), "graph vertex has run" + tag);
        std::uint64_t members = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
          members += !oracle::circular_run(oracle::to_string(n, x), s);
        c.expect(members == built.graph.order(), "graph order" + tag);
      }
    }
  });

  criterion("AC5", "hypercube codes avoiding circular runs", kLimitAvoidance, [](Check& c) {
    const int ns[] = {3, 7};
    c.expect(verify_qn_avoidance(ns).verdict == Verdict::Pass, "claim verdict");
    for (int n : {3, 7}) {
      for (int s = 2; s <= (n == 3 ? 2 : 6); ++s) {
        avoid_run = s;
        oracle::HypercubeCodes restricted(n, avoids_circular_run);
        c.expect(restricted.count() == 0,
                 "oracle finds an avoiding code n=" + std::to_string(n) + " s=" + std::to_string(s));
      }
    }
    const auto q7 = build_graph(CubeFamily::parse("qn"), 7);
    oracle::HypercubeCodes all(7);
    const auto from_oracle = all.count();
    const auto from_engine = engine_count(q7);
    c.expect(from_engine == from_oracle, "engine and oracle disagree on Q7");
    c.expect(from_engine == kQ7PerfectCodes, "Q7 count differs from golden value");
  });

  criterion("AC6", "Fibonacci cubes n <= 14", kLimitFibonacci, [](Check& c) {
    const auto r = verify_fibonacci_nonexistence(14);
    c.expect(r.verdict == Verdict::Pass, "claim verdict " + to_string(r.verdict));
    for (int n = 1; n <= 14; ++n) {
      const auto* e = per_n(r, n);
      c.expect(e != nullptr, "missing n=" + std::to_string(n));
      if (e != nullptr)
        c.expect((*e)["status"] == (n <= 3 ? "found" : "exhausted"),
                 "status at n=" + std::to_string(n));
    }
  });

  criterion("AC7", "proof arithmetic up to 10^6", kLimitArithmetic, [](Check& c) {
    for (const auto& r : verify_proof_arithmetic(1'000'000))
      c.expect(r.verdict == Verdict::Pass, r.id + " verdict");
    for (std::int64_t n = 1; n <= 1'000'000; n += 2) c.expect((n * n + 1) % 6 != 0, "n^2+1");
    for (std::int64_t n = 3; n <= 1'000'000; n += 6) {
      const auto num = n * (n * n - 10 * n + 23);
      c.expect(num % 6 == 0 && (num / 6) % 2 != 0, "n(n^2-10n+23)/6 at " + std::to_string(n));
    }
  });

  criterion("AC8", "engine vs brute force on small graphs", kLimitEngine, [](Check& c) {
    std::mt19937_64 rng(20261016);
    int with_codes = 0;
    std::size_t largest = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const auto size = static_cast<std::size_t>(1 + rng() % std::min<std::uint64_t>(20, 1ULL << n));
      std::set<std::uint64_t> picked;
      while (picked.size() < size) picked.insert(rng() % (1ULL << n));
      std::vector<BitWord> words;
      for (auto x : picked) words.emplace_back(n, x);
      const auto g = InducedGraph::from_words(n, words);
      const auto expected = oracle::brute_force_perfect_codes(raw(words));
      c.expect(engine_count(g) == expected, "random trial " + std::to_string(trial));
      with_codes += expected > 0;
      largest = std::max(largest, words.size());
    }
    c.expect(with_codes >= 10 && largest == 20, "random trials too easy");
    for (const char* family : {"lucas", "fib"}) {
      for (int n = 0;; ++n) {
        const auto g = build_graph(CubeFamily::parse(family), n);
        if (g.order() > 20) break;
        c.expect(engine_count(g) == oracle::brute_force_perfect_codes(raw(g.vertices())),
                 std::string(family) + " n=" + std::to_string(n));
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
