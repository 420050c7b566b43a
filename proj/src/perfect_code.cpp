#include "pcodes/perfect_code.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pcodes/errors.hpp"

namespace pcodes {

CodeSet CodeSet::from_words(const InducedGraph& g, std::span<const BitWord> words) {
  return CodeSet(g.make_set(words));
}

namespace {

void require_same_graph(const InducedGraph& g, const CodeSet& c) {
  if (c.members().graph_id() != g.id() || c.members().universe() != g.order())
    throw RejectedInput("code set contains vertices foreign to graph " + g.label());
}

// Number of members whose closed neighborhood contains each vertex.
std::vector<int> coverage(const InducedGraph& g, const CodeSet& c) {
  std::vector<int> cover(g.order(), 0);
  for (auto v : c.members().members()) {
    ++cover[v];
    g.for_each_neighbor(v, [&](VertexId u) { ++cover[u]; });
  }
  return cover;
}

}  // namespace

bool is_code(const InducedGraph& g, const CodeSet& c) {
  require_same_graph(g, c);
  auto seen = g.empty_set();
  for (auto v : c.members().members()) {
    const auto block = closed_neighborhood(g, v);
    if (seen.intersects(block)) return false;
    seen |= block;
  }
  return true;
}

bool is_dominating(const InducedGraph& g, const CodeSet& c) {
  require_same_graph(g, c);
  auto seen = g.empty_set();
  for (auto v : c.members().members()) seen |= closed_neighborhood(g, v);
  return seen.full();
}

bool is_perfect_code(const InducedGraph& g, const CodeSet& c) {
  require_same_graph(g, c);
  const auto cover = coverage(g, c);
  const bool exact = std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
  if (exact != (is_code(g, c) && is_dominating(g, c)))
    throw std::logic_error("perfect-code predicates disagree");
  return exact;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::First: return "first";
    case SearchMode::ProveNone: return "prove-none";
    case SearchMode::Enumerate: return "enumerate";
  }
  return {};
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Enumerated: return "enumerated";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return {};
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "first") return SearchMode::First;
  if (text == "prove-none" || text == "prove_none") return SearchMode::ProveNone;
  if (text == "enumerate") return SearchMode::Enumerate;
  throw RejectedInput("unknown search mode '" + std::string(text) +
                      "' (expected first | prove-none | enumerate)");
}

int exit_code(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
    case SearchStatus::Enumerated: return 0;
    case SearchStatus::Exhausted: return 3;
    case SearchStatus::BudgetExceeded: return 4;
  }
  return 1;
}

namespace {

using Clock = std::chrono::steady_clock;

// Blocks are indexed by their center vertex: block b is N[b].
struct CoverProblem {
  std::size_t size = 0;
  std::vector<std::vector<VertexId>> block;
  std::vector<std::vector<VertexId>> covers;  // live-able blocks containing v, try order
  std::vector<std::uint8_t> allowed;
};

CoverProblem make_problem(const InducedGraph& g, const SearchOptions& options) {
  CoverProblem p;
  p.size = g.order();
  p.block.resize(p.size);
  p.covers.resize(p.size);
  p.allowed.assign(p.size, 1);
  for (VertexId v = 0; v < p.size; ++v) {
    if (options.allowed_codeword && !options.allowed_codeword(g.word(v))) p.allowed[v] = 0;
    p.block[v].push_back(v);
    g.for_each_neighbor(v, [&](VertexId u) { p.block[v].push_back(u); });
    std::sort(p.block[v].begin(), p.block[v].end());
  }
  // Try order: ascending id for seed 0, otherwise a seeded permutation.
  std::vector<std::uint64_t> priority(p.size);
  std::iota(priority.begin(), priority.end(), 0);
  if (options.seed != 0) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  for (VertexId v = 0; v < p.size; ++v) {
    for (auto b : p.block[v])  // N[v] is also the set of blocks containing v
      if (p.allowed[b]) p.covers[v].push_back(b);
    std::sort(p.covers[v].begin(), p.covers[v].end(),
              [&](VertexId a, VertexId b) { return priority[a] < priority[b]; });
  }
  return p;
}

struct SharedState {
  SearchOptions options;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
};

class Solver {
public:
  Solver(const CoverProblem& p, SharedState& shared)
      : p_(p), shared_(shared), covered_(p.size, 0), alive_(p.size, 0),
        live_(p.size, 0), uncovered_(p.size) {
    for (VertexId b = 0; b < p.size; ++b) {
      if (!p.allowed[b]) continue;
      alive_[b] = 1;
      for (auto v : p.block[b]) ++live_[v];
    }
  }

  // Uncovered vertex with the fewest live blocks; nullopt when all are covered.
  std::optional<VertexId> choose() const {
    std::optional<VertexId> best;
    int best_count = 0;
    for (VertexId v = 0; v < p_.size; ++v) {
      if (covered_[v]) continue;
      if (!best || live_[v] < best_count) {
        best = v;
        best_count = live_[v];
        if (best_count == 0) break;
      }
    }
    return best;
  }

  std::size_t select(VertexId b) {
    const auto mark = trail_.size();
    chosen_.push_back(b);
    for (auto w : p_.block[b]) {
      covered_[w] = 1;
      --uncovered_;
      for (auto x : p_.covers[w])
        if (alive_[x]) kill(x);
    }
    return mark;
  }

  void unselect(VertexId b, std::size_t mark) {
    while (trail_.size() > mark) {
      const auto x = trail_.back();
      trail_.pop_back();
      alive_[x] = 1;
      for (auto y : p_.block[x]) ++live_[y];
    }
    for (auto w : p_.block[b]) {
      covered_[w] = 0;
      ++uncovered_;
    }
    chosen_.pop_back();
  }

  // Returns true when the whole search should stop.
  bool search() {
    if (!charge_node()) return true;
    const auto v = choose();
    if (!v) return on_solution();
    if (live_[*v] == 0) return false;
    for (auto b : p_.covers[*v]) {
      if (!alive_[b]) continue;
      const auto mark = select(b);
      const bool stop = search();
      unselect(b, mark);
      if (stop) return true;
    }
    return false;
  }

  std::vector<VertexId> candidates(VertexId v) const {
    std::vector<VertexId> out;
    for (auto b : p_.covers[v])
      if (alive_[b]) out.push_back(b);
    return out;
  }

  std::uint64_t count = 0;
  std::vector<std::vector<VertexId>> solutions;

private:
  void kill(VertexId x) {
    alive_[x] = 0;
    for (auto y : p_.block[x]) --live_[y];
    trail_.push_back(x);
  }

  bool charge_node() {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    const auto n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    const auto& opt = shared_.options;
    bool over = opt.max_nodes != 0 && n > opt.max_nodes;
    if (!over && opt.max_seconds > 0 && (n & 1023U) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - shared_.start;
      over = elapsed.count() > opt.max_seconds;
    }
    if (over) {
      shared_.budget_hit = true;
      shared_.stop = true;
      return false;
    }
    return true;
  }

  bool on_solution() {
    ++count;
    if (shared_.options.mode != SearchMode::Enumerate) {
      solutions.push_back(chosen_);
      shared_.stop = true;
      return true;
    }
    if (solutions.size() < shared_.options.max_witnesses) solutions.push_back(chosen_);
    return false;
  }

  const CoverProblem& p_;
  SharedState& shared_;
  std::vector<std::uint8_t> covered_;
  std::vector<std::uint8_t> alive_;
  std::vector<int> live_;
  std::size_t uncovered_;
  std::vector<VertexId> trail_;
  std::vector<VertexId> chosen_;
};

CodeSet to_code(const InducedGraph& g, const std::vector<VertexId>& ids) {
  auto set = g.empty_set();
  for (auto v : ids) set.insert(v);
  return CodeSet(std::move(set));
}

struct BranchResult {
  std::uint64_t count = 0;
  std::vector<std::vector<VertexId>> solutions;
};

}  // namespace

SearchOutcome find_perfect_code(const InducedGraph& g, const SearchOptions& options) {
  SharedState shared;
  shared.options = options;
  shared.start = Clock::now();
  const auto problem = make_problem(g, options);

  // Root expansion: the branching vertex and its candidate blocks become
  // independent tasks, which workers pull in order.
  Solver root(problem, shared);
  std::vector<BranchResult> results;
  bool root_solution = false;
  std::vector<VertexId> tasks;
  shared.nodes.fetch_add(1);
  if (const auto v = root.choose()) {
    tasks = root.candidates(*v);
  } else {
    root_solution = true;  // empty graph: the empty code is perfect
  }
  results.resize(tasks.size());

  if (!tasks.empty()) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Solver solver(problem, shared);
      for (;;) {
        const auto i = next.fetch_add(1);
        if (i >= tasks.size() || shared.stop.load()) break;
        const auto mark = solver.select(tasks[i]);
        solver.search();
        solver.unselect(tasks[i], mark);
        results[i].count = std::exchange(solver.count, 0);
        results[i].solutions = std::exchange(solver.solutions, {});
      }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads,
                                                             static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
  }

  SearchOutcome out;
  out.stats.nodes = shared.nodes.load();
  out.stats.seed = options.seed;
  out.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - shared.start)
          .count());

  std::uint64_t total = root_solution ? 1 : 0;
  std::vector<std::vector<VertexId>> solutions;
  if (root_solution) solutions.emplace_back();
  for (auto& r : results) {
    total += r.count;
    for (auto& s : r.solutions) solutions.push_back(std::move(s));
  }

  if (shared.budget_hit) {
    out.status = SearchStatus::BudgetExceeded;
    return out;
  }
  if (options.mode == SearchMode::Enumerate) {
    out.status = SearchStatus::Enumerated;
    out.count = total;
    for (std::size_t i = 0; i < solutions.size() && i < options.max_witnesses; ++i)
      out.witnesses.push_back(to_code(g, solutions[i]));
    return out;
  }
  if (!solutions.empty()) {
    out.status = SearchStatus::Found;
    out.witness = to_code(g, solutions.front());
    if (!is_perfect_code(g, *out.witness))
      throw std::logic_error("search produced an invalid witness");
    return out;
  }
  out.status = SearchStatus::Exhausted;
  return out;
}

SearchOutcome search_constrained(const InducedGraph& g, const WordFilter& forbidden,
                                 SearchOptions options) {
  auto previous = std::move(options.allowed_codeword);
  options.allowed_codeword = [previous, forbidden](const BitWord& w) {
    return (!previous || previous(w)) && !(forbidden && forbidden(w));
  };
  return find_perfect_code(g, options);
}

std::string outcome_to_json(const InducedGraph& g, const SearchOutcome& outcome) {
  nlohmann::ordered_json doc;
  doc["status"] = to_string(outcome.status);
  if (outcome.witness) {
    auto words = nlohmann::ordered_json::array();
    for (const auto& w : outcome.witness->words(g)) words.push_back(w.to_string());
    doc["witness"] = std::move(words);
  }
  if (outcome.status == SearchStatus::Enumerated) doc["count"] = outcome.count;
  if (!outcome.witnesses.empty()) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& code : outcome.witnesses) {
      auto words = nlohmann::ordered_json::array();
      for (const auto& w : code.words(g)) words.push_back(w.to_string());
      all.push_back(std::move(words));
    }
    doc["witnesses"] = std::move(all);
  }
  doc["nodes"] = outcome.stats.nodes;
  doc["millis"] = outcome.stats.millis;
  doc["seed"] = outcome.stats.seed;
  return doc.dump() + "\n";
}

}  // namespace pcodes
