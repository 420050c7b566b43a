#include "pcodes/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcodes/claims.hpp"
#include "pcodes/cube_graph.hpp"
#include "pcodes/errors.hpp"
#include "pcodes/family.hpp"
#include "pcodes/hamming.hpp"
#include "pcodes/perfect_code.hpp"

namespace pcodes::cli {

namespace {

std::string claim_list() {
  std::string s;
  for (const auto& id : claim_ids()) s += (s.empty() ? "" : ", ") + id;
  return s;
}

// Builds the parser; options write straight into `cfg`.
std::unique_ptr<CLI::App> make_app(CommandConfig& cfg) {
  auto app = std::make_unique<CLI::App>(
      "Perfect codes in hypercubes, Fibonacci cubes and (generalized) Lucas cubes", "pcodes");
  app->require_subcommand(1);
  app->footer("Families: qn | fib | lucas | fib1s:<s> | lucas1s:<s>\nClaims: " + claim_list() +
              "\nEnvironment: PCODES_MAX_NODES, PCODES_MAX_SECONDS override unset budgets.");

  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", cfg.max_nodes, "Search node budget (0 = unlimited)");
    sub->add_option("--max-seconds", cfg.max_seconds, "Search time budget (0 = unlimited)");
    sub->add_option("--seed", cfg.seed, "Block order seed (0 = id order)");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* en = app->add_subcommand("enumerate", "List the members of a family");
  en->add_option("--family", cfg.family, "Family spec")->required();
  en->add_option("--n", cfg.n, "Word length")->required()->check(CLI::Range(0, 62));
  en->add_flag("--count", cfg.count, "Print only the number of members");
  en->add_option("--output", cfg.output, "Write to a file instead of stdout");

  auto* se = app->add_subcommand("search", "Exact-cover search for perfect codes");
  se->add_option("--family", cfg.family, "Family spec")->required();
  se->add_option("--n", cfg.n, "Word length")->required()->check(CLI::Range(0, 62));
  se->add_option("--mode", cfg.mode, "first | prove-none | enumerate")
      ->check(CLI::IsMember({"first", "prove-none", "enumerate"}));
  se->add_option("--avoid-circular-run", cfg.avoid_circular_run,
                 "Codewords must have no circulation containing 1^s")
      ->check(CLI::PositiveNumber);
  se->add_option("--witnesses", cfg.witnesses, "Witnesses kept in enumerate mode");
  add_budget(se);
  se->add_option("--output", cfg.output, "Write to a file instead of stdout");

  auto* ve = app->add_subcommand("verify", "Run claim checks");
  ve->add_option("--claim", cfg.claim, "Claim id (" + claim_list() + ") or all")->required();
  ve->add_option("--n-max", cfg.n_max, "Upper bound on n for the selected claims");
  ve->add_option("--n", cfg.claim_n, "Single n for lemma-0n or prop-qn-avoid");
  ve->add_option("--p", cfg.p, "Single Hamming parameter for prop-1n / prop-1n12");
  ve->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  add_budget(ve);
  ve->add_option("--output", cfg.output, "Write to a file instead of stdout");

  auto* ex = app->add_subcommand("export", "Export an induced graph as DOT or JSON");
  ex->add_option("--family", cfg.family, "Family spec")->required();
  ex->add_option("--n", cfg.n, "Word length")->required()->check(CLI::Range(0, 62));
  ex->add_option("--format", cfg.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  ex->add_option("--highlight-code", cfg.highlight_code,
                 "Code file (search JSON, JSON array, or one word per line)");
  ex->add_option("--output", cfg.output, "Write to a file instead of stdout");

  auto* co = app->add_subcommand("construct", "Hamming code and generalized Lucas constructions");
  co->add_option("--p", cfg.p, "Hamming parameter")->required()->check(CLI::Range(2, 5));
  co->add_option("--kind", cfg.kind, "hamming | n | n-1 | n-2")
      ->check(CLI::IsMember({"hamming", "n", "n-1", "n-2"}));
  co->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  co->add_option("--output", cfg.output, "Write to a file instead of stdout");
  return app;
}

std::string default_format(const std::string& sub) {
  if (sub == "export") return "dot";
  if (sub == "search") return "json";
  return "text";
}

template <typename T>
bool env_value(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return false;
  std::istringstream in(raw);
  T value{};
  if (!(in >> value)) throw UsageError(std::string("malformed ") + name + "='" + raw + "'");
  target = value;
  return true;
}

std::vector<BitWord> read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto text = buffer.str();
  std::vector<BitWord> words;
  const auto parsed = nlohmann::json::parse(text, nullptr, false);
  if (!parsed.is_discarded() && (parsed.is_object() || parsed.is_array())) {
    const nlohmann::json* list = &parsed;
    if (parsed.is_object()) {
      if (parsed.contains("witness")) list = &parsed["witness"];
      else if (parsed.contains("code")) list = &parsed["code"];
      else throw std::runtime_error("code file has neither 'witness' nor 'code'");
    }
    for (const auto& w : *list) words.push_back(BitWord::parse(w.get<std::string>()));
    return words;
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.push_back(BitWord::parse(line));
  }
  return words;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  const auto family = CubeFamily::parse(cfg.family);
  const auto words = enumerate_family(family, cfg.n);
  if (cfg.count) {
    out << words.size() << '\n';
    return kExitOk;
  }
  for (const auto& w : words) out << w.to_string() << '\n';
  return kExitOk;
}

int cmd_search(const CommandConfig& cfg, std::ostream& out) {
  const auto family = CubeFamily::parse(cfg.family);
  const auto graph = build_graph(family, cfg.n);
  SearchOptions options;
  options.mode = parse_search_mode(cfg.mode);
  options.max_nodes = cfg.max_nodes;
  options.max_seconds = cfg.max_seconds;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  options.max_witnesses = cfg.witnesses;
  SearchOutcome outcome;
  if (cfg.avoid_circular_run) {
    const int s = *cfg.avoid_circular_run;
    outcome = search_constrained(
        graph, [s](const BitWord& w) { return has_circular_ones_run(w, s); }, options);
  } else {
    outcome = find_perfect_code(graph, options);
  }
  out << outcome_to_json(graph, outcome);
  return exit_code(outcome.status);
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  ClaimParams params;
  params.n_max = cfg.n_max;
  params.n = cfg.claim_n;
  params.p = cfg.p;
  params.budget = ClaimBudget{cfg.max_nodes, cfg.max_seconds, cfg.threads, cfg.seed};
  std::vector<ClaimReport> reports;
  if (cfg.claim == "all") reports = run_all_claims(params);
  else reports.push_back(run_claim(cfg.claim, params));
  out << (cfg.format == "json" ? reports_to_json(reports) : reports_to_table(reports));
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return kExitFailure;
    skipped = skipped || r.verdict == Verdict::Skipped;
  }
  return skipped ? exit_code(SearchStatus::BudgetExceeded) : kExitOk;
}

int cmd_export(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto family = CubeFamily::parse(cfg.family);
  const auto graph = build_graph(family, cfg.n);
  std::optional<CodeSet> code;
  if (!cfg.highlight_code.empty()) {
    const auto words = read_code_file(cfg.highlight_code);
    code = CodeSet::from_words(graph, words);
    err << "highlighted " << code->size() << " words; perfect code: "
        << (is_perfect_code(graph, *code) ? "yes" : "no") << '\n';
  }
  const VertexSet* highlight = code ? &code->members() : nullptr;
  out << (cfg.format == "json" ? to_json(graph, highlight) : to_dot(graph, highlight));
  return kExitOk;
}

int cmd_construct(const CommandConfig& cfg, std::ostream& out) {
  const int p = cfg.p.value_or(3);
  std::vector<BitWord> words;
  std::string family;
  bool perfect = false;
  int n = (1 << p) - 1;
  if (cfg.kind == "hamming") {
    const HammingCode code(p);
    words = code.codewords();
    family = "qn";
    const auto graph = build_graph(CubeFamily::hypercube(), n);
    perfect = is_perfect_code(graph, CodeSet::from_words(graph, words));
  } else {
    const auto kind = cfg.kind == "n" ? RunKind::N
                      : cfg.kind == "n-1" ? RunKind::NMinus1 : RunKind::NMinus2;
    const auto built = construct_gen_lucas_code(p, kind);
    words = built.code.words(built.graph);
    family = built.family.to_string();
    perfect = is_perfect_code(built.graph, built.code);
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["n"] = n;
    auto list = nlohmann::ordered_json::array();
    for (const auto& w : words) list.push_back(w.to_string());
    doc["witness"] = std::move(list);
    doc["size"] = words.size();
    doc["perfect"] = perfect;
    out << doc.dump() << '\n';
  } else {
    for (const auto& w : words) out << w.to_string() << '\n';
  }
  return perfect ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<std::string> CommandConfig::canonical_args() const {
  std::vector<std::string> a{subcommand};
  const auto add = [&](const std::string& flag, const std::string& value) {
    a.push_back(flag);
    a.push_back(value);
  };
  const auto add_budget = [&] {
    add("--max-nodes", std::to_string(max_nodes));
    std::ostringstream secs;
    secs << std::setprecision(17) << max_seconds;
    add("--max-seconds", secs.str());
    add("--seed", std::to_string(seed));
    add("--threads", std::to_string(threads));
  };
  if (subcommand == "enumerate") {
    add("--family", family);
    add("--n", std::to_string(n));
    if (count) a.push_back("--count");
  } else if (subcommand == "search") {
    add("--family", family);
    add("--n", std::to_string(n));
    add("--mode", mode);
    if (avoid_circular_run) add("--avoid-circular-run", std::to_string(*avoid_circular_run));
    add("--witnesses", std::to_string(witnesses));
    add_budget();
  } else if (subcommand == "verify") {
    add("--claim", claim);
    if (n_max) add("--n-max", std::to_string(*n_max));
    if (claim_n) add("--n", std::to_string(*claim_n));
    if (p) add("--p", std::to_string(*p));
    add("--format", format);
    add_budget();
  } else if (subcommand == "export") {
    add("--family", family);
    add("--n", std::to_string(n));
    add("--format", format);
    if (!highlight_code.empty()) add("--highlight-code", highlight_code);
  } else if (subcommand == "construct") {
    if (p) add("--p", std::to_string(*p));
    add("--kind", kind);
    add("--format", format);
  }
  if (!output.empty()) add("--output", output);
  return a;
}

std::string CommandConfig::canonical() const {
  std::string s;
  for (const auto& arg : canonical_args()) s += (s.empty() ? "" : " ") + arg;
  return s;
}

CommandConfig parse_command_line(const std::vector<std::string>& args) {
  CommandConfig cfg;
  auto app = make_app(cfg);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.get_name() == "CallForHelp" ? help_text() : std::string(e.what()));
  }
  const auto* sub = app->get_subcommands().front();
  cfg.subcommand = sub->get_name();
  if (cfg.format.empty()) cfg.format = default_format(cfg.subcommand);
  if (cfg.subcommand == "search" || cfg.subcommand == "verify") {
    if (sub->count("--max-nodes") == 0) env_value("PCODES_MAX_NODES", cfg.max_nodes);
    if (sub->count("--max-seconds") == 0) env_value("PCODES_MAX_SECONDS", cfg.max_seconds);
  }
  if (cfg.subcommand == "verify" && cfg.claim != "all") {
    const auto ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), cfg.claim) == ids.end())
      throw UsageError("unknown claim id '" + cfg.claim + "'; valid ids: " + claim_list() +
                       ", all");
  }
  if (cfg.subcommand == "enumerate" || cfg.subcommand == "search" ||
      cfg.subcommand == "export") {
    try {
      (void)CubeFamily::parse(cfg.family);
    } catch (const InvalidParameter& e) {
      throw UsageError(e.what());
    }
  }
  return cfg;
}

std::string help_text() {
  CommandConfig scratch;
  auto app = make_app(scratch);
  std::string text = app->help();
  for (const auto* sub : app->get_subcommands({})) text += "\n" + sub->help();
  return text;
}

int execute(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitFailure;
    }
    sink = &file;
  }
  try {
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, *sink);
    if (cfg.subcommand == "search") return cmd_search(cfg, *sink);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, *sink);
    if (cfg.subcommand == "export") return cmd_export(cfg, *sink, err);
    if (cfg.subcommand == "construct") return cmd_construct(cfg, *sink);
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "usage error: unknown subcommand '" << cfg.subcommand << "'\n";
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool wants_help = args.empty() || std::find(args.begin(), args.end(), "--help") != args.end() ||
                          std::find(args.begin(), args.end(), "-h") != args.end();
  if (wants_help) {
    (args.empty() ? err : out) << help_text();
    return args.empty() ? kExitUsage : kExitOk;
  }
  CommandConfig cfg;
  try {
    cfg = parse_command_line(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace pcodes::cli
