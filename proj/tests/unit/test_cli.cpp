#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pcodes/claims.hpp"
#include "pcodes/cli.hpp"

using namespace pcodes;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pcodes_test_" + name);
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--family", "lucas", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "0000\n0001\n0010\n0100\n0101\n1000\n1010\n");
  CHECK(run({"enumerate", "--family", "qn", "--n", "3", "--count"}).out == "8\n");
  CHECK(run({"enumerate", "--family", "lucas1s:7", "--n", "7", "--count"}).out == "127\n");
  r = run({"enumerate", "--family", "lucs", "--n", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown family") != std::string::npos);
  CHECK(run({"enumerate", "--family", "lucas1s:0", "--n", "4"}).code == 2);
  CHECK(run({"enumerate", "--family", "lucas", "--n", "70"}).code == 2);
}

TEST_CASE("search exit codes and JSON") {
  auto r = run({"search", "--family", "lucas", "--n", "4", "--mode", "prove-none"});
  CHECK(r.code == 3);
  CHECK(nlohmann::json::parse(r.out)["status"] == "exhausted");

  r = run({"search", "--family", "lucas", "--n", "3", "--mode", "first"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["witness"] == nlohmann::json::array({"000"}));

  r = run({"search", "--family", "qn", "--n", "7", "--mode", "first", "--avoid-circular-run", "7"});
  CHECK(r.code == 0);
  r = run({"search", "--family", "qn", "--n", "7", "--mode", "prove-none", "--avoid-circular-run", "6"});
  CHECK(r.code == 3);

  r = run({"search", "--family", "lucas", "--n", "12", "--mode", "prove-none", "--max-nodes", "4"});
  CHECK(r.code == 4);
  CHECK(nlohmann::json::parse(r.out)["status"] == "budget_exceeded");

  r = run({"search", "--family", "qn", "--n", "3", "--mode", "enumerate", "--witnesses", "2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 4);
  CHECK(doc["witnesses"].size() == 2);
  CHECK(doc["seed"] == 0);

  CHECK(run({"search", "--family", "lucas", "--n", "4", "--mode", "all"}).code == 2);
}

TEST_CASE("budget environment overrides apply only to unset flags") {
  setenv("PCODES_MAX_NODES", "4", 1);
  auto cfg = cli::parse_command_line({"search", "--family", "lucas", "--n", "12"});
  CHECK(cfg.max_nodes == 4);
  cfg = cli::parse_command_line({"search", "--family", "lucas", "--n", "12", "--max-nodes", "0"});
  CHECK(cfg.max_nodes == 0);
  CHECK(run({"search", "--family", "lucas", "--n", "12", "--mode", "prove-none"}).code == 4);
  setenv("PCODES_MAX_NODES", "many", 1);
  CHECK(run({"search", "--family", "lucas", "--n", "4"}).code == 2);
  unsetenv("PCODES_MAX_NODES");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--claim", "thm-main", "--n-max", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thm-main") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);

  r = run({"verify", "--claim", "prop-1n", "--p", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["verdict"] == "pass");

  r = run({"verify", "--claim", "all", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == claim_ids().size());

  r = run({"verify", "--claim", "thm-main", "--max-nodes", "2"});
  CHECK(r.code == 4);
  CHECK(r.out.find("skipped") != std::string::npos);

  r = run({"verify", "--claim", "thm-9"});
  CHECK(r.code == 2);
  for (const auto& id : claim_ids()) CHECK(r.err.find(id) != std::string::npos);
}

TEST_CASE("help lists every claim id") {
  const auto help = cli::help_text();
  for (const auto& id : claim_ids()) CHECK(help.find(id) != std::string::npos);
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out == help);
  CHECK(run({}).code == 2);
}

TEST_CASE("export") {
  auto r = run({"export", "--family", "lucas", "--n", "4", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '[') == 7);
  CHECK(std::count(r.out.begin(), r.out.end(), '-') == 2 * 8);
  CHECK(r.out == run({"export", "--family", "lucas", "--n", "4", "--format", "dot"}).out);

  r = run({"export", "--family", "lucas", "--n", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["vertices"].size() == 3);
  r = run({"export", "--family", "fib", "--n", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["vertices"] == nlohmann::json::array({""}));
}

TEST_CASE("search output round-trips through export --highlight-code") {
  const auto path = temp_file("witness.json");
  {
    const auto r = run({"search", "--family", "qn", "--n", "7", "--output", path.string()});
    REQUIRE(r.code == 0);
  }
  auto r = run({"export", "--family", "qn", "--n", "7", "--format", "json", "--highlight-code",
                path.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("perfect code: yes") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out)["code"].size() == 16);

  const auto text = temp_file("code.txt");
  std::ofstream(text) << "# code\n0000\n1001\n";
  r = run({"export", "--family", "lucas", "--n", "4", "--highlight-code", text.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("'1001'") != std::string::npos);

  std::ofstream(text) << "0000\n";
  r = run({"export", "--family", "lucas", "--n", "3", "--format", "dot", "--highlight-code",
           text.string()});
  CHECK(r.code == 1);  // 0000 has the wrong length for Λ_3
  std::ofstream(text) << "000\n";
  r = run({"export", "--family", "lucas", "--n", "3", "--format", "dot", "--highlight-code",
           text.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("style=filled") != std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(text);
}

TEST_CASE("construct") {
  auto r = run({"construct", "--p", "3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 16);
  CHECK(r.out.find("1111111\n") != std::string::npos);
  r = run({"construct", "--p", "3", "--kind", "n-1", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["family"] == "lucas1s:6");
  CHECK(doc["size"] == 15);
  CHECK(doc["perfect"] == true);
  CHECK(run({"construct", "--p", "9"}).code == 2);
}

TEST_CASE("canonical command lines parse back to the same config") {
  const std::vector<std::vector<std::string>> samples = {
      {"enumerate", "--family", "lucas", "--n", "4", "--count"},
      {"search", "--family", "lucas1s:5", "--n", "9", "--mode", "enumerate", "--seed", "7",
       "--threads", "2", "--max-seconds", "1.5", "--avoid-circular-run", "3"},
      {"verify", "--claim", "lemma-0n", "--n", "9", "--format", "json"},
      {"verify", "--claim", "all", "--n-max", "10", "--p", "2"},
      {"export", "--family", "fib", "--n", "5", "--highlight-code", "x.txt", "--output", "o.dot"},
      {"construct", "--p", "4", "--kind", "n-2"},
  };
  for (const auto& args : samples) {
    const auto cfg = cli::parse_command_line(args);
    const auto again = cli::parse_command_line(cfg.canonical_args());
    INFO(cfg.canonical());
    CHECK(again == cfg);
    CHECK(again.canonical() == cfg.canonical());
  }
}
