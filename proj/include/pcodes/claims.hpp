#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcodes/perfect_code.hpp"

namespace pcodes {

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

/// Outcome of one executable claim. `scope` is "exact" when the statement is
/// fully checked and "desk-scale" when a universally quantified statement is
/// checked up to the bounds listed in `parameters`.
struct ClaimReport {
  std::string id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::Fail;
  std::string scope = "exact";
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::vector<std::string> failures;
};

/// Search budget shared by every exhaustive step of a claim.
struct ClaimBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

ClaimReport verify_counting(int n_max);
ClaimReport verify_theorem_main(int n_max, const ClaimBudget& budget = {});
ClaimReport verify_lemma_structure(std::span<const int> n_set);
ClaimReport verify_lemma_arithmetic(std::int64_t n_max);
ClaimReport verify_theorem_arithmetic(std::int64_t n_max);
/// Both arithmetic claims.
std::vector<ClaimReport> verify_proof_arithmetic(std::int64_t n_max);
ClaimReport verify_qn_avoidance(std::span<const int> n_set, const ClaimBudget& budget = {});
ClaimReport verify_construction_1n(std::span<const int> p_set);
ClaimReport verify_construction_1n12(std::span<const int> p_set);
/// Both construction claims.
std::vector<ClaimReport> verify_constructions(std::span<const int> p_set);
ClaimReport verify_fibonacci_nonexistence(int n_max, const ClaimBudget& budget = {});

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string defaults;
};

/// Every claim id in run order.
const std::vector<ClaimInfo>& claim_catalog();
std::vector<std::string> claim_ids();

/// Overrides for the registry runners; unset fields keep each claim's defaults.
struct ClaimParams {
  std::optional<std::int64_t> n_max;
  std::optional<int> n;
  std::optional<int> p;
  ClaimBudget budget;
};

/// Throws RejectedInput for an unknown id.
ClaimReport run_claim(std::string_view id, const ClaimParams& params = {});
std::vector<ClaimReport> run_all_claims(const ClaimParams& params = {});

nlohmann::ordered_json report_to_json(const ClaimReport& report);
std::string reports_to_json(std::span<const ClaimReport> reports);
std::string reports_to_table(std::span<const ClaimReport> reports);

}  // namespace pcodes
