#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "domcycle/corpus.hpp"
#include "domcycle/multigraph.hpp"

namespace domcycle {

struct CampaignOptions {
  std::string campaign;
  /// Empty means the campaign's default corpora.
  std::vector<Corpus> corpora;
  std::uint64_t seed = 0;
  std::optional<std::chrono::duration<double>> budget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Hosts up to this many vertices get all 3^n systems, larger ones a sample.
  int exhaustive_vertex_limit = 8;
  int sampled_systems = 500;
  int parity_trials = 10'000;
};

struct EntryReport {
  std::string id;
  std::string result;
  nlohmann::json detail;
  std::optional<ClosedTrail> witness;
  double seconds = 0;
};

/// Entries and failures are sorted, so the report depends only on the
/// corpora, the options and the seed.
struct CampaignReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::vector<std::string> corpora;
  std::vector<EntryReport> entries;
  std::vector<std::string> failures;
  std::size_t instances = 0;
  std::size_t skipped = 0;
  bool budget_exceeded = false;
};

const std::vector<std::string>& campaign_names();
bool is_campaign(std::string_view name);
std::vector<Corpus> default_corpora(std::string_view campaign);

/// Runs every instance of the campaign. Failures are collected, never
/// thrown; the budget is checked before each instance starts.
/// Throws PreconditionViolated for an unknown campaign name.
CampaignReport run_campaign(const CampaignOptions& options);

/// {campaign, seed, corpora, budget_exceeded, summary, entries, failures}.
/// Timings are left out unless asked for, keeping reports byte-stable.
nlohmann::json report_json(const CampaignReport& report, bool include_timings);

/// 0 when clean, 2 when failures were found, 3 when the budget ran out.
int exit_code(const CampaignReport& report);

nlohmann::json trail_json(const ClosedTrail& trail);

}  // namespace domcycle
