#include <doctest.h>

#include "domcycle/campaign.hpp"
#include "domcycle/corpus.hpp"
#include "test_util.hpp"

using namespace domcycle;

namespace {

CampaignOptions small(const std::string& campaign, std::uint64_t seed = 1) {
  CampaignOptions o;
  o.campaign = campaign;
  o.seed = seed;
  o.threads = 2;
  o.sampled_systems = 20;
  o.parity_trials = 200;
  return o;
}

Corpus only(const std::string& corpus, const std::vector<std::string>& ids) {
  Corpus c = *builtin_corpus(corpus);
  std::erase_if(c.entries, [&](const CorpusEntry& e) { return std::find(ids.begin(), ids.end(), e.id) == ids.end(); });
  return c;
}

}  // namespace

TEST_CASE("every builtin claim re-derives") {
  for (const Corpus& c : builtin_corpora()) {
    for (const CorpusEntry& e : c.entries) {
      INFO(c.name << "/" << e.id);
      CHECK(verify_claims(e).empty());
    }
  }
}

TEST_CASE("a false claim is reported") {
  CorpusEntry e = builtin_corpus("NEGATIVES")->entries.front();
  e.claims.cyclic_at_least = 4;
  CHECK(verify_claims(e).size() == 1);
  e.claims.vertex_connectivity_at_least = 4;
  CHECK(verify_claims(e).size() == 2);
}

TEST_CASE("small campaigns run clean") {
  for (const std::string& name : {"dcc-check", "prop1-pipeline", "parity", "conjecture3-check"}) {
    INFO(name);
    CampaignOptions o = small(name);
    o.corpora = {only("CUBIC_C4", {"K4", "K3,3", "petersen"}), only("NEGATIVES", {"prism", "K4"})};
    const CampaignReport r = run_campaign(o);
    CHECK(r.failures.empty());
    CHECK(exit_code(r) == 0);
    CHECK(r.instances > 0);
  }
  for (const std::string& name : {"nwcstar-check", "lemma-l2", "lemma-l3-crossoracle", "lemma-lll", "prop2-pipeline"}) {
    INFO(name);
    CampaignOptions o = small(name);
    o.corpora = {only("FOURREG_4C", {"K5"})};
    const CampaignReport r = run_campaign(o);
    CHECK(r.failures.empty());
    CHECK(r.instances >= 243);
  }
}

TEST_CASE("reports depend on the seed only") {
  CampaignOptions o = small("nwcstar-check", 7);
  o.corpora = {only("FOURREG_4C", {"K5", "C7-complement"})};
  o.exhaustive_vertex_limit = 0;
  const std::string first = report_json(run_campaign(o), false).dump();
  o.threads = 1;
  CHECK(report_json(run_campaign(o), false).dump() == first);
  o.seed = 8;
  CHECK(report_json(run_campaign(o), false).dump() != first);
}

TEST_CASE("report layout") {
  CampaignOptions o = small("dcc-check");
  o.corpora = {only("CUBIC_C4", {"petersen"})};
  const CampaignReport r = run_campaign(o);
  const auto j = report_json(r, false);
  for (const char* key : {"campaign", "seed", "corpora", "budget_exceeded", "summary", "entries", "failures"}) CHECK(j.contains(key));
  CHECK_FALSE(j.contains("timings"));
  CHECK(report_json(r, true).contains("timings"));
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0]["id"] == "CUBIC_C4/petersen");
  CHECK(j["entries"][0]["result"] == "dominating_cycle");
}

TEST_CASE("budget and bad names") {
  CampaignOptions o = small("lemma-l2");
  o.corpora = {only("FOURREG_4C", {"K5", "octahedron"})};
  o.budget = std::chrono::duration<double>(0);
  const CampaignReport r = run_campaign(o);
  CHECK(r.budget_exceeded);
  CHECK(exit_code(r) == 3);
  CHECK(code_of([] { run_campaign(small("lemma-l9")); }) == ErrorCode::PreconditionViolated);
  CHECK(is_campaign("parity"));
  CHECK_FALSE(is_campaign("Parity"));
}
