#include <gtest/gtest.h>

#include <filesystem>

#include "anncat/instance_io.hpp"
#include "anncat/report.hpp"
#include "json.hpp"

using namespace anncat;

namespace {

AnnStructure corpus(const std::string& name) { return load_instance(std::string(ANNCAT_CORPUS_DIR) + "/" + name); }

}  // namespace

TEST(Report, EtaBadInstance) {
  const auto s = corpus("handmade/z2_eta_bad.json");
  const auto r = build_report(s);
  EXPECT_EQ(r.exit_status, 1);
  EXPECT_FALSE(r.center.available);
  const auto text = render_text(r);
  EXPECT_NE(text.find("D4 FAIL"), std::string::npos) << text;
  EXPECT_NE(text.find("witness (1,1,1,1)"), std::string::npos) << text;
  EXPECT_NE(text.find("status 1\n"), std::string::npos);

  const auto doc = nlohmann::json::parse(render_machine(r));
  EXPECT_EQ(doc["status"], 1);
  EXPECT_EQ(doc["digest"], instance_digest(s));
  bool found = false;
  for (const auto& suite : doc["suites"]) {
    if (suite["suite"] != "FULL_ANN") continue;
    for (const auto& d : suite["diagrams"]) {
      if (d["diagram"] != "D4") continue;
      EXPECT_FALSE(d["passed"].get<bool>());
      EXPECT_EQ(d["witnesses"][0]["objects"], nlohmann::json::array({1, 1, 1, 1}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(doc["equivalence"]["laplaza_passed"] == false && doc["equivalence"]["ringlike_passed"] == false);
  EXPECT_FALSE(doc["equivalence"]["refuted"].get<bool>());
}

TEST(Report, StatusesAcrossTheCorpus) {
  const std::vector<std::pair<std::string, int>> expected{
      {"search/cyclic_2_regular-000000.json", 0}, {"search/dual_2_regular-000003.json", 0},
      {"handmade/z4_plain.json", 0},              {"handmade/z4_eta_twisted.json", 0},
      {"handmade/dual2_first_slot.json", 0},      {"handmade/dual2_lambda_braided.json", 0},
      {"handmade/z2_unnormalized.json", 1},       {"handmade/z2_eta_bad.json", 1},
  };
  for (const auto& [name, status] : expected) {
    const auto r = build_report(corpus(name));
    EXPECT_EQ(r.exit_status, status) << name << "\n" << render_text(r);
  }
}

TEST(Report, UnbraidedInstanceHasNoExperiments) {
  const auto r = build_report(corpus("handmade/z4_plain.json"));
  EXPECT_FALSE(r.braided);
  EXPECT_EQ(r.suites.size(), 1u);
  EXPECT_FALSE(r.dependence.has_value());
  EXPECT_FALSE(r.equivalence.has_value());
  EXPECT_TRUE(r.center.verified());
  const auto doc = nlohmann::json::parse(render_machine(r));
  EXPECT_TRUE(doc["dependence"].is_null());
  EXPECT_TRUE(doc["equivalence"].is_null());
}

TEST(Report, NonsymmetricCenterWitnessIsReported) {
  const auto r = build_report(corpus("search/dual_2_regular-000000.json"));
  ASSERT_TRUE(r.center.available);
  EXPECT_EQ(r.center.object_count, 16u);
  ASSERT_TRUE(r.center.nonsymmetric_witness.has_value());
  const auto doc = nlohmann::json::parse(render_machine(r));
  EXPECT_TRUE(doc["center"]["nonsymmetric_witness"].is_object());
  EXPECT_NE(render_text(r).find("nonsymmetric witness"), std::string::npos);
}

TEST(Report, RenderingIsDeterministic) {
  for (const auto& e : std::filesystem::recursive_directory_iterator(ANNCAT_CORPUS_DIR)) {
    if (e.path().extension() != ".json") continue;
    const auto s = load_instance(e.path());
    const auto a = build_report(s);
    const auto b = build_report(s, {.witness_cap = 16, .threads = 3});
    EXPECT_EQ(render_text(a), render_text(b)) << e.path();
    EXPECT_EQ(render_machine(a), render_machine(b)) << e.path();
  }
}
