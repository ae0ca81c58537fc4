#include <set>
#include <string>

#include <gtest/gtest.h>

#include "khr/khr.hpp"

using namespace khr;

namespace {

CorpusSpec anchors() { return load_corpus(KHR_DATA_DIR "/corpus/anchors.corpus"); }

std::set<std::string> theorems_with_status(const nlohmann::json& report, const std::string& status) {
  std::set<std::string> out;
  for (const auto& s : report["structures"]) {
    for (const auto& v : s["verdicts"]) {
      if (v["status"] == status) out.insert(v["theorem"].get<std::string>());
    }
  }
  return out;
}

}  // namespace

TEST(Corpus, ParsesEntriesAndCaps) {
  const CorpusSpec spec = parse_corpus("# c\nring Z 3\nmax-card 4\nfile x.khr expect: adjudicate\n", "/base");
  ASSERT_EQ(spec.entries.size(), 2u);
  EXPECT_EQ(spec.entries[0].source, "ring Z 3");
  EXPECT_FALSE(spec.entries[0].is_file);
  EXPECT_TRUE(spec.entries[1].is_file);
  EXPECT_TRUE(spec.entries[1].adjudicate);
  EXPECT_EQ(spec.entries[1].source, "/base/x.khr");
  EXPECT_EQ(spec.caps.max_card, 4u);
  EXPECT_EQ(spec.entries[1].line, 4u);
}

TEST(Corpus, Errors) {
  EXPECT_THROW(parse_corpus("monoid free 2\n"), format_error);
  EXPECT_THROW(parse_corpus("ring Z 3 expect: green\n"), format_error);
  EXPECT_THROW(parse_corpus("max-card\n"), format_error);
  EXPECT_THROW(load_corpus("/nonexistent.corpus"), usage_error);
}

TEST(Suite, AnchorsAreGreenWithoutSkips) {
  const nlohmann::json report = run_theorem_suite(anchors());
  EXPECT_TRUE(suite_passed(report));
  EXPECT_EQ(report["summary"]["fail"], 0);
  EXPECT_EQ(report["summary"]["skip"], 0);
  EXPECT_GT(report["summary"]["pass"].get<int>(), 0);
  const auto passed = theorems_with_status(report, "pass");
  for (const char* t : {"unit-criterion", "extended-ideals", "radical-commutes", "prime-preserved",
                        "primary-preserved", "2-absorbing-preserved", "local-maximal", "quotient-fraction-iso",
                        "universal-property", "equivalence-laws", "localization-valid", "field-of-fractions"}) {
    EXPECT_TRUE(passed.count(t)) << t;
  }
}

TEST(Suite, Deterministic) {
  EXPECT_EQ(run_theorem_suite(anchors()).dump(2), run_theorem_suite(anchors()).dump(2));
}

TEST(Suite, EmptyCorpus) {
  const nlohmann::json report = run_theorem_suite(parse_corpus(""));
  EXPECT_TRUE(report["structures"].empty());
  EXPECT_TRUE(suite_passed(report));
}

TEST(Suite, Ternary33ExampleIsAdjudicated) {
  const CorpusSpec spec = parse_corpus("file paper_33.khr expect: adjudicate\n", KHR_DATA_DIR);
  const nlohmann::json report = run_theorem_suite(spec);
  EXPECT_TRUE(suite_passed(report));
  EXPECT_EQ(report["summary"]["adjudicate"], 1);
  const auto& s = report["structures"][0];
  EXPECT_EQ(s["source"], "paper_33.khr");
  bool found = false;
  for (const auto& v : s["verdicts"]) {
    if (v["status"] == "adjudicate") {
      found = true;
      EXPECT_NE(v["detail"].get<std::string>().find("(0,1,2,1,2)"), std::string::npos) << v.dump();
    }
  }
  EXPECT_TRUE(found);
}

TEST(Suite, UntaggedStrictFailureFails) {
  const CorpusSpec spec = parse_corpus("file paper_33.khr\n", KHR_DATA_DIR);
  EXPECT_FALSE(suite_passed(run_theorem_suite(spec)));
}

TEST(Suite, CapSkipsLargeStructures) {
  SuiteOptions opts;
  opts.caps = SuiteCaps{3, 4, 4};
  const nlohmann::json report = run_theorem_suite(parse_corpus("ring Z 5\n"), opts);
  EXPECT_EQ(report["summary"]["skip"], 1);
  EXPECT_EQ(report["summary"]["pass"], 0);
}

TEST(Suite, NonCommutativeStructureIsSkippedForFractions) {
  const nlohmann::json report = run_theorem_suite(parse_corpus("ring Z 3 m 3 n 2\n"));
  EXPECT_TRUE(suite_passed(report));
  EXPECT_GE(report["summary"]["skip"].get<int>(), 1);
}

TEST(Suite, DisplayRelationIsReportedNotFailed) {
  SuiteOptions opts;
  opts.universal.localize.relation = RelationForm::display;
  const nlohmann::json report = run_theorem_suite(parse_corpus("ring Z 3\n"), opts);
  EXPECT_EQ(report["options"]["relation"], "display");
}
