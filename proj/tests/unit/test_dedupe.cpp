#include <gtest/gtest.h>

#include <algorithm>

#include "litmon/dedupe.hpp"
#include "litmon/ingest.hpp"

using namespace litmon;

TEST(TitleSimilarity, Basics) {
  EXPECT_DOUBLE_EQ(title_similarity("Materials Selection", "materials selection!"), 1.0);
  EXPECT_DOUBLE_EQ(title_similarity("", "anything"), 0.0);
  EXPECT_DOUBLE_EQ(title_similarity("abcd", "abce"), 0.75);
  EXPECT_DOUBLE_EQ(title_similarity("Bréchet", "Brechet"), 1.0);
}

TEST(Dedupe, DoiClustersIgnoreFormatting) {
  std::vector<DedupeCandidate> recs = {
      {"R1", "A", 2020, "10.1234/X"},
      {"R2", "Entirely different", 2021, "https://doi.org/10.1234/x"},
      {"R3", "C", 2020, "10.1234/y"},
  };
  const auto c = find_duplicates(recs);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members, (std::vector<std::string>{"R1", "R2"}));
  EXPECT_EQ(c[0].match_kind, MatchKind::DoiExact);
  EXPECT_DOUBLE_EQ(c[0].score, 1.0);
}

TEST(Dedupe, FuzzyTitlesSameYearOnly) {
  const std::string t = "Materials selection for lightweight automotive structures";
  std::vector<DedupeCandidate> recs = {
      {"R1", t, 2020, std::nullopt},
      {"R2", "Materials selection for lightweight automotive structure", 2020, std::nullopt},
      {"R3", t, 2021, std::nullopt},
      {"R4", t, std::nullopt, std::nullopt},
  };
  const auto c = find_duplicates(recs);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members, (std::vector<std::string>{"R1", "R2"}));
  EXPECT_EQ(c[0].match_kind, MatchKind::TitleFuzzy);
  EXPECT_GE(c[0].score, 0.9);
  EXPECT_LT(c[0].score, 1.0);
}

TEST(Dedupe, DifferentDoisNeverMergeByTitle) {
  std::vector<DedupeCandidate> recs = {
      {"R1", "Same title here", 2020, "10.1234/a"},
      {"R2", "Same title here", 2020, "10.1234/b"},
      {"R3", "Same title here", 2020, std::nullopt},
  };
  const auto c = find_duplicates(recs);
  for (const auto& cl : c) {
    const bool both = std::count(cl.members.begin(), cl.members.end(), "R1") &&
                      std::count(cl.members.begin(), cl.members.end(), "R2");
    EXPECT_FALSE(both);
  }
}

TEST(Dedupe, TransitiveClosureAndWeakestScore) {
  std::vector<DedupeCandidate> recs = {
      {"R1", "abcdefghij", 2020, std::nullopt},
      {"R2", "abcdefghiX", 2020, std::nullopt},
      {"R3", "abcdefghXX", 2020, std::nullopt},
  };
  const auto c = find_duplicates(recs, 0.9);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].members.size(), 3u);
  EXPECT_DOUBLE_EQ(c[0].score, 0.9);
}

TEST(Dedupe, OrderIndependent) {
  std::vector<DedupeCandidate> recs = {
      {"R3", "Eco audit of packaging", 2019, std::nullopt}, {"R1", "Eco audit of packaging.", 2019, std::nullopt},
      {"R2", "X", 2019, "10.5555/a"}, {"R4", "Y", 2018, "10.5555/A"}};
  auto reversed = recs;
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_EQ(find_duplicates(recs), find_duplicates(reversed));
}

TEST(Dedupe, ThresholdBounds) {
  std::vector<DedupeCandidate> recs;
  EXPECT_THROW(find_duplicates(recs, 0.0), Error);
  EXPECT_THROW(find_duplicates(recs, 1.5), Error);
  EXPECT_NO_THROW(find_duplicates(recs, 1.0));
}

TEST(Dedupe, OverCorpus) {
  Corpus c;
  IntrinsicRecord a;
  a.title = "Teaching materials selection";
  a.year = 2016;
  a.authors = {"Lindberg, K."};
  a.doi = "10.1234/t";
  IntrinsicRecord b = a;
  b.authors = {"Fredriksson, C."};
  const auto ia = ingest_record(c, a).record_id;
  const auto ib = ingest_record(c, b).record_id;
  const auto clusters = dedupe_corpus(c);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].members, (std::vector<std::string>{ia, ib}));
}
