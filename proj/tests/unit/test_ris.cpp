#include <gtest/gtest.h>

#include <map>

#include "golden.hpp"

using namespace litmon;

class GoldenRis : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { parsed = new ParseResult(parse_ris(read_test_file("golden.ris"))); }
  static void TearDownTestSuite() { delete parsed; }
  static ParseResult* parsed;
};
ParseResult* GoldenRis::parsed = nullptr;

TEST_F(GoldenRis, EntryCountAndErrors) {
  EXPECT_EQ(parsed->records.size(), 33u);
  ASSERT_EQ(parsed->errors.size(), 4u);
  EXPECT_EQ(parsed->errors[0], (ParseError{370, "MissingTerminator", "record has no ER line"}));
  EXPECT_EQ(parsed->errors[1].line, 385u);
  EXPECT_EQ(parsed->errors[1].code, "SyntaxError");
  EXPECT_EQ(parsed->errors[2].line, 386u);
  EXPECT_EQ(parsed->errors[3].line, 396u);
  EXPECT_NE(find_key(*parsed, "ris_after_missing_er"), nullptr);
  EXPECT_NE(find_key(*parsed, "ris_last_2024"), nullptr);
  EXPECT_EQ(find_key(*parsed, "ris_missing_er"), nullptr);
}

TEST_F(GoldenRis, Types) {
  std::map<std::optional<ResourceType>, int> counts;
  for (const auto& r : parsed->records) ++counts[r.resource_type_hint];
  EXPECT_EQ(counts[ResourceType::Thesis], 4);
  EXPECT_EQ(counts[ResourceType::StandardPatent], 4);
  EXPECT_EQ(counts[ResourceType::TechnicalReportWhitePaper], 3);
  EXPECT_EQ(counts[std::nullopt], 1);
}

TEST_F(GoldenRis, AuthorsAndAffiliations) {
  const auto* r = find_key(*parsed, "ris_cebon_1994");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->authors, (std::vector<std::string>{"Cebon, David", "Ashby, Michael F."}));
  ASSERT_EQ(r->affiliations.size(), 2u);
  EXPECT_EQ(r->affiliations[0].author_index, 0u);
  EXPECT_EQ(r->affiliations[1].author_index, 1u);
  EXPECT_EQ(r->keywords.size(), 3u);
  EXPECT_EQ(r->doi, "10.1088/0957-0233/5/3/015");
}

TEST_F(GoldenRis, DatesAndContinuations) {
  const auto* ashby = find_key(*parsed, "ris_ashby_2005");
  EXPECT_EQ(ashby->year, 2005);
  EXPECT_EQ(ashby->month, 9);
  EXPECT_EQ(ashby->venue, "Materials Today");
  EXPECT_EQ(ashby->publisher, "Elsevier");
  const auto* da = find_key(*parsed, "ris_yearonly_da");
  EXPECT_EQ(da->year, 2012);
  EXPECT_EQ(da->month, 5);
  EXPECT_EQ(find_key(*parsed, "ris_brechet_2003")->title, "Architectured materials: expanding the materials space");
  EXPECT_FALSE(find_key(*parsed, "ris_noyear")->year.has_value());
}

TEST_F(GoldenRis, Accents) {
  const auto* r = find_key(*parsed, "ris_muller_2016");
  EXPECT_EQ(r->title, "Ökobilanz von Leichtbaukomponenten");
  EXPECT_EQ(r->authors[1], "Schäfer, Ute");
  EXPECT_EQ(r->language, "German");
}

TEST_F(GoldenRis, WriterRoundTrip) {
  const auto again = parse_ris(write_ris(parsed->records));
  EXPECT_TRUE(again.errors.empty());
  EXPECT_EQ(again.records, parsed->records);
}

TEST(Ris, EmptyInput) {
  const auto r = parse_ris("\n\n");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].code, "EmptyInput");
}

TEST(Ris, CrLfLineEndings) {
  const auto r = parse_ris("TY  - JOUR\r\nTI  - Windows file\r\nAU  - Doe, Jane\r\nPY  - 2020\r\nER  - \r\n");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_TRUE(r.errors.empty());
  EXPECT_EQ(r.records[0].title, "Windows file");
  EXPECT_EQ(r.records[0].year, 2020);
}
