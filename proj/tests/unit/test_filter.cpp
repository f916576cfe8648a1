#include <gtest/gtest.h>

#include "litmon/filter.hpp"
#include "synthetic.hpp"

using namespace litmon;
using litmon::synth::SynthDoc;

namespace {

Corpus sample() {
  std::vector<SynthDoc> docs(4);
  docs[0].title = "Eco audit of packaging";
  docs[0].year = 2015;
  docs[0].authors = {"Bréchet, Y."};
  docs[0].type = ResourceType::Thesis;
  docs[0].keywords = {"eco audit", "packaging"};
  docs[0].tools = {"SolidWorks"};
  docs[0].materials = {MaterialFamily::Polymers};

  docs[1].title = "Selection charts";
  docs[1].year = 2018;
  docs[1].authors = {"Ashby, M. F.", "Cebon, D."};
  docs[1].product = Product::Selector;

  docs[2].title = "Undated note";
  docs[2].authors = {"Cebon, D."};

  docs[3].title = "Later work";
  docs[3].year = 2022;
  docs[3].authors = {"Ashby, M. F."};
  docs[3].status = CurationStatus::Ingested;
  return litmon::synth::build_corpus(docs);
}

std::vector<std::string> titles(const Corpus& c, std::string_view f) {
  std::vector<std::string> out;
  for (const auto* r : query(c, FilterExpr::parse(f))) out.push_back(r->title);
  return out;
}

ErrorCode parse_error(std::string_view f) {
  try {
    FilterExpr::parse(f);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << f;
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Filter, EmptyMatchesAll) {
  const auto c = sample();
  EXPECT_EQ(titles(c, "").size(), 4u);
  EXPECT_TRUE(FilterExpr::parse(" ; ").empty());
}

TEST(Filter, YearRanges) {
  const auto c = sample();
  EXPECT_EQ(titles(c, "year=2015..2020"), (std::vector<std::string>{"Eco audit of packaging", "Selection charts"}));
  EXPECT_EQ(titles(c, "year=2016.."), (std::vector<std::string>{"Selection charts", "Later work"}));
  EXPECT_EQ(titles(c, "year=..2015"), (std::vector<std::string>{"Eco audit of packaging"}));
  EXPECT_EQ(titles(c, "year=2018"), (std::vector<std::string>{"Selection charts"}));
}

TEST(Filter, EnumsAndAliases) {
  const auto c = sample();
  EXPECT_EQ(titles(c, "type=thesis"), (std::vector<std::string>{"Eco audit of packaging"}));
  EXPECT_EQ(titles(c, "product=Granta Selector"), (std::vector<std::string>{"Selection charts"}));
  EXPECT_EQ(titles(c, "status=Ingested"), (std::vector<std::string>{"Later work"}));
  EXPECT_EQ(titles(c, "tool=SolidWorks"), (std::vector<std::string>{"Eco audit of packaging"}));
  EXPECT_EQ(titles(c, "material=Polymers"), (std::vector<std::string>{"Eco audit of packaging"}));
}

TEST(Filter, ContainsFoldsCaseAndDiacritics) {
  const auto c = sample();
  EXPECT_EQ(titles(c, "title~ECO AUDIT"), (std::vector<std::string>{"Eco audit of packaging"}));
  EXPECT_EQ(titles(c, "author~brechet"), (std::vector<std::string>{"Eco audit of packaging"}));
  EXPECT_EQ(titles(c, "keyword=packaging"), (std::vector<std::string>{"Eco audit of packaging"}));
}

TEST(Filter, Conjunction) {
  const auto c = sample();
  EXPECT_EQ(titles(c, "author~cebon;year=2000..2030"), (std::vector<std::string>{"Selection charts"}));
}

TEST(Filter, Errors) {
  EXPECT_EQ(parse_error("colour=red"), ErrorCode::UnknownField);
  EXPECT_EQ(parse_error("year=2020..2010"), ErrorCode::MalformedRange);
  EXPECT_EQ(parse_error("year=abc"), ErrorCode::MalformedRange);
  EXPECT_EQ(parse_error("year=.."), ErrorCode::MalformedRange);
  EXPECT_EQ(parse_error("title"), ErrorCode::InvalidArgument);
}

TEST(Filter, DotsInTextValuesAreLiteral) {
  const auto f = FilterExpr::parse("doi=10.1016/x..y");
  ASSERT_EQ(f.predicates().size(), 1u);
  EXPECT_EQ(f.predicates()[0].op, PredicateOp::Equals);
}

TEST(Filter, ToStringRoundTrips) {
  const auto f = FilterExpr::parse("year=2015..2020;product=EduPack;title~eco audit");
  EXPECT_EQ(FilterExpr::parse(f.to_string()).predicates(), f.predicates());
}

TEST(Filter, RestrictKeepsEntities) {
  const auto c = sample();
  const auto r = restrict(c, FilterExpr::parse("year=2018"));
  EXPECT_EQ(r.records().size(), 1u);
  EXPECT_EQ(r.entities().size(), c.entities().size());
}
