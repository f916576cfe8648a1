#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"
#include "litmon/fixtures.hpp"
#include "litmon/reports.hpp"

using namespace litmon;
using Json = nlohmann::ordered_json;

namespace {

ErrorCode code_of(const Corpus& c, std::string_view name, const ReportParams& p) {
  try {
    render_report(c, name, p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << name;
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Reports, Names) {
  std::vector<std::string_view> expected = {"years",   "dist",   "usage",   "coauthors", "terms",
                                            "cooccur", "sankey", "coupled", "field-time"};
  EXPECT_EQ(report_names(), expected);
}

TEST(Reports, JsonCarriesNameAndQuery) {
  const auto r = render_report(fixtures::collaboration(), "coauthors", {{"min_docs", "3"}});
  EXPECT_EQ(r.content_type, "application/json");
  const auto j = Json::parse(r.body);
  EXPECT_EQ(j["report"], "coauthors");
  EXPECT_EQ(j["query"]["min_docs"], 3);
  bool found = false;
  for (const auto& n : j["data"]["nodes"]) {
    if (n["id"] == "bontempi_e") {
      found = true;
      EXPECT_EQ(n["doc_count"], 12);
      EXPECT_EQ(n["total_link_strength"], 27);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Reports, CsvAndTsv) {
  const auto c = fixtures::two_cliques();
  const auto csv = render_report(c, "dist", {{"format", "csv"}});
  EXPECT_EQ(csv.content_type, "text/csv");
  EXPECT_EQ(csv.body.substr(0, csv.body.find('\n')), "label,count");
  const auto edges = render_report(c, "cooccur", {{"format", "edges"}});
  EXPECT_EQ(edges.content_type, "text/tab-separated-values");
  EXPECT_EQ(std::count(edges.body.begin(), edges.body.end(), '\n'), 7);  // header + 6 edges
}

TEST(Reports, FilterParameter) {
  const auto c = fixtures::table1();
  const auto all = Json::parse(render_report(c, "dist", {}).body);
  const auto theses = Json::parse(render_report(c, "dist", {{"filter", "type=Thesis"}}).body);
  EXPECT_EQ(all["records"], 1113);
  EXPECT_EQ(theses["records"], 163);
}

TEST(Reports, Errors) {
  const auto c = fixtures::two_cliques();
  EXPECT_EQ(code_of(c, "nonsense", {}), ErrorCode::NotFound);
  EXPECT_EQ(code_of(c, "years", {{"colour", "red"}}), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of(c, "coauthors", {{"min_docs", "many"}}), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of(c, "dist", {{"dim", "colour"}}), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of(c, "years", {{"format", "xml"}}), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of(c, "dist", {{"filter", "colour=red"}}), ErrorCode::UnknownField);
  EXPECT_EQ(code_of(Corpus{}, "usage", {}), ErrorCode::EmptyCorpus);
}

TEST(Reports, Deterministic) {
  const auto a = fixtures::table1();
  const auto b = fixtures::table1();
  for (auto name : report_names()) {
    EXPECT_EQ(render_report(a, name).body, render_report(b, name).body) << name;
  }
}
