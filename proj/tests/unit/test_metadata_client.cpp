#include <gtest/gtest.h>

#include <atomic>
#include <mutex>
#include <thread>

#include "litmon/metadata_client.hpp"

using namespace litmon;
using namespace std::chrono_literals;

namespace {

const std::string kDoiDir = std::string(LITMON_TEST_DATA) + "/doi";

ClientOptions fast_options() {
  ClientOptions o;
  o.initial_backoff = 1ms;
  o.max_backoff = 4ms;
  o.min_interval = 0ms;
  return o;
}

const char* kMinimalBody = R"({"doi":"10.1234/abc","title":"T","year":2020,"authors":[{"name":"Doe, Jane"}]})";

}  // namespace

TEST(MetadataMapping, CrossrefStyle) {
  const auto r = MetadataClient::offline(kDoiDir).resolve("10.0000/example");
  EXPECT_EQ(r.record.title, "Materials selection with Granta EduPack: a worked example");
  EXPECT_EQ(r.record.year, 2024);
  EXPECT_EQ(r.record.month, 3);
  EXPECT_EQ(r.record.venue, "Materials & Design");
  EXPECT_EQ(r.record.resource_type_hint, ResourceType::ReviewedPaper);
  EXPECT_EQ(r.record.authors, (std::vector<std::string>{"Ashby, Michael F.", "Fredriksson, Claes"}));
  ASSERT_EQ(r.record.affiliations.size(), 2u);
  EXPECT_EQ(r.record.affiliations[1].author_index, 1u);
  EXPECT_EQ(r.record.doi, "10.0000/EXAMPLE");  // as delivered; ingest normalizes
  EXPECT_EQ(r.record.keywords.size(), 2u);
  EXPECT_EQ(r.record.raw_source, SourceFormat::DoiService);
  EXPECT_TRUE(r.issues.empty());
}

TEST(MetadataMapping, MinimalSchema) {
  const auto r = MetadataClient::offline(kDoiDir).resolve("https://doi.org/10.0000/MINIMAL");
  EXPECT_EQ(r.record.resource_type_hint, ResourceType::Thesis);
  EXPECT_EQ(r.record.authors, (std::vector<std::string>{"Rossi, Marco"}));
  EXPECT_EQ(r.record.year, 2019);
}

TEST(MetadataMapping, PartialMetadataWarns) {
  const auto r = MetadataClient::offline(kDoiDir).resolve("10.0000/no-authors");
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, "MissingAuthors");
  EXPECT_EQ(r.record.resource_type_hint, ResourceType::TechnicalReportWhitePaper);
}

TEST(MetadataMapping, MalformedBody) {
  try {
    map_metadata_response("[1, 2]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedResponse);
  }
  EXPECT_THROW(map_metadata_response("{not json"), Error);
}

TEST(MetadataClient, FixtureName) {
  EXPECT_EQ(doi_fixture_name("10.1016/j.x"), "10.1016%2Fj.x.json");
  EXPECT_EQ(doi_fixture_name("https://doi.org/10.1016/J.X"), "10.1016%2Fj.x.json");
}

TEST(MetadataClient, OfflineMissingIsNotFound) {
  try {
    MetadataClient::offline(kDoiDir).resolve("10.0000/unknown");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
}

TEST(MetadataClient, MalformedDoi) {
  try {
    MetadataClient::offline(kDoiDir).resolve("not a doi");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(MetadataClient, RetriesTransientFailures) {
  std::atomic<int> calls{0};
  std::string seen_path;
  auto client = MetadataClient::live(fast_options(), [&](const std::string&, const std::string& path) {
    seen_path = path;
    return ++calls < 3 ? HttpReply{503, ""} : HttpReply{200, kMinimalBody};
  });
  const auto r = client.resolve("10.1234/ABC");
  EXPECT_EQ(calls, 3);
  EXPECT_EQ(r.record.title, "T");
  EXPECT_NE(seen_path.find("/works/10.1234/abc"), std::string::npos);
}

TEST(MetadataClient, GivesUpAfterMaxAttempts) {
  std::atomic<int> calls{0};
  auto client = MetadataClient::live(fast_options(), [&](const std::string&, const std::string&) {
    ++calls;
    return HttpReply{0, ""};
  });
  try {
    client.resolve("10.1234/abc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ServiceUnavailable);
  }
  EXPECT_EQ(calls, 3);
}

TEST(MetadataClient, NotFoundIsNotRetried) {
  std::atomic<int> calls{0};
  auto client = MetadataClient::live(fast_options(), [&](const std::string&, const std::string&) {
    ++calls;
    return HttpReply{404, ""};
  });
  try {
    client.resolve("10.1234/abc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
  EXPECT_EQ(calls, 1);
}

TEST(MetadataClient, BatchKeepsInputOrderAndBoundsConcurrency) {
  std::atomic<int> in_flight{0}, peak{0};
  auto options = fast_options();
  options.max_in_flight = 3;
  auto client = MetadataClient::live(options, [&](const std::string&, const std::string& path) {
    const int now = ++in_flight;
    int prev = peak.load();
    while (now > prev && !peak.compare_exchange_weak(prev, now)) {
    }
    std::this_thread::sleep_for(5ms);
    --in_flight;
    if (path.find("missing") != std::string::npos) return HttpReply{404, ""};
    const auto doi = path.substr(path.rfind('/') + 1);
    return HttpReply{200, R"({"title":")" + doi + R"(","year":2020,"authors":[{"name":"Doe, J."}]})"};
  });
  std::vector<std::string> dois;
  for (int i = 0; i < 12; ++i) dois.push_back("10.1234/n" + std::to_string(i));
  dois.push_back("10.1234/missing");
  const auto results = client.resolve_all(dois);
  ASSERT_EQ(results.size(), dois.size());
  for (int i = 0; i < 12; ++i) {
    ASSERT_TRUE(results[i].resolved) << i;
    EXPECT_EQ(results[i].doi, dois[i]);
    EXPECT_NE(results[i].resolved->record.title.find("n" + std::to_string(i)), std::string::npos);
  }
  EXPECT_EQ(results.back().error, ErrorCode::NotFound);
  EXPECT_LE(peak, 3);
  EXPECT_GE(peak, 2);
}
