#include <gtest/gtest.h>

#include <filesystem>

#include <unistd.h>

#include "golden.hpp"

#include "httplib.h"
#include "json.hpp"
#include "litmon/api.hpp"
#include "litmon/corpus_io.hpp"
#include "litmon/fixtures.hpp"
#include "litmon/reports.hpp"

using namespace litmon;
namespace fs = std::filesystem;

namespace {

Corpus ingested_corpus() {
  Corpus c;
  IntrinsicRecord r;
  r.title = "Teaching sustainability with materials selection software";
  r.year = 2016;
  r.resource_type_hint = ResourceType::ReviewedPaper;
  r.authors = {"Fredriksson, Claes"};
  ingest_record(c, r);
  return c;
}

Json body_of(const ApiResponse& r) { return Json::parse(r.body); }

}  // namespace

TEST(ApiErrors, CodesAndStatuses) {
  EXPECT_EQ(api_error_code(ErrorCode::UnknownRecord), "not_found");
  EXPECT_EQ(api_error_code(ErrorCode::VocabularyViolation), "vocabulary_violation");
  EXPECT_EQ(http_status(ErrorCode::UnknownRecord), 404);
  EXPECT_EQ(http_status(ErrorCode::VocabularyViolation), 422);
  EXPECT_EQ(http_status(ErrorCode::InvalidArgument), 400);
  EXPECT_EQ(http_status(ErrorCode::DuplicateShortName), 409);
}

TEST(ApiService, UnknownRecordIsNotFoundEnvelope) {
  ApiService api(std::make_shared<CorpusStore>(ingested_corpus()));
  const auto r = api.handle({"GET", "/records/D999999", {}, {}});
  EXPECT_EQ(r.status, 404);
  const auto j = body_of(r);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["error"]["code"], "not_found");
  EXPECT_TRUE(j["issues"].empty());
}

TEST(ApiService, RecordsQuery) {
  ApiService api(std::make_shared<CorpusStore>(fixtures::table1()));
  const auto r = api.handle({"GET", "/records", {{"filter", "type=StandardPatent"}}, {}});
  ASSERT_EQ(r.status, 200);
  const auto j = body_of(r);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"]["count"], 47);
  const auto bad = api.handle({"GET", "/records", {{"filter", "colour=red"}}, {}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(body_of(bad)["error"]["code"], "unknown_field");
}

TEST(ApiService, AnnotateGateAndReadYourWrites) {
  auto store = std::make_shared<CorpusStore>(ingested_corpus());
  ApiService api(store);
  const auto v0 = store->version();

  const auto put = api.handle({"PUT", "/records/D000001/annotation", {}, read_test_file("annotation.json")});
  ASSERT_EQ(put.status, 200) << put.body;
  EXPECT_EQ(put.snapshot, v0 + 1);
  EXPECT_EQ(body_of(put)["payload"]["curation_status"], "Annotated");

  const auto get = api.handle({"GET", "/records/D000001", {}, {}});
  EXPECT_GE(get.snapshot, put.snapshot);
  EXPECT_EQ(body_of(get)["payload"]["usage"]["principal_product"], "EduPack");

  const auto gate = api.handle({"POST", "/records/D000001/gate", {}, {}});
  ASSERT_EQ(gate.status, 200) << gate.body;
  EXPECT_EQ(body_of(gate)["payload"]["curation_status"], "Validated");
  EXPECT_EQ(body_of(gate)["payload"]["decision"]["verdict"], "Include");
}

TEST(ApiService, InvalidAnnotationLeavesSnapshot) {
  auto store = std::make_shared<CorpusStore>(ingested_corpus());
  ApiService api(store);
  const auto v0 = store->version();
  const auto r = api.handle({"PUT", "/records/D000001/annotation", {}, R"({"usage":{"principal_product":"Nope"}})"});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(body_of(r)["error"]["code"], "vocabulary_violation");
  EXPECT_EQ(store->version(), v0);
  const auto garbage = api.handle({"PUT", "/records/D000001/annotation", {}, "{not json"});
  EXPECT_EQ(garbage.status, 400);
}

TEST(ApiService, Neighborhood) {
  const auto c = fixtures::ashby_neighborhood();
  const auto ashby = c.find_entity(EntityKind::Author, "ashby_mf")->entity_id;
  ApiService api(std::make_shared<CorpusStore>(c));
  const auto r = api.handle({"GET", "/entities/" + ashby + "/neighborhood", {{"depth", "2"}}, {}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r)["payload"]["nodes"].size(), 6u);
  EXPECT_EQ(api.handle({"GET", "/entities/" + ashby + "/neighborhood", {{"depth", "x"}}, {}}).status, 400);
  EXPECT_EQ(api.handle({"GET", "/entities/nobody/neighborhood", {}, {}}).status, 404);
}

TEST(ApiService, ReportsAreRawBytes) {
  const auto c = fixtures::two_cliques();
  ApiService api(std::make_shared<CorpusStore>(c));
  const auto r = api.handle({"GET", "/reports/cooccur", {{"format", "nodes"}}, {}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "text/tab-separated-values");
  EXPECT_EQ(r.body, render_report(c, "cooccur", {{"format", "nodes"}}).body);
  EXPECT_EQ(api.handle({"GET", "/reports/nonsense", {}, {}}).status, 404);
}

TEST(ApiService, QualityCheckSeverity) {
  ApiService api(std::make_shared<CorpusStore>(ingested_corpus()));
  const auto all = body_of(api.handle({"GET", "/qc", {{"severity", "info"}}, {}}));
  const auto errors = body_of(api.handle({"GET", "/qc", {{"severity", "error"}}, {}}));
  EXPECT_GE(all["issues"].size(), errors["issues"].size());
  EXPECT_EQ(api.handle({"GET", "/qc", {{"severity", "loud"}}, {}}).status, 400);
}

TEST(ApiService, RoutingErrors) {
  ApiService api(std::make_shared<CorpusStore>());
  EXPECT_EQ(api.handle({"GET", "/nowhere", {}, {}}).status, 404);
  EXPECT_EQ(api.handle({"DELETE", "/records/D000001", {}, {}}).status, 405);
}

TEST(ApiService, PersistsWrites) {
  const auto path = fs::temp_directory_path() / ("litmon_api_" + std::to_string(::getpid()) + ".jsonl");
  auto store = std::make_shared<CorpusStore>(ingested_corpus());
  ApiService api(store, path);
  api.handle({"PUT", "/records/D000001/annotation", {}, read_test_file("annotation.json")});
  EXPECT_EQ(load_corpus_file(path).corpus, *store->snapshot());
  fs::remove(path);
}

TEST(BindAddress, Parse) {
  EXPECT_EQ(parse_bind_address("0.0.0.0:9000").host, "0.0.0.0");
  EXPECT_EQ(parse_bind_address(":9000").port, 9000);
  EXPECT_EQ(parse_bind_address("9001").port, 9001);
  EXPECT_EQ(parse_bind_address("9001").host, "127.0.0.1");
  EXPECT_THROW(parse_bind_address("host:port"), Error);
  EXPECT_THROW(parse_bind_address("70000"), Error);
}

TEST(ApiServer, LiveRoundTrip) {
  auto store = std::make_shared<CorpusStore>(ingested_corpus());
  ApiServer server(std::make_shared<ApiService>(store));
  const int port = server.bind({"127.0.0.1", 0});
  ASSERT_GT(port, 0);
  server.start();

  httplib::Client client("127.0.0.1", port);
  auto missing = client.Get("/records/D424242");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(Json::parse(missing->body)["error"]["code"], "not_found");
  EXPECT_TRUE(missing->has_header("X-Snapshot-Version"));

  auto put = client.Put("/records/D000001/annotation", read_test_file("annotation.json"), "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 200);
  const auto written = std::stoull(put->get_header_value("X-Snapshot-Version"));

  auto get = client.Get("/records/D000001");
  ASSERT_TRUE(get);
  EXPECT_GE(std::stoull(get->get_header_value("X-Snapshot-Version")), written);
  EXPECT_EQ(Json::parse(get->body)["payload"]["curation_status"], "Annotated");

  auto report = client.Get("/reports/years?format=csv");
  ASSERT_TRUE(report);
  EXPECT_EQ(report->status, 422);  // nothing validated yet

  server.stop();
}

TEST(ApiServer, BindFailure) {
  ApiServer a(std::make_shared<ApiService>(std::make_shared<CorpusStore>()));
  const int port = a.bind({"127.0.0.1", 0});
  ApiServer b(std::make_shared<ApiService>(std::make_shared<CorpusStore>()));
  try {
    b.bind({"127.0.0.1", port});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BindFailure);
  }
}
