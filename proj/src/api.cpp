#include "litmon/api.hpp"

#include <charconv>

#include "httplib.h"
#include "litmon/corpus_io.hpp"
#include "litmon/filter.hpp"
#include "litmon/reports.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

std::string snake_case(std::string_view camel) {
  std::string out;
  for (char c : camel) {
    if (c >= 'A' && c <= 'Z') {
      if (!out.empty()) out += '_';
      out += static_cast<char>(c - 'A' + 'a');
    } else {
      out += c;
    }
  }
  return out;
}

Json issues_json(const std::vector<ValidationIssue>& issues) {
  Json arr = Json::array();
  for (const auto& i : issues) arr.push_back(to_json(i));
  return arr;
}

ApiResponse ok(std::uint64_t snapshot, Json payload, const std::vector<ValidationIssue>& issues = {}) {
  Json doc;
  doc["status"] = "ok";
  doc["snapshot"] = snapshot;
  doc["payload"] = std::move(payload);
  doc["issues"] = issues_json(issues);
  return {200, "application/json", doc.dump(), snapshot};
}

ApiResponse failure(int status, std::uint64_t snapshot, std::string_view code, std::string_view message) {
  Json doc;
  doc["status"] = "error";
  doc["snapshot"] = snapshot;
  doc["error"] = {{"code", code}, {"message", message}};
  doc["issues"] = Json::array();
  return {status, "application/json", doc.dump(), snapshot};
}

std::vector<std::string> path_segments(std::string_view path) {
  std::vector<std::string> out;
  for (auto& s : text::split(path, '/')) {
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

int parse_depth(const std::map<std::string, std::string>& query) {
  auto it = query.find("depth");
  if (it == query.end()) return 1;
  int depth = 0;
  const auto& v = it->second;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), depth);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw Error(ErrorCode::InvalidArgument, "depth must be an integer, got '" + v + "'");
  }
  return depth;
}

Json decision_json(const InclusionDecision& d) {
  Json j;
  j["record_id"] = d.record_id;
  j["verdict"] = to_string(d.verdict);
  Json criteria = Json::array();
  for (auto c : d.satisfied_criteria) criteria.push_back(to_string(c));
  j["satisfied_criteria"] = std::move(criteria);
  if (!d.reason.empty()) j["reason"] = d.reason;
  return j;
}

std::vector<ValidationIssue> issues_for(const Corpus& corpus, const FosTable& fos, std::string_view record_id) {
  std::vector<ValidationIssue> out;
  for (auto& i : quality_check(corpus, fos)) {
    if (i.record_id == record_id) out.push_back(std::move(i));
  }
  return out;
}

}  // namespace

std::string_view api_error_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
    case ErrorCode::UnknownRecord:
    case ErrorCode::UnknownEntity:
      return "not_found";
    default:
      break;
  }
  static const auto codes = [] {
    std::map<ErrorCode, std::string> m;
    for (int i = 0; i <= static_cast<int>(ErrorCode::BindFailure); ++i) {
      auto c = static_cast<ErrorCode>(i);
      m[c] = snake_case(to_string(c));
    }
    return m;
  }();
  return codes.at(code);
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
    case ErrorCode::UnknownRecord:
    case ErrorCode::UnknownEntity:
      return 404;
    case ErrorCode::DuplicateShortName:
    case ErrorCode::EntityInUse:
    case ErrorCode::DanglingLink:
      return 409;
    case ErrorCode::VocabularyViolation:
    case ErrorCode::EmptyCorpus:
    case ErrorCode::MissingOrdinal:
      return 422;
    case ErrorCode::ServiceUnavailable:
      return 503;
    case ErrorCode::MalformedResponse:
      return 502;
    case ErrorCode::IoFailure:
    case ErrorCode::BindFailure:
      return 500;
    default:
      return 400;
  }
}

ApiService::ApiService(std::shared_ptr<CorpusStore> store, std::optional<std::filesystem::path> corpus_path,
                       const FosTable& fos)
    : store_(std::move(store)), corpus_path_(std::move(corpus_path)), fos_(&fos) {}

void ApiService::persist(const Corpus& corpus) {
  if (corpus_path_) save_corpus_file(*corpus_path_, corpus);
}

ApiResponse ApiService::handle(const ApiRequest& request) {
  try {
    return dispatch(request);
  } catch (const Error& e) {
    return failure(http_status(e.code()), store_->version(), api_error_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure(400, store_->version(), "invalid_argument", std::string("malformed JSON body: ") + e.what());
  } catch (const std::exception& e) {
    return failure(500, store_->version(), "internal", e.what());
  }
}

ApiResponse ApiService::dispatch(const ApiRequest& request) {
  const auto seg = path_segments(request.path);
  const auto& m = request.method;
  auto no_route = [&] {
    return failure(404, store_->version(), "not_found", "no route for " + m + " " + request.path);
  };
  auto wrong_method = [&] {
    return failure(405, store_->version(), "method_not_allowed", m + " is not supported on " + request.path);
  };
  if (seg.empty()) return no_route();

  if (seg[0] == "records") {
    if (seg.size() == 1) {
      if (m != "GET") return wrong_method();
      auto [snap, version] = store_->versioned_snapshot();
      auto it = request.query.find("filter");
      auto filter = FilterExpr::parse(it == request.query.end() ? std::string_view{} : std::string_view(it->second));
      Json records = Json::array();
      for (const auto* r : query(*snap, filter)) records.push_back(to_json(*r));
      Json payload;
      payload["filter"] = filter.to_string();
      payload["count"] = records.size();
      payload["records"] = std::move(records);
      return ok(version, std::move(payload));
    }
    const std::string& id = seg[1];
    if (seg.size() == 2) {
      if (m != "GET") return wrong_method();
      auto [snap, version] = store_->versioned_snapshot();
      const auto* r = snap->find_record(id);
      if (!r) throw Error(ErrorCode::UnknownRecord, "unknown record '" + id + "'");
      return ok(version, to_json(*r));
    }
    if (seg.size() == 3 && seg[2] == "annotation") {
      if (m != "PUT") return wrong_method();
      auto annotation = parse_annotation(std::string_view(request.body), *fos_);
      if (annotation.curator.empty()) annotation.curator = "api";
      auto [record, issues] = store_->mutate([&](Corpus& c) {
        auto rec = apply_annotation(c, id, annotation.usage, annotation.context, annotation.curator);
        auto found = issues_for(c, *fos_, id);
        persist(c);
        return std::pair{std::move(rec), std::move(found)};
      });
      return ok(store_->version(), to_json(record), issues);
    }
    if (seg.size() == 3 && seg[2] == "gate") {
      if (m != "POST") return wrong_method();
      std::optional<Annotation> annotation;
      if (!text::trim(request.body).empty()) {
        annotation = parse_annotation(std::string_view(request.body), *fos_);
        if (annotation->curator.empty()) annotation->curator = "api";
      }
      auto [outcome, record] = store_->mutate([&](Corpus& c) {
        if (annotation) apply_annotation(c, id, annotation->usage, annotation->context, annotation->curator);
        auto result = apply_gate(c, id);
        persist(c);
        return std::pair{std::move(result), *c.find_record(id)};
      });
      Json payload;
      payload["decision"] = decision_json(outcome.decision);
      payload["curation_status"] = to_string(outcome.status);
      payload["record"] = to_json(record);
      return ok(store_->version(), std::move(payload), outcome.issues);
    }
    return no_route();
  }

  if (seg[0] == "entities" && seg.size() == 3 && seg[2] == "neighborhood") {
    if (m != "GET") return wrong_method();
    auto [snap, version] = store_->versioned_snapshot();
    return ok(version, to_json(snap->neighborhood(seg[1], parse_depth(request.query))));
  }

  if (seg[0] == "reports" && seg.size() == 2) {
    if (m != "GET") return wrong_method();
    auto [snap, version] = store_->versioned_snapshot();
    ReportParams params(request.query.begin(), request.query.end());
    auto report = render_report(*snap, seg[1], params);
    return {200, report.content_type, std::move(report.body), version};
  }

  if (seg[0] == "qc" && seg.size() == 1) {
    if (m != "GET") return wrong_method();
    auto minimum = Severity::Info;
    if (auto it = request.query.find("severity"); it != request.query.end()) {
      auto parsed = try_parse_enum<Severity>(it->second);
      if (!parsed) throw Error(ErrorCode::InvalidArgument, "unknown severity '" + it->second + "'");
      minimum = *parsed;
    }
    auto [snap, version] = store_->versioned_snapshot();
    auto issues = filter_severity(quality_check(*snap, *fos_), minimum);
    Json counts = Json::object();
    for (auto s : all_enum_values<Severity>()) counts[std::string(to_string(s))] = 0;
    for (const auto& i : issues) counts[std::string(to_string(i.severity))] = counts[std::string(to_string(i.severity))].get<int>() + 1;
    Json payload;
    payload["records"] = snap->records().size();
    payload["counts"] = std::move(counts);
    return ok(version, std::move(payload), issues);
  }

  return no_route();
}

ServeOptions parse_bind_address(std::string_view text) {
  ServeOptions options;
  auto t = text::trim(text);
  auto colon = t.rfind(':');
  std::string_view port_text = t;
  if (colon != std::string_view::npos) {
    if (colon > 0) options.host = std::string(t.substr(0, colon));
    port_text = t.substr(colon + 1);
  }
  int port = -1;
  auto [p, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || p != port_text.data() + port_text.size() || port < 0 || port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "invalid bind address '" + std::string(text) + "'");
  }
  options.port = port;
  return options;
}

ApiServer::ApiServer(std::shared_ptr<ApiService> service)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.query.insert_or_assign(k, v);
    request.body = req.body;
    auto response = service_->handle(request);
    res.status = response.status;
    res.set_header("X-Snapshot-Version", std::to_string(response.snapshot));
    res.set_content(response.body, response.content_type);
  };
  // SO_REUSEADDR only: with SO_REUSEPORT a second server could silently
  // share a port that is already in use.
  server_->set_socket_options([](auto sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
  });
  server_->Get(".*", handler);
  server_->Put(".*", handler);
  server_->Post(".*", handler);
  server_->Delete(".*", handler);
  server_->Patch(".*", handler);
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const ServeOptions& options) {
  if (options.port == 0) {
    port_ = server_->bind_to_any_port(options.host);
    if (port_ < 0) throw Error(ErrorCode::BindFailure, "cannot bind " + options.host);
  } else {
    if (!server_->bind_to_port(options.host, options.port)) {
      throw Error(ErrorCode::BindFailure, "cannot bind " + options.host + ":" + std::to_string(options.port));
    }
    port_ = options.port;
  }
  return port_;
}

void ApiServer::run() { server_->listen_after_bind(); }

void ApiServer::start() {
  thread_ = std::thread([this] { run(); });
  server_->wait_until_ready();
}

void ApiServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace litmon
