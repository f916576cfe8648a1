#pragma once

// HTTP interface over a CorpusStore.
//
//   GET  /records?filter=...              records matching a filter expression
//   GET  /records/{id}                    one record
//   PUT  /records/{id}/annotation         annotation document (see parse_annotation)
//   POST /records/{id}/gate               inclusion gate; optional annotation body
//   GET  /entities/{id}/neighborhood?depth=n
//   GET  /reports/{name}?params           report bytes, as render_report
//   GET  /qc?severity=error|warning|info  quality check
//
// Every response except /reports is an envelope:
//
//   {"status":"ok","snapshot":7,"payload":...,"issues":[...]}
//   {"status":"error","snapshot":7,"error":{"code":"not_found","message":"..."},"issues":[]}
//
// /reports returns the report body unchanged so that it matches the CLI
// output byte for byte; the snapshot version travels in the
// X-Snapshot-Version header, which every response carries.

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "litmon/corpus.hpp"
#include "litmon/curation.hpp"

namespace httplib {
class Server;
}

namespace litmon {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::uint64_t snapshot = 0;
};

/// Machine-readable code of an error envelope ("not_found", ...).
std::string_view api_error_code(ErrorCode code);
int http_status(ErrorCode code);

/// Request dispatch without a socket; the server below is a thin adapter.
class ApiService {
 public:
  /// When `corpus_path` is set, every successful write rewrites that file.
  explicit ApiService(std::shared_ptr<CorpusStore> store, std::optional<std::filesystem::path> corpus_path = {},
                      const FosTable& fos = FosTable::bundled());

  ApiResponse handle(const ApiRequest& request);
  CorpusStore& store() { return *store_; }

 private:
  ApiResponse dispatch(const ApiRequest& request);
  void persist(const Corpus& corpus);

  std::shared_ptr<CorpusStore> store_;
  std::optional<std::filesystem::path> corpus_path_;
  const FosTable* fos_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
};

/// "host:port", ":port" or "port". Throws InvalidArgument.
ServeOptions parse_bind_address(std::string_view text);

class ApiServer {
 public:
  explicit ApiServer(std::shared_ptr<ApiService> service);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds the socket and returns the port. Throws BindFailure.
  int bind(const ServeOptions& options);
  /// Serves until stop(); bind() first.
  void run();
  /// run() on a background thread.
  void start();
  void stop();
  int port() const { return port_; }

 private:
  std::shared_ptr<ApiService> service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace litmon
