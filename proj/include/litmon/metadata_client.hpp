#pragma once

// DOI metadata lookups. All network access of the ingest path goes through
// MetadataClient; the offline mode replays recorded responses from a
// directory so that runs are reproducible.

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/model.hpp"

namespace litmon {

struct ResolvedRecord {
  IntrinsicRecord record;
  std::vector<ValidationIssue> issues;  // partial metadata warnings
};

/// Maps a metadata response body to an IntrinsicRecord. The accepted
/// fields are a small provider-neutral subset:
///
///   doi, title, year | issued.date-parts, venue | container-title,
///   type, authors[{name, affiliations[]}] | author[{given, family,
///   affiliation[{name}]}], publisher, volume, issue, abstract,
///   keywords | subject, language, url | URL
///
/// A body of the form {"message": {...}} is unwrapped first. Throws
/// MalformedResponse when the body is not a JSON object.
ResolvedRecord map_metadata_response(std::string_view body);

/// File name of a recorded response: the normalized DOI, percent-encoded,
/// plus ".json" ("10.1016/j.x" -> "10.1016%2Fj.x.json").
std::string doi_fixture_name(std::string_view doi);

struct HttpReply {
  int status = 0;  // 0 when the connection failed
  std::string body;
};

/// Issues one GET for a DOI. Replaceable for tests.
using HttpGet = std::function<HttpReply(const std::string& host, const std::string& path)>;

struct ClientOptions {
  std::string base_url = "https://api.crossref.org/works/";
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{2000};
  /// Minimum spacing between two requests to the same host.
  std::chrono::milliseconds min_interval{100};
  std::size_t max_in_flight = 4;
  std::chrono::seconds timeout{20};
  std::string user_agent = "litmon/0.1";
};

struct BatchResult {
  std::string doi;
  std::optional<ResolvedRecord> resolved;
  std::optional<ErrorCode> error;
  std::string message;
};

class MetadataClient {
 public:
  static MetadataClient live(ClientOptions options = {});
  static MetadataClient live(ClientOptions options, HttpGet transport);
  static MetadataClient offline(std::filesystem::path fixture_dir);

  /// Throws InvalidArgument for a malformed DOI, NotFound, ServiceUnavailable
  /// (after retries) or MalformedResponse.
  ResolvedRecord resolve(std::string_view doi) const;

  /// Resolves many DOIs with at most `max_in_flight` concurrent requests.
  /// Results are in input order.
  std::vector<BatchResult> resolve_all(std::span<const std::string> dois) const;

  bool is_offline() const;

 private:
  struct State;
  explicit MetadataClient(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// resolve() against a client, i.e. the record for one DOI.
inline ResolvedRecord resolve_doi(std::string_view doi, const MetadataClient& client) { return client.resolve(doi); }

}  // namespace litmon
