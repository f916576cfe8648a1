#include "litmon/metadata_client.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#ifdef LITMON_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"
#include "json.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

using Json = nlohmann::json;

std::string percent_encode(std::string_view s, bool keep_slash) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '.' || c == '-' || c == '_' || c == '~' || (keep_slash && c == '/')) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::optional<std::string> string_field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  // Crossref wraps titles and container titles in arrays.
  if (it->is_array() && !it->empty() && it->front().is_string()) return it->front().get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  return std::nullopt;
}

std::optional<ResourceType> map_type(std::string_view raw) {
  if (auto t = try_parse_enum<ResourceType>(raw)) return t;
  auto t = text::to_lower_ascii(raw);
  if (t == "journal-article" || t == "article" || t == "review-article") return ResourceType::ReviewedPaper;
  if (t == "proceedings-article" || t == "proceedings" || t == "conference-paper") {
    return ResourceType::ConferenceProceedings;
  }
  if (t == "dissertation" || t == "thesis") return ResourceType::Thesis;
  if (t == "report" || t == "report-component" || t == "white-paper") return ResourceType::TechnicalReportWhitePaper;
  if (t == "standard" || t == "patent") return ResourceType::StandardPatent;
  return std::nullopt;
}

void read_authors(const Json& j, IntrinsicRecord& r) {
  auto add_affiliations = [&](const Json& list, std::size_t index) {
    if (!list.is_array()) return;
    for (const auto& a : list) {
      std::optional<std::string> raw;
      if (a.is_string()) raw = a.get<std::string>();
      else if (a.is_object()) raw = string_field(a, "name");
      if (raw && !text::trim(*raw).empty()) r.affiliations.push_back({index, text::collapse_whitespace(*raw)});
    }
  };

  if (auto it = j.find("authors"); it != j.end() && it->is_array()) {
    for (const auto& a : *it) {
      std::optional<std::string> name;
      if (a.is_string()) name = a.get<std::string>();
      else if (a.is_object()) name = string_field(a, "name");
      if (!name || text::trim(*name).empty()) continue;
      r.authors.push_back(text::collapse_whitespace(*name));
      if (a.is_object()) {
        if (auto aff = a.find("affiliations"); aff != a.end()) add_affiliations(*aff, r.authors.size() - 1);
      }
    }
    return;
  }
  if (auto it = j.find("author"); it != j.end() && it->is_array()) {
    for (const auto& a : *it) {
      if (!a.is_object()) continue;
      auto family = string_field(a, "family");
      auto given = string_field(a, "given");
      std::string name;
      if (family && given) name = *family + ", " + *given;
      else if (family) name = *family;
      else if (auto n = string_field(a, "name")) name = *n;
      name = text::collapse_whitespace(name);
      if (name.empty()) continue;
      r.authors.push_back(name);
      if (auto aff = a.find("affiliation"); aff != a.end()) add_affiliations(*aff, r.authors.size() - 1);
    }
  }
}

}  // namespace

ResolvedRecord map_metadata_response(std::string_view body) {
  Json j = Json::parse(body.begin(), body.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::MalformedResponse, "metadata response is not a JSON object");
  }
  if (auto it = j.find("message"); it != j.end() && it->is_object()) {
    Json inner = *it;
    j = std::move(inner);
  }

  ResolvedRecord out;
  auto& r = out.record;
  r.raw_source = SourceFormat::DoiService;
  r.title = text::collapse_whitespace(string_field(j, "title").value_or(""));
  r.doi = string_field(j, "doi");
  if (!r.doi) r.doi = string_field(j, "DOI");
  r.source_key = r.doi.value_or("");

  if (auto it = j.find("year"); it != j.end()) {
    if (it->is_number_integer()) r.year = it->get<int>();
    else if (it->is_string()) {
      try {
        r.year = std::stoi(it->get<std::string>());
      } catch (const std::exception&) {
      }
    }
  }
  for (const char* key : {"issued", "published", "published-print", "published-online"}) {
    if (r.year) break;
    auto it = j.find(key);
    if (it == j.end() || !it->is_object()) continue;
    auto parts = it->find("date-parts");
    if (parts == it->end() || !parts->is_array() || parts->empty() || !parts->front().is_array()) continue;
    const auto& first = parts->front();
    if (!first.empty() && first[0].is_number_integer()) r.year = first[0].get<int>();
    if (first.size() > 1 && first[1].is_number_integer()) r.month = first[1].get<int>();
  }
  if (auto m = j.find("month"); m != j.end() && m->is_number_integer()) r.month = m->get<int>();

  r.venue = text::collapse_whitespace(string_field(j, "venue").value_or(string_field(j, "container-title").value_or("")));
  if (auto t = string_field(j, "type")) r.resource_type_hint = map_type(*t);
  r.publisher = string_field(j, "publisher");
  r.volume = string_field(j, "volume");
  r.issue = string_field(j, "issue");
  r.abstract = string_field(j, "abstract");
  r.language = string_field(j, "language").value_or("");
  r.url = string_field(j, "url");
  if (!r.url) r.url = string_field(j, "URL");
  for (const char* key : {"keywords", "subject"}) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_array()) continue;
    for (const auto& k : *it) {
      if (k.is_string() && !text::trim(k.get<std::string>()).empty()) r.keywords.push_back(k.get<std::string>());
    }
    break;
  }
  read_authors(j, r);

  auto warn = [&](std::string_view code, std::string message) {
    out.issues.push_back({r.doi.value_or(""), Severity::Warning, std::string(code), std::move(message)});
  };
  if (r.authors.empty()) warn(issue_code::kMissingAuthors, "metadata response lists no authors");
  if (r.title.empty()) warn(issue_code::kMissingTitle, "metadata response has no title");
  if (!r.year) warn(issue_code::kMissingYear, "metadata response has no publication year");
  return out;
}

std::string doi_fixture_name(std::string_view doi) {
  auto normalized = normalize_doi(doi);
  return percent_encode(normalized ? *normalized : std::string(doi), false) + ".json";
}

struct MetadataClient::State {
  bool offline = false;
  std::filesystem::path fixture_dir;
  ClientOptions options;
  HttpGet transport;
  std::string host;         // scheme://host[:port]
  std::string path_prefix;  // "/works/"

  std::mutex pacing_mutex;
  std::map<std::string, std::chrono::steady_clock::time_point> next_slot;

  void wait_turn() {
    std::chrono::steady_clock::time_point slot;
    {
      std::lock_guard lock(pacing_mutex);
      auto now = std::chrono::steady_clock::now();
      auto& next = next_slot[host];
      slot = std::max(now, next);
      next = slot + options.min_interval;
    }
    std::this_thread::sleep_until(slot);
  }
};

namespace {

HttpGet httplib_transport(const ClientOptions& options) {
  return [options](const std::string& host, const std::string& path) -> HttpReply {
    httplib::Client client(host);
    client.set_connection_timeout(options.timeout);
    client.set_read_timeout(options.timeout);
    client.set_follow_location(true);
    httplib::Headers headers = {{"User-Agent", options.user_agent}, {"Accept", "application/json"}};
    auto res = client.Get(path, headers);
    if (!res) return {0, {}};
    return {res->status, res->body};
  };
}

}  // namespace

MetadataClient MetadataClient::live(ClientOptions options) {
  auto transport = httplib_transport(options);
  return live(std::move(options), std::move(transport));
}

MetadataClient MetadataClient::live(ClientOptions options, HttpGet transport) {
  auto state = std::make_shared<State>();
  const auto& url = options.base_url;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw Error(ErrorCode::InvalidArgument, "base URL needs a scheme: " + url);
  auto path_start = url.find('/', scheme_end + 3);
  state->host = url.substr(0, path_start);
  state->path_prefix = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (state->path_prefix.back() != '/') state->path_prefix += '/';
  if (options.max_attempts < 1) options.max_attempts = 1;
  if (options.max_in_flight < 1) options.max_in_flight = 1;
  state->options = std::move(options);
  state->transport = std::move(transport);
  return MetadataClient(std::move(state));
}

MetadataClient MetadataClient::offline(std::filesystem::path fixture_dir) {
  auto state = std::make_shared<State>();
  state->offline = true;
  state->fixture_dir = std::move(fixture_dir);
  return MetadataClient(std::move(state));
}

bool MetadataClient::is_offline() const { return state_->offline; }

ResolvedRecord MetadataClient::resolve(std::string_view raw_doi) const {
  auto doi = normalize_doi(raw_doi);
  if (!doi) throw Error(ErrorCode::InvalidArgument, "malformed DOI '" + std::string(raw_doi) + "'");

  if (state_->offline) {
    auto path = state_->fixture_dir / doi_fixture_name(*doi);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "no recorded response for " + *doi);
    std::ostringstream body;
    body << in.rdbuf();
    return map_metadata_response(body.str());
  }

  const auto& opt = state_->options;
  const std::string path = state_->path_prefix + percent_encode(*doi, true);
  auto backoff = opt.initial_backoff;
  std::string last_problem;
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    state_->wait_turn();
    HttpReply reply = state_->transport(state_->host, path);
    if (reply.status == 200) return map_metadata_response(reply.body);
    if (reply.status == 404) throw Error(ErrorCode::NotFound, "DOI " + *doi + " is not registered with the service");
    const bool transient = reply.status == 0 || reply.status == 429 || reply.status >= 500;
    last_problem = reply.status == 0 ? "connection failed" : "HTTP " + std::to_string(reply.status);
    if (!transient) break;
    if (attempt < opt.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(backoff * 2, opt.max_backoff);
    }
  }
  throw Error(ErrorCode::ServiceUnavailable, "metadata service failed for " + *doi + ": " + last_problem);
}

std::vector<BatchResult> MetadataClient::resolve_all(std::span<const std::string> dois) const {
  std::vector<BatchResult> results(dois.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dois.size(); i = next++) {
      results[i].doi = dois[i];
      try {
        results[i].resolved = resolve(dois[i]);
      } catch (const Error& e) {
        results[i].error = e.code();
        results[i].message = e.what();
      }
    }
  };
  const std::size_t limit = state_->offline ? 1 : state_->options.max_in_flight;
  const std::size_t threads = std::min(limit, dois.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace litmon
