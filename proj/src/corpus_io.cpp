#include "litmon/corpus_io.hpp"

#include <fstream>
#include <sstream>

namespace litmon {

namespace {

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

std::string get_string(const Json& j, const char* key, std::string fallback = {}) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_string()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::string> get_optional_string(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<int> get_optional_int(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

std::vector<std::string> get_strings(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_array()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

bool get_bool(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return false;
  if (!it->is_boolean()) throw Error(ErrorCode::InvalidRecord, std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

template <class E>
E get_enum(const Json& j, const char* key, E fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_string()) throw Error(ErrorCode::InvalidEnumValue, std::string("field '") + key + "' must be a name");
  return parse_enum<E>(it->get<std::string>());
}

template <class E>
std::optional<E> get_optional_enum(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(ErrorCode::InvalidEnumValue, std::string("field '") + key + "' must be a name");
  return parse_enum<E>(it->get<std::string>());
}

std::vector<Link> get_links(const Json& j, const char* key) {
  std::vector<Link> out;
  if (auto it = j.find(key); it != j.end() && it->is_array()) {
    for (const auto& v : *it) out.push_back(link_from_json(v));
  }
  return out;
}

Json links_json(const std::vector<Link>& links) {
  Json arr = Json::array();
  for (const auto& l : links) arr.push_back(to_json(l));
  return arr;
}

void require_object(const Json& j, std::string_view what) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidRecord, std::string(what) + " must be an object");
}

Json meta_json(const CorpusMeta& meta) {
  Json j;
  j["type"] = "header";
  j["format"] = kCorpusFormat;
  j["version"] = kCorpusFormatVersion;
  if (meta.collection_cutoff) j["collection_cutoff"] = format_year_month(*meta.collection_cutoff);
  j["year_min"] = meta.year_min;
  put_optional(j, "year_max", meta.year_max);
  return j;
}

CorpusMeta meta_from_json(const Json& j) {
  CorpusMeta meta;
  if (auto cutoff = get_optional_string(j, "collection_cutoff")) {
    meta.collection_cutoff = parse_year_month(*cutoff);
    if (!meta.collection_cutoff) throw Error(ErrorCode::InvalidRecord, "collection_cutoff must be YYYY-MM");
  }
  meta.year_min = get_optional_int(j, "year_min").value_or(1990);
  meta.year_max = get_optional_int(j, "year_max");
  return meta;
}

Json section(std::string_view name) {
  Json j;
  j["type"] = "section";
  j["name"] = name;
  return j;
}

}  // namespace

// --- encoders ----------------------------------------------------------------

Json to_json(const Link& link) {
  Json j;
  j["from"] = link.from_id;
  j["to"] = link.to_id;
  j["link_type"] = to_string(link.link_type);
  put_optional(j, "ordinal", link.ordinal);
  return j;
}

Json to_json(const UsageDescriptor& usage) {
  Json j;
  if (usage.principal_product) j["principal_product"] = to_string(*usage.principal_product);
  put_optional(j, "product_version", usage.product_version);
  j["sub_products"] = usage.sub_products;
  j["usage_context"] = to_string(usage.usage_context);
  Json tools = Json::array();
  for (const auto& t : usage.coupled_tools) {
    Json tj;
    tj["tool"] = to_string(t.kind);
    tj["label"] = t.raw_label;
    tools.push_back(std::move(tj));
  }
  j["coupled_tools"] = std::move(tools);
  Json flags;
  flags["data_source"] = usage.flags.data_source;
  flags["materials_selection"] = usage.flags.materials_selection;
  flags["process_selection"] = usage.flags.process_selection;
  flags["charts"] = usage.flags.charts;
  flags["eco_audit"] = usage.flags.eco_audit;
  flags["synthesizer"] = usage.flags.synthesizer;
  j["flags"] = std::move(flags);
  return j;
}

Json to_json(const ApplicationContext& context) {
  Json j;
  j["raw_field_labels"] = context.raw_field_labels;
  if (context.fos_field) j["fos_field"] = context.fos_field->id();
  j["research_segment"] = to_string(context.research_segment);
  Json families = Json::array();
  for (auto f : context.material_families) families.push_back(to_string(f));
  j["material_families"] = std::move(families);
  j["process_families"] = context.process_families;
  if (context.scope_depth) j["scope_depth"] = to_string(*context.scope_depth);
  put_optional(j, "notes", context.notes);
  return j;
}

Json to_json(const IntrinsicRecord& r) {
  Json j;
  j["source_key"] = r.source_key;
  j["title"] = r.title;
  put_optional(j, "year", r.year);
  put_optional(j, "month", r.month);
  if (r.resource_type_hint) j["resource_type_hint"] = to_string(*r.resource_type_hint);
  j["venue"] = r.venue;
  put_optional(j, "volume", r.volume);
  put_optional(j, "issue", r.issue);
  put_optional(j, "publisher", r.publisher);
  put_optional(j, "abstract", r.abstract);
  j["keywords"] = r.keywords;
  j["language"] = r.language;
  put_optional(j, "doi", r.doi);
  put_optional(j, "url", r.url);
  j["authors"] = r.authors;
  Json affs = Json::array();
  for (const auto& a : r.affiliations) {
    Json aj;
    if (a.author_index) aj["author_index"] = *a.author_index;
    aj["raw"] = a.raw;
    affs.push_back(std::move(aj));
  }
  j["affiliations"] = std::move(affs);
  j["raw_source"] = to_string(r.raw_source);
  return j;
}

Json to_json(const DocumentRecord& r) {
  Json j;
  j["record_id"] = r.record_id;
  j["short_name"] = r.short_name;
  j["title"] = r.title;
  put_optional(j, "year", r.year);
  j["resource_type"] = to_string(r.resource_type);
  j["venue"] = r.venue;
  put_optional(j, "volume", r.volume);
  put_optional(j, "issue", r.issue);
  put_optional(j, "publisher", r.publisher);
  put_optional(j, "abstract", r.abstract);
  j["keywords"] = r.keywords;
  j["language"] = r.language;
  put_optional(j, "doi", r.doi);
  put_optional(j, "url", r.url);
  put_optional(j, "local_path", r.local_path);
  j["cited_references"] = r.cited_references;
  j["author_links"] = links_json(r.author_links);
  j["institution_links"] = links_json(r.institution_links);
  j["country_links"] = links_json(r.country_links);
  j["product_links"] = links_json(r.product_links);
  j["field_links"] = links_json(r.field_links);
  if (r.usage) j["usage"] = to_json(*r.usage);
  if (r.application) j["application"] = to_json(*r.application);
  j["curation_status"] = to_string(r.curation_status);
  if (r.source) j["source"] = to_json(*r.source);
  return j;
}

Json to_json(const EntityRecord& e) {
  Json j;
  j["entity_id"] = e.entity_id;
  j["kind"] = to_string(e.kind);
  j["display_name"] = e.display_name;
  j["canonical_key"] = e.canonical_key;
  Json attrs = Json::object();
  for (const auto& [k, v] : e.attributes) attrs[k] = v;
  j["attributes"] = std::move(attrs);
  return j;
}

Json to_json(const ValidationIssue& issue) {
  Json j;
  j["record_id"] = issue.record_id;
  j["severity"] = to_string(issue.severity);
  j["code"] = issue.code;
  j["message"] = issue.message;
  return j;
}

Json to_json(const AuditEntry& e) {
  Json j;
  j["record_id"] = e.record_id;
  j["curator"] = e.curator;
  j["timestamp"] = e.timestamp;
  j["usage"] = to_json(e.usage);
  j["context"] = to_json(e.context);
  return j;
}

Json to_json(const Subgraph& graph) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    Json nj;
    nj["id"] = n.id;
    nj["kind"] = to_string(n.kind);
    nj["label"] = n.label;
    nj["canonical_key"] = n.canonical_key;
    nj["distance"] = n.distance;
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  j["links"] = links_json(graph.links);
  return j;
}

// --- decoders ----------------------------------------------------------------

Link link_from_json(const Json& j) {
  require_object(j, "link");
  Link l;
  l.from_id = get_string(j, "from");
  l.to_id = get_string(j, "to");
  l.link_type = get_enum(j, "link_type", LinkType::AuthoredBy);
  l.ordinal = get_optional_int(j, "ordinal");
  return l;
}

UsageDescriptor usage_from_json(const Json& j) {
  require_object(j, "usage");
  UsageDescriptor u;
  u.principal_product = get_optional_enum<Product>(j, "principal_product");
  u.product_version = get_optional_string(j, "product_version");
  u.sub_products = get_strings(j, "sub_products");
  u.usage_context = get_enum(j, "usage_context", UsageContext::AcademicResearch);
  if (auto it = j.find("coupled_tools"); it != j.end() && it->is_array()) {
    for (const auto& t : *it) {
      CoupledTool tool;
      tool.kind = get_enum(t, "tool", ToolKind::Other);
      tool.raw_label = get_string(t, "label");
      u.coupled_tools.push_back(std::move(tool));
    }
  }
  if (auto it = j.find("flags"); it != j.end() && it->is_object()) {
    u.flags.data_source = get_bool(*it, "data_source");
    u.flags.materials_selection = get_bool(*it, "materials_selection");
    u.flags.process_selection = get_bool(*it, "process_selection");
    u.flags.charts = get_bool(*it, "charts");
    u.flags.eco_audit = get_bool(*it, "eco_audit");
    u.flags.synthesizer = get_bool(*it, "synthesizer");
  }
  return u;
}

ApplicationContext context_from_json(const Json& j) {
  require_object(j, "application");
  ApplicationContext c;
  c.raw_field_labels = get_strings(j, "raw_field_labels");
  if (auto id = get_optional_string(j, "fos_field")) {
    c.fos_field = FosField::from_id(*id);
    if (!c.fos_field) throw Error(ErrorCode::InvalidEnumValue, "unknown FOS field '" + *id + "'");
  }
  c.research_segment = get_enum(j, "research_segment", ResearchSegment::Academia);
  for (const auto& name : get_strings(j, "material_families")) {
    c.material_families.push_back(parse_enum<MaterialFamily>(name));
  }
  c.process_families = get_strings(j, "process_families");
  c.scope_depth = get_optional_enum<ScopeDepth>(j, "scope_depth");
  c.notes = get_optional_string(j, "notes");
  return c;
}

IntrinsicRecord intrinsic_from_json(const Json& j) {
  require_object(j, "intrinsic record");
  IntrinsicRecord r;
  r.source_key = get_string(j, "source_key");
  r.title = get_string(j, "title");
  r.year = get_optional_int(j, "year");
  r.month = get_optional_int(j, "month");
  r.resource_type_hint = get_optional_enum<ResourceType>(j, "resource_type_hint");
  r.venue = get_string(j, "venue");
  r.volume = get_optional_string(j, "volume");
  r.issue = get_optional_string(j, "issue");
  r.publisher = get_optional_string(j, "publisher");
  r.abstract = get_optional_string(j, "abstract");
  r.keywords = get_strings(j, "keywords");
  r.language = get_string(j, "language");
  r.doi = get_optional_string(j, "doi");
  r.url = get_optional_string(j, "url");
  r.authors = get_strings(j, "authors");
  if (auto it = j.find("affiliations"); it != j.end() && it->is_array()) {
    for (const auto& a : *it) {
      Affiliation aff;
      if (auto idx = a.find("author_index"); idx != a.end() && idx->is_number_unsigned()) {
        aff.author_index = idx->get<std::size_t>();
      }
      aff.raw = get_string(a, "raw");
      r.affiliations.push_back(std::move(aff));
    }
  }
  r.raw_source = get_enum(j, "raw_source", SourceFormat::Manual);
  return r;
}

DocumentRecord document_from_json(const Json& j) {
  require_object(j, "document");
  DocumentRecord r;
  r.record_id = get_string(j, "record_id");
  r.short_name = get_string(j, "short_name");
  r.title = get_string(j, "title");
  r.year = get_optional_int(j, "year");
  r.resource_type = get_enum(j, "resource_type", ResourceType::ReviewedPaper);
  r.venue = get_string(j, "venue");
  r.volume = get_optional_string(j, "volume");
  r.issue = get_optional_string(j, "issue");
  r.publisher = get_optional_string(j, "publisher");
  r.abstract = get_optional_string(j, "abstract");
  r.keywords = get_strings(j, "keywords");
  r.language = get_string(j, "language", "en");
  r.doi = get_optional_string(j, "doi");
  r.url = get_optional_string(j, "url");
  r.local_path = get_optional_string(j, "local_path");
  r.cited_references = get_strings(j, "cited_references");
  r.author_links = get_links(j, "author_links");
  r.institution_links = get_links(j, "institution_links");
  r.country_links = get_links(j, "country_links");
  r.product_links = get_links(j, "product_links");
  r.field_links = get_links(j, "field_links");
  if (auto it = j.find("usage"); it != j.end() && !it->is_null()) r.usage = usage_from_json(*it);
  if (auto it = j.find("application"); it != j.end() && !it->is_null()) r.application = context_from_json(*it);
  r.curation_status = get_enum(j, "curation_status", CurationStatus::Ingested);
  if (auto it = j.find("source"); it != j.end() && !it->is_null()) r.source = intrinsic_from_json(*it);
  return r;
}

EntityRecord entity_from_json(const Json& j) {
  require_object(j, "entity");
  EntityRecord e;
  e.entity_id = get_string(j, "entity_id");
  e.kind = get_enum(j, "kind", EntityKind::Author);
  e.display_name = get_string(j, "display_name");
  e.canonical_key = get_string(j, "canonical_key");
  if (auto it = j.find("attributes"); it != j.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) {
      if (v.is_string()) e.attributes[k] = v.get<std::string>();
    }
  }
  return e;
}

AuditEntry audit_from_json(const Json& j) {
  require_object(j, "audit entry");
  AuditEntry e;
  e.record_id = get_string(j, "record_id");
  e.curator = get_string(j, "curator");
  e.timestamp = get_string(j, "timestamp");
  if (auto it = j.find("usage"); it != j.end()) e.usage = usage_from_json(*it);
  if (auto it = j.find("context"); it != j.end()) e.context = context_from_json(*it);
  return e;
}

// --- file format -------------------------------------------------------------

Json document_line(const DocumentRecord& record) {
  Json j;
  j["type"] = "document";
  const Json body = to_json(record);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json audit_line(const AuditEntry& entry) {
  Json j;
  j["type"] = "audit";
  const Json body = to_json(entry);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << meta_json(corpus.meta()).dump() << '\n';
  out << section("entities").dump() << '\n';
  for (const auto& [id, entity] : corpus.entities()) {
    Json j;
    j["type"] = "entity";
    const Json body = to_json(entity);
    for (auto& [k, v] : body.items()) j[k] = v;
    out << j.dump() << '\n';
  }
  for (const auto& link : corpus.entity_links()) {
    Json j;
    j["type"] = "entity_link";
    const Json body = to_json(link);
    for (auto& [k, v] : body.items()) j[k] = v;
    out << j.dump() << '\n';
  }
  out << section("documents").dump() << '\n';
  for (const auto& [id, record] : corpus.records()) out << document_line(record).dump() << '\n';
  for (const auto& entry : corpus.audit()) out << audit_line(entry).dump() << '\n';
}

std::string write_corpus(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

CorpusLoadResult read_corpus(std::istream& in) {
  CorpusLoadResult result;
  std::string line;
  std::size_t line_no = 0;
  auto issue = [&](const std::string& message) {
    result.issues.push_back(
        {"line:" + std::to_string(line_no), Severity::Error, "MalformedLine", message});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      issue(std::string("not a JSON object: ") + e.what());
      continue;
    }
    if (!j.is_object()) {
      issue("not a JSON object");
      continue;
    }
    const std::string type = j.value("type", "");
    try {
      if (type == "header") {
        if (j.value("format", "") != kCorpusFormat) issue("unknown corpus format");
        result.corpus.set_meta(meta_from_json(j));
      } else if (type == "section") {
        // informational
      } else if (type == "entity") {
        result.corpus.load_entity_unchecked(entity_from_json(j));
      } else if (type == "entity_link") {
        result.corpus.load_entity_link_unchecked(link_from_json(j));
      } else if (type == "document") {
        result.corpus.load_record_unchecked(document_from_json(j));
      } else if (type == "audit") {
        result.corpus.append_audit(audit_from_json(j));
      } else {
        issue("unknown line type '" + type + "'");
      }
    } catch (const Error& e) {
      issue(e.what());
    } catch (const nlohmann::json::exception& e) {
      issue(e.what());
    }
  }
  return result;
}

CorpusLoadResult read_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_corpus(in);
}

void save_corpus_file(const std::filesystem::path& path, const Corpus& corpus) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write '" + tmp.string() + "'");
    write_corpus(out, corpus);
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoFailure, "cannot replace '" + path.string() + "'");
  }
}

CorpusLoadResult load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read '" + path.string() + "'");
  return read_corpus(in);
}

void append_corpus_lines(const std::filesystem::path& path, const std::vector<Json>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot append to '" + path.string() + "'");
  for (const auto& line : lines) out << line.dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "append to '" + path.string() + "' failed");
}

}  // namespace litmon
