#include "litmon/curation.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "litmon/embedded.hpp"
#include "litmon/text.hpp"

namespace litmon {

using OJson = nlohmann::ordered_json;

std::string_view to_string(Verdict v) { return v == Verdict::Include ? "Include" : "Exclude"; }

std::string_view to_string(InclusionCriterion c) {
  switch (c) {
    case InclusionCriterion::DataAccess: return "DataAccess";
    case InclusionCriterion::SelectionWorkflow: return "SelectionWorkflow";
    case InclusionCriterion::ChartsTradeoffs: return "ChartsTradeoffs";
    case InclusionCriterion::WorkflowIntegration: return "WorkflowIntegration";
  }
  return "?";
}

std::string_view to_string(FosProvenance p) {
  return p == FosProvenance::TableLookup ? "TableLookup" : "ManualOverride";
}

// --- gate ----------------------------------------------------------------------

InclusionDecision inclusion_gate(const Corpus& corpus, std::string_view record_id, const UsageDescriptor& annotation) {
  if (!corpus.find_record(record_id)) {
    throw Error(ErrorCode::UnknownRecord, "unknown record '" + std::string(record_id) + "'");
  }
  InclusionDecision d;
  d.record_id = std::string(record_id);
  const auto& f = annotation.flags;
  if (f.data_source) d.satisfied_criteria.push_back(InclusionCriterion::DataAccess);
  if (f.materials_selection || f.process_selection) d.satisfied_criteria.push_back(InclusionCriterion::SelectionWorkflow);
  if (f.charts) d.satisfied_criteria.push_back(InclusionCriterion::ChartsTradeoffs);
  if (!annotation.coupled_tools.empty()) d.satisfied_criteria.push_back(InclusionCriterion::WorkflowIntegration);
  if (d.satisfied_criteria.empty()) {
    d.verdict = Verdict::Exclude;
    d.reason = std::string(kReasonMentionOnly);
  } else {
    d.verdict = Verdict::Include;
  }
  return d;
}

GateOutcome apply_gate(Corpus& corpus, std::string_view record_id) {
  const auto* record = corpus.find_record(record_id);
  if (!record) throw Error(ErrorCode::UnknownRecord, "unknown record '" + std::string(record_id) + "'");
  if (!record->usage) {
    throw Error(ErrorCode::InvalidArgument, "record '" + std::string(record_id) + "' has not been annotated");
  }
  GateOutcome out;
  out.decision = inclusion_gate(corpus, record_id, *record->usage);
  if (out.decision.verdict == Verdict::Exclude) {
    corpus.set_status(record_id, CurationStatus::Excluded);
    out.status = CurationStatus::Excluded;
    return out;
  }

  auto issue = [&](std::string_view code, std::string message) {
    out.issues.push_back({std::string(record_id), Severity::Warning, std::string(code), std::move(message)});
  };
  if (record->author_links.empty()) issue(issue_code::kMissingAuthors, "cannot validate a record without authors");
  if (!record->usage->principal_product) {
    issue(issue_code::kMissingProduct, "cannot validate a record without a principal product");
  }
  const auto current = record->curation_status;
  if (current != CurationStatus::Annotated && current != CurationStatus::Validated) {
    corpus.set_status(record_id, CurationStatus::Annotated);
  }
  if (out.issues.empty() && current != CurationStatus::Validated) {
    corpus.set_status(record_id, CurationStatus::Validated);
  }
  out.status = corpus.find_record(record_id)->curation_status;
  return out;
}

// --- FOS -------------------------------------------------------------------------

std::string FosTable::key(std::string_view label) {
  return text::to_lower_ascii(text::collapse_whitespace(text::fold_diacritics(label)));
}

FosTable FosTable::parse(std::string_view tsv) {
  FosTable table;
  std::size_t line_no = 0;
  for (const auto& raw_line : text::split(tsv, '\n')) {
    ++line_no;
    auto line = text::trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::InvalidRecord, "FOS table line " + std::to_string(line_no) + ": expected label<TAB>code");
    }
    auto label = text::trim(line.substr(0, tab));
    auto code = text::trim(line.substr(tab + 1));
    auto field = FosField::parse(code);
    if (!field) {
      throw Error(ErrorCode::InvalidRecord,
                  "FOS table line " + std::to_string(line_no) + ": unknown FOS code '" + std::string(code) + "'");
    }
    table.table_.insert_or_assign(key(label), *field);
  }
  return table;
}

const FosTable& FosTable::bundled() {
  static const FosTable table = parse(embedded::fos_map_tsv);
  return table;
}

FosTable FosTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

FosMapping FosTable::map(std::string_view raw_label) const {
  FosMapping m;
  m.raw_label = std::string(raw_label);
  const auto k = key(raw_label);
  if (auto it = overrides_.find(k); it != overrides_.end()) {
    m.fos_field = it->second;
    m.provenance = FosProvenance::ManualOverride;
  } else if (auto jt = table_.find(k); jt != table_.end()) {
    m.fos_field = jt->second;
    m.provenance = FosProvenance::TableLookup;
  }
  return m;
}

void FosTable::set_override(std::string_view raw_label, FosField field) { overrides_.insert_or_assign(key(raw_label), field); }

FosMapping map_fos(std::string_view raw_label) { return FosTable::bundled().map(raw_label); }

// --- annotation ----------------------------------------------------------------

namespace {

[[noreturn]] void violation(const std::string& message) { throw Error(ErrorCode::VocabularyViolation, message); }

template <class E>
E vocab(const OJson& value, std::string_view what) {
  if (!value.is_string()) violation(std::string(what) + " must be a string");
  auto v = try_parse_enum<E>(value.get<std::string>());
  if (!v) violation("'" + value.get<std::string>() + "' is not a valid " + std::string(what));
  return *v;
}

std::vector<std::string> string_list(const OJson& obj, const char* key) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) violation(std::string(key) + " must be a list");
  for (const auto& v : *it) {
    if (!v.is_string()) violation(std::string(key) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::optional<std::string> optional_string(const OJson& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) violation(std::string(key) + " must be a string");
  return it->get<std::string>();
}

void check_vocabulary(const UsageDescriptor& u, const ApplicationContext& c) {
  if (u.principal_product && !enum_in_range(*u.principal_product)) violation("principal product out of vocabulary");
  if (!enum_in_range(u.usage_context)) violation("usage context out of vocabulary");
  for (const auto& t : u.coupled_tools) {
    if (!enum_in_range(t.kind)) violation("coupled tool out of vocabulary");
  }
  if (!enum_in_range(c.research_segment)) violation("research segment out of vocabulary");
  for (auto m : c.material_families) {
    if (!enum_in_range(m)) violation("material family out of vocabulary");
  }
  if (c.scope_depth && !enum_in_range(*c.scope_depth)) violation("scope depth out of vocabulary");
}

}  // namespace

EntityRecord product_entity(Product p) {
  EntityRecord e;
  e.kind = EntityKind::Product;
  e.canonical_key = text::to_lower_ascii(to_string(p));
  e.display_name = "Granta " + std::string(to_string(p));
  return e;
}

EntityRecord fos_entity(FosField f) {
  EntityRecord e;
  e.kind = EntityKind::FosField;
  e.canonical_key = std::string(f.code());
  e.display_name = std::string(f.name());
  e.attributes["id"] = std::string(f.id());
  return e;
}

Annotation parse_annotation(const OJson& doc, const FosTable& fos) {
  if (!doc.is_object()) violation("annotation must be a JSON object");
  Annotation a;
  a.curator = optional_string(doc, "curator").value_or("");

  const OJson empty = OJson::object();
  const auto usage_it = doc.find("usage");
  const OJson& u = usage_it != doc.end() && usage_it->is_object() ? *usage_it : empty;
  if (auto name = optional_string(u, "principal_product")) {
    a.usage.principal_product = resolve_product(*name);
    if (!a.usage.principal_product) violation("'" + *name + "' is not a known product name");
  }
  a.usage.product_version = optional_string(u, "product_version");
  a.usage.sub_products = string_list(u, "sub_products");
  if (auto it = u.find("usage_context"); it != u.end() && !it->is_null()) {
    a.usage.usage_context = vocab<UsageContext>(*it, "usage context");
  }
  if (auto it = u.find("coupled_tools"); it != u.end() && !it->is_null()) {
    if (!it->is_array()) violation("coupled_tools must be a list");
    for (const auto& t : *it) {
      if (t.is_string()) {
        a.usage.coupled_tools.push_back(resolve_tool(t.get<std::string>()));
      } else if (t.is_object()) {
        auto label = optional_string(t, "label").value_or("");
        CoupledTool tool = resolve_tool(label);
        if (auto kind = t.find("tool"); kind != t.end() && !kind->is_null()) tool.kind = vocab<ToolKind>(*kind, "tool");
        a.usage.coupled_tools.push_back(std::move(tool));
      } else {
        violation("coupled_tools entries must be names");
      }
    }
  }
  if (auto it = u.find("flags"); it != u.end() && !it->is_null()) {
    if (!it->is_object()) violation("flags must be an object");
    for (const auto& [name, value] : it->items()) {
      if (!value.is_boolean()) violation("flag '" + name + "' must be true or false");
      const bool b = value.get<bool>();
      auto& f = a.usage.flags;
      if (name == "data_source") f.data_source = b;
      else if (name == "materials_selection") f.materials_selection = b;
      else if (name == "process_selection") f.process_selection = b;
      else if (name == "charts") f.charts = b;
      else if (name == "eco_audit") f.eco_audit = b;
      else if (name == "synthesizer") f.synthesizer = b;
      else violation("unknown usage flag '" + name + "'");
    }
  }

  const auto ctx_it = doc.find("context");
  const OJson& c = ctx_it != doc.end() && ctx_it->is_object() ? *ctx_it : empty;
  a.context.raw_field_labels = string_list(c, "raw_field_labels");
  if (auto name = optional_string(c, "fos_field")) {
    a.context.fos_field = FosField::parse(*name);
    if (!a.context.fos_field) violation("'" + *name + "' is not an OECD FOS 2007 category");
  } else {
    for (const auto& label : a.context.raw_field_labels) {
      if (auto m = fos.map(label); m.fos_field) {
        a.context.fos_field = m.fos_field;
        break;
      }
    }
  }
  if (auto it = c.find("research_segment"); it != c.end() && !it->is_null()) {
    a.context.research_segment = vocab<ResearchSegment>(*it, "research segment");
  }
  for (const auto& m : string_list(c, "material_families")) {
    a.context.material_families.push_back(vocab<MaterialFamily>(OJson(m), "material family"));
  }
  a.context.process_families = string_list(c, "process_families");
  if (auto it = c.find("scope_depth"); it != c.end() && !it->is_null()) {
    a.context.scope_depth = vocab<ScopeDepth>(*it, "scope depth");
  }
  a.context.notes = optional_string(c, "notes");
  return a;
}

Annotation parse_annotation(std::string_view json_text, const FosTable& fos) {
  auto doc = OJson::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::InvalidArgument, "annotation is not valid JSON");
  return parse_annotation(doc, fos);
}

std::string utc_timestamp_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

DocumentRecord apply_annotation(Corpus& corpus, std::string_view record_id, const UsageDescriptor& usage,
                                const ApplicationContext& context, std::string_view curator,
                                std::optional<std::string> timestamp) {
  const auto* current = corpus.find_record(record_id);
  if (!current) throw Error(ErrorCode::UnknownRecord, "unknown record '" + std::string(record_id) + "'");
  check_vocabulary(usage, context);

  DocumentRecord updated = *current;
  updated.usage = usage;
  updated.application = context;
  updated.product_links.clear();
  updated.field_links.clear();
  if (usage.principal_product) {
    auto id = corpus.upsert_entity(product_entity(*usage.principal_product));
    updated.product_links.push_back({updated.record_id, id, LinkType::UsesProduct, std::nullopt});
  }
  if (context.fos_field) {
    auto id = corpus.upsert_entity(fos_entity(*context.fos_field));
    updated.field_links.push_back({updated.record_id, id, LinkType::InField, std::nullopt});
  }
  updated.curation_status = CurationStatus::Annotated;
  corpus.upsert_record(updated);

  AuditEntry entry;
  entry.record_id = updated.record_id;
  entry.curator = std::string(curator);
  entry.timestamp = timestamp ? *timestamp : utc_timestamp_now();
  entry.usage = usage;
  entry.context = context;
  corpus.append_audit(std::move(entry));
  return *corpus.find_record(record_id);
}

// --- quality checks ------------------------------------------------------------

std::vector<ValidationIssue> quality_check(const Corpus& corpus, const FosTable& fos) {
  std::vector<ValidationIssue> issues;
  auto add = [&](const std::string& id, Severity s, std::string_view code, std::string message) {
    issues.push_back({id, s, std::string(code), std::move(message)});
  };
  const auto& meta = corpus.meta();
  const int year_max = meta.year_max.value_or(current_year());
  std::optional<int> partial_year;
  if (meta.collection_cutoff && meta.collection_cutoff->month < 12) partial_year = meta.collection_cutoff->year;

  for (const auto& [id, r] : corpus.records()) {
    const bool validated = r.curation_status == CurationStatus::Validated;
    if (!r.year) {
      add(id, Severity::Error, issue_code::kMissingYear, "record has no publication year");
    } else if (*r.year < meta.year_min || *r.year > year_max) {
      add(id, Severity::Error, issue_code::kYearOutOfBounds,
          "year " + std::to_string(*r.year) + " is outside " + std::to_string(meta.year_min) + ".." +
              std::to_string(year_max));
    } else if (partial_year && *r.year == *partial_year) {
      add(id, Severity::Info, issue_code::kPartialYearCoverage,
          "collection stops at " + format_year_month(*meta.collection_cutoff) + "; " + std::to_string(*r.year) +
              " is not a full publication year");
    }
    if (text::trim(r.title).empty()) add(id, Severity::Error, issue_code::kMissingTitle, "record has no title");
    if (r.author_links.empty()) {
      add(id, validated ? Severity::Error : Severity::Warning, issue_code::kMissingAuthors, "record has no authors");
    }
    if (validated && !r.usage) {
      add(id, Severity::Error, issue_code::kMissingUsage, "validated record has no usage descriptor");
    } else if (validated && !r.usage->principal_product) {
      add(id, Severity::Error, issue_code::kMissingProduct, "validated record has no principal product");
    }
    if (r.doi && normalize_doi(*r.doi) != r.doi) {
      add(id, Severity::Error, issue_code::kInvalidDoi, "DOI '" + *r.doi + "' is not in normalized form");
    }

    std::set<std::string> dangling;
    for (const auto* links :
         {&r.author_links, &r.institution_links, &r.country_links, &r.product_links, &r.field_links}) {
      for (const auto& l : *links) {
        if (!corpus.find_entity(l.to_id)) dangling.insert(l.to_id);
      }
    }
    for (const auto& target : dangling) {
      add(id, Severity::Error, issue_code::kDanglingLink, "link to missing entity '" + target + "'");
    }

    std::vector<int> ordinals;
    for (const auto& l : r.author_links) ordinals.push_back(l.ordinal.value_or(0));
    std::sort(ordinals.begin(), ordinals.end());
    for (std::size_t i = 0; i < ordinals.size(); ++i) {
      if (ordinals[i] != static_cast<int>(i) + 1) {
        add(id, Severity::Error, issue_code::kDuplicateOrdinal, "author ordinals are not distinct and numbered 1..n");
        break;
      }
    }

    if (r.application) {
      for (const auto& label : r.application->raw_field_labels) {
        if (!fos.map(label).fos_field) {
          add(id, Severity::Warning, issue_code::kUnmappedFosLabel, "field label '" + label + "' has no FOS mapping");
        }
      }
    }
  }

  std::map<std::pair<EntityKind, std::string>, std::vector<std::string>> keys;
  for (const auto& [id, e] : corpus.entities()) keys[{e.kind, e.canonical_key}].push_back(id);
  for (const auto& [key, ids] : keys) {
    if (ids.size() < 2) continue;
    for (const auto& id : ids) {
      add(id, Severity::Error, issue_code::kDuplicateCanonicalKey,
          std::string(to_string(key.first)) + " key '" + key.second + "' is shared by " + std::to_string(ids.size()) +
              " entities");
    }
  }
  for (const auto& l : corpus.entity_links()) {
    for (const auto* end : {&l.from_id, &l.to_id}) {
      if (!corpus.find_entity(*end)) {
        add(l.from_id, Severity::Error, issue_code::kDanglingLink, "entity link to missing entity '" + *end + "'");
      }
    }
  }

  std::sort(issues.begin(), issues.end());
  issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
  return issues;
}

std::vector<ValidationIssue> filter_severity(std::vector<ValidationIssue> issues, Severity minimum) {
  // Enum order is Error < Warning < Info, i.e. decreasing severity.
  std::erase_if(issues, [&](const ValidationIssue& i) { return static_cast<int>(i.severity) > static_cast<int>(minimum); });
  return issues;
}

}  // namespace litmon
