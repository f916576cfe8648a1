#include "litmon/export.hpp"

#include <algorithm>
#include <fstream>

#include "litmon/corpus_io.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

std::string cell(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::string>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

std::string names_of(const Corpus& corpus, const std::vector<Link>& links) {
  std::vector<std::string> names;
  for (const auto& l : links) {
    const auto* e = corpus.find_entity(l.to_id);
    auto name = e ? e->display_name : l.to_id;
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
  }
  return joined(names);
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  auto n = text::to_lower_ascii(name);
  if (n == "jsonl" || n == "ndjson" || n == "line-delimited" || n == "linedelimited") return ExportFormat::LineDelimited;
  if (n == "csv") return ExportFormat::Csv;
  return std::nullopt;
}

std::string corpus_csv(const Corpus& corpus) {
  std::string out =
      "record_id,short_name,title,year,resource_type,venue,doi,language,curation_status,principal_product,"
      "product_version,usage_context,coupled_tools,data_source,materials_selection,process_selection,charts,"
      "eco_audit,synthesizer,fos_field,research_segment,material_families,scope_depth,authors,institutions,"
      "countries\n";
  for (const auto* r : corpus.ordered_records()) {
    std::vector<std::string> row;
    row.push_back(r->record_id);
    row.push_back(r->short_name);
    row.push_back(r->title);
    row.push_back(r->year ? std::to_string(*r->year) : "");
    row.emplace_back(to_string(r->resource_type));
    row.push_back(r->venue);
    row.push_back(r->doi.value_or(""));
    row.push_back(r->language);
    row.emplace_back(to_string(r->curation_status));
    if (r->usage) {
      const auto& u = *r->usage;
      row.push_back(u.principal_product ? std::string(to_string(*u.principal_product)) : "");
      row.push_back(u.product_version.value_or(""));
      row.emplace_back(to_string(u.usage_context));
      std::vector<std::string> tools;
      for (const auto& t : u.coupled_tools) {
        tools.push_back(t.kind == ToolKind::Other ? t.raw_label : std::string(to_string(t.kind)));
      }
      row.push_back(joined(tools));
      for (bool b : {u.flags.data_source, u.flags.materials_selection, u.flags.process_selection, u.flags.charts,
                     u.flags.eco_audit, u.flags.synthesizer}) {
        row.emplace_back(flag(b));
      }
    } else {
      row.insert(row.end(), 10, "");
    }
    if (r->application) {
      const auto& a = *r->application;
      row.push_back(a.fos_field ? std::string(a.fos_field->id()) : "");
      row.emplace_back(to_string(a.research_segment));
      std::vector<std::string> families;
      for (auto m : a.material_families) families.emplace_back(to_string(m));
      row.push_back(joined(families));
      row.push_back(a.scope_depth ? std::string(to_string(*a.scope_depth)) : "");
    } else {
      row.insert(row.end(), 4, "");
    }
    row.push_back(names_of(corpus, r->author_links));
    row.push_back(names_of(corpus, r->institution_links));
    row.push_back(names_of(corpus, r->country_links));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

void export_corpus(const Corpus& corpus, const std::filesystem::path& path, ExportFormat format) {
  if (format == ExportFormat::LineDelimited) {
    save_corpus_file(path, corpus);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  out << corpus_csv(corpus);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

}  // namespace litmon
