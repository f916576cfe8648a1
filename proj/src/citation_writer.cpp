#include <cstdio>
#include <string>

#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

std::string escape_latex(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '&' || c == '%' || c == '$' || c == '#' || c == '_' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

void bib_field(std::string& out, std::string_view name, std::string_view value) {
  out += "  ";
  out += name;
  out += " = {";
  out += value;
  out += "},\n";
}

std::string_view bib_type(const std::optional<ResourceType>& hint) {
  if (!hint) return "misc";
  switch (*hint) {
    case ResourceType::ReviewedPaper: return "article";
    case ResourceType::ConferenceProceedings: return "inproceedings";
    case ResourceType::Thesis: return "phdthesis";
    case ResourceType::TechnicalReportWhitePaper: return "techreport";
    case ResourceType::StandardPatent: return "patent";
  }
  return "misc";
}

std::string_view bib_venue_field(const std::optional<ResourceType>& hint) {
  if (!hint) return "organization";
  switch (*hint) {
    case ResourceType::ReviewedPaper: return "journal";
    case ResourceType::ConferenceProceedings: return "booktitle";
    case ResourceType::Thesis: return "school";
    case ResourceType::TechnicalReportWhitePaper: return "institution";
    case ResourceType::StandardPatent: return "organization";
  }
  return "organization";
}

std::string_view ris_type(const std::optional<ResourceType>& hint) {
  if (!hint) return "GEN";
  switch (*hint) {
    case ResourceType::ReviewedPaper: return "JOUR";
    case ResourceType::ConferenceProceedings: return "CONF";
    case ResourceType::Thesis: return "THES";
    case ResourceType::TechnicalReportWhitePaper: return "RPRT";
    case ResourceType::StandardPatent: return "PAT";
  }
  return "GEN";
}

void ris_line(std::string& out, std::string_view tag, std::string_view value) {
  out += tag;
  out += "  - ";
  out += value;
  out += '\n';
}

}  // namespace

std::string write_bibtex(std::span<const IntrinsicRecord> records) {
  std::string out;
  std::size_t n = 0;
  for (const auto& r : records) {
    ++n;
    if (!out.empty()) out += '\n';
    out += '@';
    out += bib_type(r.resource_type_hint);
    out += '{';
    out += r.source_key.empty() ? "entry" + std::to_string(n) : r.source_key;
    out += ",\n";
    if (!r.authors.empty()) {
      std::string names;
      for (const auto& a : r.authors) {
        if (!names.empty()) names += " and ";
        auto escaped = escape_latex(a);
        // Keep names that contain " and " together.
        const bool braced = text::to_lower_ascii(a).find(" and ") != std::string::npos;
        names += braced ? "{" + escaped + "}" : escaped;
      }
      bib_field(out, "author", names);
    }
    if (!r.title.empty()) bib_field(out, "title", escape_latex(r.title));
    if (r.year) bib_field(out, "year", std::to_string(*r.year));
    if (r.month) bib_field(out, "month", std::to_string(*r.month));
    if (!r.venue.empty()) bib_field(out, bib_venue_field(r.resource_type_hint), escape_latex(r.venue));
    if (r.volume) bib_field(out, "volume", escape_latex(*r.volume));
    if (r.issue) bib_field(out, "number", escape_latex(*r.issue));
    if (r.publisher) bib_field(out, "publisher", escape_latex(*r.publisher));
    if (r.abstract) bib_field(out, "abstract", escape_latex(*r.abstract));
    if (!r.keywords.empty()) {
      std::string joined;
      for (const auto& k : r.keywords) {
        if (!joined.empty()) joined += ", ";
        joined += escape_latex(k);
      }
      bib_field(out, "keywords", joined);
    }
    if (!r.language.empty()) bib_field(out, "language", escape_latex(r.language));
    if (r.doi) bib_field(out, "doi", *r.doi);
    if (r.url) bib_field(out, "url", *r.url);
    if (!r.affiliations.empty()) {
      std::string joined;
      for (const auto& a : r.affiliations) {
        if (!joined.empty()) joined += "; ";
        joined += escape_latex(a.raw);
      }
      bib_field(out, "affiliation", joined);
    }
    out += "}\n";
  }
  return out;
}

std::string write_ris(std::span<const IntrinsicRecord> records) {
  std::string out;
  for (const auto& r : records) {
    ris_line(out, "TY", ris_type(r.resource_type_hint));
    if (!r.source_key.empty()) ris_line(out, "ID", r.source_key);
    if (!r.title.empty()) ris_line(out, "TI", r.title);
    // The reader attributes an AD line to the author above it.
    for (const auto& a : r.affiliations) {
      if (!a.author_index) ris_line(out, "AD", a.raw);
    }
    for (std::size_t i = 0; i < r.authors.size(); ++i) {
      ris_line(out, "AU", r.authors[i]);
      for (const auto& a : r.affiliations) {
        if (a.author_index == i) ris_line(out, "AD", a.raw);
      }
    }
    if (r.year) ris_line(out, "PY", std::to_string(*r.year));
    if (r.month) {
      char buf[16];
      if (r.year) {
        std::snprintf(buf, sizeof buf, "%04d/%02d", *r.year, *r.month);
      } else {
        std::snprintf(buf, sizeof buf, "/%02d", *r.month);
      }
      ris_line(out, "DA", buf);
    }
    if (!r.venue.empty()) ris_line(out, "T2", r.venue);
    if (r.volume) ris_line(out, "VL", *r.volume);
    if (r.issue) ris_line(out, "IS", *r.issue);
    if (r.publisher) ris_line(out, "PB", *r.publisher);
    if (r.abstract) ris_line(out, "AB", *r.abstract);
    for (const auto& k : r.keywords) ris_line(out, "KW", k);
    if (!r.language.empty()) ris_line(out, "LA", r.language);
    if (r.doi) ris_line(out, "DO", *r.doi);
    if (r.url) ris_line(out, "UR", *r.url);
    out += "ER  - \n";
  }
  return out;
}

}  // namespace litmon
