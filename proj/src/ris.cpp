#include <cctype>
#include <map>

#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

struct TagLine {
  std::string tag;
  std::string value;
};

// "XX  - value". Some exporters drop the space after the hyphen on empty
// values ("ER  -").
std::optional<TagLine> split_tag(std::string_view line) {
  if (line.size() < 5) return std::nullopt;
  if (!std::isupper(static_cast<unsigned char>(line[0]))) return std::nullopt;
  if (!std::isalnum(static_cast<unsigned char>(line[1]))) return std::nullopt;
  if (line[2] != ' ' || line[3] != ' ' || line[4] != '-') return std::nullopt;
  if (line.size() > 5 && line[5] != ' ') return std::nullopt;
  TagLine out;
  out.tag = std::string(line.substr(0, 2));
  out.value = line.size() > 6 ? std::string(text::trim(line.substr(6))) : std::string();
  return out;
}

std::optional<ResourceType> type_hint(std::string_view ty) {
  auto t = text::to_lower_ascii(text::trim(ty));
  if (t == "jour" || t == "jfull" || t == "ejour" || t == "abst") return ResourceType::ReviewedPaper;
  if (t == "conf" || t == "cpaper" || t == "cproc") return ResourceType::ConferenceProceedings;
  if (t == "thes") return ResourceType::Thesis;
  if (t == "rprt") return ResourceType::TechnicalReportWhitePaper;
  if (t == "pat" || t == "stand") return ResourceType::StandardPatent;
  return std::nullopt;
}

std::optional<int> leading_int(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0) return std::nullopt;
  return std::stoi(std::string(s.substr(0, i)));
}

struct Builder {
  IntrinsicRecord record;
  std::size_t start_line = 0;
  std::optional<int> py_year;
  std::optional<int> da_year;
  std::map<std::string, std::string> venue_by_tag;
  std::string* last_value = nullptr;  // target of continuation lines

  void add(const TagLine& t) {
    const auto& tag = t.tag;
    const auto value = text::collapse_whitespace(t.value);
    last_value = nullptr;
    if (tag == "TY") {
      record.resource_type_hint = type_hint(value);
    } else if (tag == "TI" || tag == "T1") {
      if (record.title.empty()) {
        record.title = value;
        last_value = &record.title;
      }
    } else if (tag == "AU" || tag == "A1") {
      if (!value.empty()) {
        record.authors.push_back(value);
        last_value = &record.authors.back();
      }
    } else if (tag == "AD" || tag == "C1") {
      if (!value.empty()) {
        Affiliation a;
        a.raw = value;
        if (!record.authors.empty()) a.author_index = record.authors.size() - 1;
        record.affiliations.push_back(std::move(a));
        last_value = &record.affiliations.back().raw;
      }
    } else if (tag == "PY" || tag == "Y1") {
      if (auto y = leading_int(value)) py_year = *y;
    } else if (tag == "DA") {
      auto parts = text::split(value, value.find('/') != std::string::npos ? '/' : '-');
      if (!parts.empty()) {
        if (auto y = leading_int(parts[0])) da_year = *y;
      }
      if (parts.size() >= 2) {
        if (auto m = leading_int(parts[1]); m && *m >= 1 && *m <= 12) record.month = *m;
      }
    } else if (tag == "T2" || tag == "JF" || tag == "JO" || tag == "JA" || tag == "J2" || tag == "BT") {
      venue_by_tag.emplace(tag, value);
    } else if (tag == "VL") {
      record.volume = value;
    } else if (tag == "IS") {
      record.issue = value;
    } else if (tag == "PB") {
      record.publisher = value;
    } else if (tag == "AB" || tag == "N2") {
      if (!record.abstract) {
        record.abstract = value;
        last_value = &*record.abstract;
      }
    } else if (tag == "KW") {
      if (!value.empty()) {
        record.keywords.push_back(value);
        last_value = &record.keywords.back();
      }
    } else if (tag == "LA") {
      record.language = value;
    } else if (tag == "DO") {
      if (!value.empty()) record.doi = value;
    } else if (tag == "UR") {
      if (!value.empty() && !record.url) record.url = value;
    } else if (tag == "ID") {
      record.source_key = value;
    }
  }

  void continue_value(std::string_view line) {
    if (!last_value) return;
    auto extra = text::collapse_whitespace(line);
    if (extra.empty()) return;
    if (!last_value->empty()) *last_value += ' ';
    *last_value += extra;
  }

  IntrinsicRecord finish() {
    record.raw_source = SourceFormat::RIS;
    record.year = py_year ? py_year : da_year;
    for (const char* tag : {"T2", "JF", "JO", "JA", "J2", "BT"}) {
      auto it = venue_by_tag.find(tag);
      if (it != venue_by_tag.end() && !it->second.empty()) {
        record.venue = it->second;
        break;
      }
    }
    return std::move(record);
  }
};

}  // namespace

ParseResult parse_ris(std::string_view input) {
  ParseResult result;
  if (input.size() >= 3 && input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);
  if (text::trim(input).empty()) {
    result.errors.push_back({1, "EmptyInput", "input is empty"});
    return result;
  }

  std::optional<Builder> current;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  bool saw_record = false;
  while (begin <= input.size()) {
    std::size_t end = input.find('\n', begin);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    if (auto tag = split_tag(line)) {
      if (tag->tag == "TY") {
        if (current) {
          result.errors.push_back({current->start_line, "MissingTerminator", "record has no ER line"});
        }
        current.emplace();
        current->start_line = line_no;
        current->add(*tag);
        saw_record = true;
      } else if (tag->tag == "ER") {
        if (current) {
          result.records.push_back(current->finish());
          current.reset();
        } else {
          result.errors.push_back({line_no, "SyntaxError", "ER without a preceding TY"});
        }
      } else if (current) {
        current->add(*tag);
      } else {
        result.errors.push_back({line_no, "SyntaxError", "tag " + tag->tag + " outside of a record"});
      }
    } else if (!text::trim(line).empty()) {
      if (current && current->last_value) {
        current->continue_value(line);
      } else {
        result.errors.push_back({line_no, "SyntaxError", "line is not a RIS tag line"});
      }
    }

    if (end == input.size()) break;
    begin = end + 1;
  }
  if (current) result.errors.push_back({current->start_line, "MissingTerminator", "record has no ER line"});
  if (!saw_record && result.records.empty()) {
    result.errors.push_back({1, "EmptyInput", "no RIS records found"});
  }
  return result;
}

}  // namespace litmon
