#include <cctype>
#include <map>
#include <optional>

#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

struct SyntaxFailure {
  std::size_t line;
  std::string reason;
};

std::string clean_text(std::string_view raw) { return text::collapse_whitespace(text::decode_latex(raw)); }

std::optional<int> month_number(std::string_view value) {
  static constexpr std::string_view kMonths[] = {"jan", "feb", "mar", "apr", "may", "jun",
                                                 "jul", "aug", "sep", "oct", "nov", "dec"};
  auto v = text::to_lower_ascii(text::trim(value));
  if (v.empty()) return std::nullopt;
  if (std::isdigit(static_cast<unsigned char>(v[0]))) {
    int m = std::atoi(v.c_str());
    if (m >= 1 && m <= 12) return m;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < 12; ++i) {
    if (v.compare(0, 3, kMonths[i]) == 0) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<int> first_year(std::string_view value) {
  for (std::size_t i = 0; i + 4 <= value.size(); ++i) {
    bool digits = true;
    for (std::size_t k = 0; k < 4 && digits; ++k) digits = std::isdigit(static_cast<unsigned char>(value[i + k]));
    if (!digits) continue;
    bool bounded = (i == 0 || !std::isdigit(static_cast<unsigned char>(value[i - 1]))) &&
                   (i + 4 == value.size() || !std::isdigit(static_cast<unsigned char>(value[i + 4])));
    if (bounded) return std::stoi(std::string(value.substr(i, 4)));
  }
  return std::nullopt;
}

// Splits on " and " outside braces.
std::vector<std::string> split_names(std::string_view raw) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == '{') ++depth;
    else if (c == '}') --depth;
    else if (depth == 0 && std::isspace(static_cast<unsigned char>(c)) && i + 4 < raw.size() &&
             text::iequals(raw.substr(i + 1, 3), "and") && std::isspace(static_cast<unsigned char>(raw[i + 4]))) {
      out.emplace_back(raw.substr(start, i - start));
      start = i + 5;
      i += 4;
    }
  }
  out.emplace_back(raw.substr(start));
  std::vector<std::string> cleaned;
  for (auto& name : out) {
    auto c = clean_text(name);
    if (!c.empty()) cleaned.push_back(std::move(c));
  }
  return cleaned;
}

std::optional<ResourceType> type_hint(const std::string& entry_type, const std::map<std::string, std::string>& fields) {
  if (entry_type == "article") return ResourceType::ReviewedPaper;
  if (entry_type == "inproceedings" || entry_type == "proceedings" || entry_type == "conference") {
    return ResourceType::ConferenceProceedings;
  }
  if (entry_type == "phdthesis" || entry_type == "mastersthesis" || entry_type == "thesis" ||
      entry_type == "bachelorsthesis") {
    return ResourceType::Thesis;
  }
  if (entry_type == "techreport" || entry_type == "report") return ResourceType::TechnicalReportWhitePaper;
  if (entry_type == "patent" || entry_type == "standard") return ResourceType::StandardPatent;
  if (entry_type == "misc") {
    for (const char* key : {"type", "howpublished", "note", "patent"}) {
      auto it = fields.find(key);
      if (it == fields.end()) continue;
      auto v = text::to_lower_ascii(it->second);
      if (std::string_view(key) == "patent" || v.find("patent") != std::string::npos ||
          v.find("standard") != std::string::npos) {
        return ResourceType::StandardPatent;
      }
    }
  }
  return std::nullopt;
}

class EntryParser {
 public:
  EntryParser(std::string_view chunk, std::size_t first_line, std::map<std::string, std::string>& macros)
      : src_(chunk), first_line_(first_line), macros_(macros) {}

  // Returns a record for bibliographic entries, nothing for @string /
  // @comment / @preamble. Throws SyntaxFailure.
  std::optional<IntrinsicRecord> parse() {
    expect('@');
    std::string type = text::to_lower_ascii(read_identifier());
    if (type.empty()) fail("missing entry type after '@'");
    skip_ws();
    char close = 0;
    if (peek() == '{') close = '}';
    else if (peek() == '(') close = ')';
    else fail("expected '{' after entry type");
    const std::size_t open_pos = pos_;
    ++pos_;

    if (type == "comment" || type == "preamble") {
      skip_balanced(open_pos);
      return std::nullopt;
    }
    if (type == "string") {
      skip_ws();
      std::string name = text::to_lower_ascii(read_identifier());
      skip_ws();
      expect('=');
      macros_[name] = read_value();
      skip_ws();
      expect(close);
      return std::nullopt;
    }

    skip_ws();
    std::string key;
    while (!at_end() && peek() != ',' && peek() != close && !std::isspace(static_cast<unsigned char>(peek()))) {
      key += src_[pos_++];
    }
    std::map<std::string, std::string> fields;
    while (true) {
      skip_ws();
      if (at_end()) fail_at(open_pos, "unbalanced braces: entry is not closed");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == close) {
        ++pos_;
        break;
      }
      const std::size_t field_pos = pos_;
      std::string name = text::to_lower_ascii(read_identifier());
      if (name.empty()) fail("unexpected character '" + std::string(1, peek()) + "' in field list");
      skip_ws();
      if (peek() != '=') fail_at(field_pos, "expected '=' after field name '" + name + "'");
      ++pos_;
      std::string value = read_value();
      fields.emplace(std::move(name), std::move(value));
      skip_ws();
      if (!at_end() && peek() != ',' && peek() != close) {
        fail("expected ',' or '" + std::string(1, close) + "' after field value");
      }
    }
    return build(type, key, fields);
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  std::size_t line_at(std::size_t pos) const {
    std::size_t line = first_line_;
    for (std::size_t i = 0; i < pos && i < src_.size(); ++i) {
      if (src_[i] == '\n') ++line;
    }
    return line;
  }

  [[noreturn]] void fail(const std::string& reason) const { throw SyntaxFailure{line_at(pos_), reason}; }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& reason) const {
    throw SyntaxFailure{line_at(pos), reason};
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_identifier() {
    std::string out;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.' || c == '+') {
        out += c;
        ++pos_;
      } else {
        break;
      }
    }
    return out;
  }

  void skip_balanced(std::size_t open_pos) {
    int depth = 1;
    while (!at_end() && depth > 0) {
      char c = src_[pos_++];
      if (c == '{' || c == '(') ++depth;
      else if (c == '}' || c == ')') --depth;
    }
    if (depth > 0) fail_at(open_pos, "unbalanced braces: entry is not closed");
  }

  std::string read_braced() {
    const std::size_t open_pos = pos_;
    ++pos_;
    int depth = 1;
    std::string out;
    while (!at_end()) {
      char c = src_[pos_++];
      if (c == '\\' && !at_end()) {
        out += c;
        out += src_[pos_++];
        continue;
      }
      if (c == '{') ++depth;
      if (c == '}' && --depth == 0) return out;
      out += c;
    }
    fail_at(open_pos, "unbalanced braces in field value");
  }

  std::string read_quoted() {
    const std::size_t open_pos = pos_;
    ++pos_;
    int depth = 0;
    std::string out;
    while (!at_end()) {
      char c = src_[pos_++];
      if (c == '\\' && !at_end()) {
        out += c;
        out += src_[pos_++];
        continue;
      }
      if (c == '{') ++depth;
      if (c == '}') {
        if (--depth < 0) fail_at(open_pos, "unbalanced braces in quoted value");
      }
      if (c == '"' && depth == 0) return out;
      out += c;
    }
    fail_at(open_pos, "unterminated quoted value");
  }

  std::string read_value() {
    std::string out;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '{') {
        out += read_braced();
      } else if (c == '"') {
        out += read_quoted();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += src_[pos_++];
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = text::to_lower_ascii(read_identifier());
        auto it = macros_.find(name);
        out += it != macros_.end() ? it->second : name;
      } else {
        fail("expected a field value");
      }
      skip_ws();
      if (peek() == '#') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  IntrinsicRecord build(const std::string& type, const std::string& key,
                        const std::map<std::string, std::string>& fields) const {
    auto get = [&](const char* name) -> std::optional<std::string> {
      auto it = fields.find(name);
      if (it == fields.end()) return std::nullopt;
      return it->second;
    };
    auto get_clean = [&](const char* name) -> std::optional<std::string> {
      auto v = get(name);
      if (!v) return std::nullopt;
      auto c = clean_text(*v);
      if (c.empty()) return std::nullopt;
      return c;
    };

    IntrinsicRecord r;
    r.raw_source = SourceFormat::BibTeX;
    r.source_key = key;
    r.title = get_clean("title").value_or("");
    if (auto y = get("year")) r.year = first_year(*y);
    if (auto d = get("date")) {
      if (!r.year) r.year = first_year(*d);
      auto parts = text::split(text::trim(*d), '-');
      if (parts.size() >= 2) r.month = month_number(parts[1]);
    }
    if (auto m = get("month")) r.month = month_number(*m);
    r.resource_type_hint = type_hint(type, fields);
    for (const char* venue_key : {"journal", "journaltitle", "booktitle", "school", "institution", "organization"}) {
      if (auto v = get_clean(venue_key)) {
        r.venue = *v;
        break;
      }
    }
    r.volume = get_clean("volume");
    r.issue = get_clean("number");
    if (!r.issue) r.issue = get_clean("issue");
    r.publisher = get_clean("publisher");
    r.abstract = get_clean("abstract");
    for (const char* kw_key : {"keywords", "keyword", "author_keywords"}) {
      if (auto kw = get(kw_key)) {
        std::string normalized = *kw;
        for (auto& c : normalized) {
          if (c == ';') c = ',';
        }
        for (const auto& k : text::split(normalized, ',')) {
          auto c = clean_text(k);
          if (!c.empty()) r.keywords.push_back(std::move(c));
        }
        break;
      }
    }
    r.language = get_clean("language").value_or("");
    if (auto doi = get("doi")) {
      auto d = std::string(text::trim(*doi));
      if (!d.empty()) r.doi = d;
    }
    if (auto url = get("url")) {
      auto u = std::string(text::trim(*url));
      if (!u.empty()) r.url = u;
    }
    if (auto authors = get("author")) r.authors = split_names(*authors);
    for (const char* aff_key : {"affiliation", "affiliations"}) {
      auto aff = get(aff_key);
      if (!aff) continue;
      std::vector<std::string> parts;
      for (const auto& p : text::split(*aff, ';')) {
        auto c = clean_text(p);
        if (!c.empty()) parts.push_back(std::move(c));
      }
      const bool aligned = parts.size() == r.authors.size() && parts.size() > 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        Affiliation a;
        a.raw = parts[i];
        if (aligned) a.author_index = i;
        else if (parts.size() == 1 && r.authors.size() == 1) a.author_index = 0;
        r.affiliations.push_back(std::move(a));
      }
      break;
    }
    return r;
  }

  std::string_view src_;
  std::size_t first_line_;
  std::map<std::string, std::string>& macros_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_bibtex(std::string_view input) {
  ParseResult result;
  if (input.size() >= 3 && input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);

  // Entry boundaries: lines whose first non-blank character is '@'.
  struct Start {
    std::size_t offset;
    std::size_t line;
  };
  std::vector<Start> starts;
  std::size_t line = 1;
  std::size_t line_begin = 0;
  while (line_begin <= input.size()) {
    std::size_t line_end = input.find('\n', line_begin);
    if (line_end == std::string_view::npos) line_end = input.size();
    auto content = input.substr(line_begin, line_end - line_begin);
    auto first = content.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && content[first] == '@') starts.push_back({line_begin + first, line});
    if (line_end == input.size()) break;
    line_begin = line_end + 1;
    ++line;
  }
  if (starts.empty()) {
    result.errors.push_back({1, "EmptyInput", text::trim(input).empty() ? "input is empty" : "no BibTeX entries found"});
    return result;
  }

  std::map<std::string, std::string> macros = {
      {"jan", "1"}, {"feb", "2"}, {"mar", "3"}, {"apr", "4"},  {"may", "5"},  {"jun", "6"},
      {"jul", "7"}, {"aug", "8"}, {"sep", "9"}, {"oct", "10"}, {"nov", "11"}, {"dec", "12"},
  };
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t end = i + 1 < starts.size() ? starts[i + 1].offset : input.size();
    auto chunk = input.substr(starts[i].offset, end - starts[i].offset);
    try {
      EntryParser parser(chunk, starts[i].line, macros);
      if (auto record = parser.parse()) result.records.push_back(std::move(*record));
    } catch (const SyntaxFailure& failure) {
      result.errors.push_back({failure.line, "SyntaxError", failure.reason});
    }
  }
  return result;
}

}  // namespace litmon
