#include "litmon/filter.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "litmon/text.hpp"

namespace litmon {

namespace {

constexpr std::array<std::string_view, 21> kFields = {
    "year",     "type",   "status", "product",  "context", "segment",     "fos",
    "material", "tool",   "title",  "venue",    "abstract", "keyword",    "doi",
    "language", "short_name", "id", "author",   "institution", "country", "scope",
};

std::string fold(std::string_view s) { return text::to_lower_ascii(text::fold_diacritics(s)); }

std::optional<int> parse_int(std::string_view s) {
  s = text::trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Every value a record holds for a field, as text.
std::vector<std::string> values_of(const Corpus& corpus, const DocumentRecord& r, std::string_view field) {
  std::vector<std::string> out;
  auto entity_names = [&](const std::vector<Link>& links) {
    for (const auto& l : links) {
      out.push_back(l.to_id);
      if (const auto* e = corpus.find_entity(l.to_id)) {
        out.push_back(e->display_name);
        out.push_back(e->canonical_key);
      }
    }
  };
  if (field == "year") {
    if (r.year) out.push_back(std::to_string(*r.year));
  } else if (field == "type") {
    out.emplace_back(to_string(r.resource_type));
  } else if (field == "status") {
    out.emplace_back(to_string(r.curation_status));
  } else if (field == "product") {
    if (r.usage && r.usage->principal_product) out.emplace_back(to_string(*r.usage->principal_product));
  } else if (field == "context") {
    if (r.usage) out.emplace_back(to_string(r.usage->usage_context));
  } else if (field == "tool") {
    if (r.usage) {
      for (const auto& t : r.usage->coupled_tools) {
        out.emplace_back(to_string(t.kind));
        out.push_back(t.raw_label);
      }
    }
  } else if (field == "segment") {
    if (r.application) out.emplace_back(to_string(r.application->research_segment));
  } else if (field == "fos") {
    if (r.application && r.application->fos_field) {
      out.emplace_back(r.application->fos_field->id());
      out.emplace_back(r.application->fos_field->code());
      out.emplace_back(r.application->fos_field->name());
    }
  } else if (field == "material") {
    if (r.application) {
      for (auto m : r.application->material_families) out.emplace_back(to_string(m));
    }
  } else if (field == "scope") {
    if (r.application && r.application->scope_depth) out.emplace_back(to_string(*r.application->scope_depth));
  } else if (field == "title") {
    out.push_back(r.title);
  } else if (field == "venue") {
    out.push_back(r.venue);
  } else if (field == "abstract") {
    if (r.abstract) out.push_back(*r.abstract);
  } else if (field == "keyword") {
    out = r.keywords;
  } else if (field == "doi") {
    if (r.doi) out.push_back(*r.doi);
  } else if (field == "language") {
    out.push_back(r.language);
  } else if (field == "short_name") {
    out.push_back(r.short_name);
  } else if (field == "id") {
    out.push_back(r.record_id);
  } else if (field == "author") {
    entity_names(r.author_links);
  } else if (field == "institution") {
    entity_names(r.institution_links);
  } else if (field == "country") {
    entity_names(r.country_links);
    for (const auto& l : r.country_links) {
      if (const auto* e = corpus.find_entity(l.to_id)) {
        if (auto it = e->attributes.find("code"); it != e->attributes.end()) out.push_back(it->second);
      }
    }
  }
  return out;
}

bool predicate_matches(const Corpus& corpus, const DocumentRecord& r, const Predicate& p) {
  if (p.op == PredicateOp::Range) {
    if (!r.year) return false;
    return (!p.low || *r.year >= *p.low) && (!p.high || *r.year <= *p.high);
  }
  auto values = values_of(corpus, r, p.field);
  if (p.op == PredicateOp::Contains) {
    const auto needle = fold(p.value);
    return std::any_of(values.begin(), values.end(),
                       [&](const std::string& v) { return fold(v).find(needle) != std::string::npos; });
  }
  std::string wanted = p.value;
  if (p.field == "product") {
    if (auto product = resolve_product(p.value)) wanted = std::string(to_string(*product));
  } else if (p.field == "tool") {
    auto tool = resolve_tool(p.value);
    if (tool.kind != ToolKind::Other) wanted = std::string(to_string(tool.kind));
  }
  return std::any_of(values.begin(), values.end(), [&](const std::string& v) { return fold(v) == fold(wanted); });
}

}  // namespace

std::span<const std::string_view> FilterExpr::fields() { return kFields; }

void FilterExpr::add(Predicate p) {
  if (std::find(kFields.begin(), kFields.end(), p.field) == kFields.end()) {
    throw Error(ErrorCode::UnknownField, "unknown filter field '" + p.field + "'");
  }
  if (p.op == PredicateOp::Range && p.field != "year") {
    throw Error(ErrorCode::MalformedRange, "range predicates apply to numeric fields only, not '" + p.field + "'");
  }
  if (p.op == PredicateOp::Range && p.low && p.high && *p.low > *p.high) {
    throw Error(ErrorCode::MalformedRange, "range lower bound exceeds upper bound");
  }
  predicates_.push_back(std::move(p));
}

FilterExpr FilterExpr::parse(std::string_view input) {
  FilterExpr expr;
  for (const auto& raw_clause : text::split(input, ';')) {
    auto clause = text::trim(raw_clause);
    if (clause.empty()) continue;
    const auto op_pos = clause.find_first_of("=~");
    if (op_pos == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "filter clause '" + std::string(clause) + "' has no operator");
    }
    Predicate p;
    p.field = text::to_lower_ascii(text::trim(clause.substr(0, op_pos)));
    p.value = std::string(text::trim(clause.substr(op_pos + 1)));
    p.op = clause[op_pos] == '~' ? PredicateOp::Contains : PredicateOp::Equals;

    if (std::find(kFields.begin(), kFields.end(), p.field) == kFields.end()) {
      throw Error(ErrorCode::UnknownField, "unknown filter field '" + p.field + "'");
    }
    if (p.op == PredicateOp::Equals && p.field == "year") {
      if (auto dots = p.value.find(".."); dots != std::string::npos) {
        auto lo = std::string_view(p.value).substr(0, dots);
        auto hi = std::string_view(p.value).substr(dots + 2);
        p.op = PredicateOp::Range;
        if (!text::trim(lo).empty()) {
          p.low = parse_int(lo);
          if (!p.low) throw Error(ErrorCode::MalformedRange, "range bound '" + std::string(lo) + "' is not an integer");
        }
        if (!text::trim(hi).empty()) {
          p.high = parse_int(hi);
          if (!p.high) throw Error(ErrorCode::MalformedRange, "range bound '" + std::string(hi) + "' is not an integer");
        }
        if (!p.low && !p.high) throw Error(ErrorCode::MalformedRange, "range has no bounds");
      } else {
        auto y = parse_int(p.value);
        if (!y) throw Error(ErrorCode::MalformedRange, "year '" + p.value + "' is not an integer");
        p.op = PredicateOp::Range;
        p.low = p.high = y;
      }
    }
    expr.add(std::move(p));
  }
  return expr;
}

bool FilterExpr::matches(const Corpus& corpus, const DocumentRecord& record) const {
  return std::all_of(predicates_.begin(), predicates_.end(),
                     [&](const Predicate& p) { return predicate_matches(corpus, record, p); });
}

std::string FilterExpr::to_string() const {
  std::string out;
  for (const auto& p : predicates_) {
    if (!out.empty()) out += ';';
    out += p.field;
    if (p.op == PredicateOp::Range) {
      out += '=';
      if (p.low && p.high && *p.low == *p.high) {
        out += std::to_string(*p.low);
      } else {
        if (p.low) out += std::to_string(*p.low);
        out += "..";
        if (p.high) out += std::to_string(*p.high);
      }
    } else {
      out += p.op == PredicateOp::Contains ? '~' : '=';
      out += p.value;
    }
  }
  return out;
}

std::vector<const DocumentRecord*> query(const Corpus& corpus, const FilterExpr& filter) {
  std::vector<const DocumentRecord*> out;
  for (const auto* r : corpus.ordered_records()) {
    if (filter.matches(corpus, *r)) out.push_back(r);
  }
  return out;
}

Corpus restrict(const Corpus& corpus, const FilterExpr& filter) {
  if (filter.empty()) return corpus;
  Corpus out;
  out.set_meta(corpus.meta());
  for (const auto& [id, e] : corpus.entities()) out.load_entity_unchecked(e);
  for (const auto& l : corpus.entity_links()) out.load_entity_link_unchecked(l);
  for (const auto* r : query(corpus, filter)) out.load_record_unchecked(*r);
  for (const auto& a : corpus.audit()) {
    if (out.find_record(a.record_id)) out.append_audit(a);
  }
  return out;
}

}  // namespace litmon
