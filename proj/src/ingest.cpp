#include <algorithm>
#include <array>
#include <set>

#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

struct CountryAlias {
  std::string_view alias;
  std::string_view code;
  std::string_view name;
};

// Matched against the trailing words of an affiliation segment.
constexpr std::array kCountries = std::to_array<CountryAlias>({
    {"united kingdom", "GB", "United Kingdom"},
    {"uk", "GB", "United Kingdom"},
    {"u k", "GB", "United Kingdom"},
    {"great britain", "GB", "United Kingdom"},
    {"england", "GB", "United Kingdom"},
    {"scotland", "GB", "United Kingdom"},
    {"wales", "GB", "United Kingdom"},
    {"northern ireland", "GB", "United Kingdom"},
    {"united states", "US", "United States"},
    {"united states of america", "US", "United States"},
    {"usa", "US", "United States"},
    {"u s a", "US", "United States"},
    {"us", "US", "United States"},
    {"italy", "IT", "Italy"},
    {"italia", "IT", "Italy"},
    {"france", "FR", "France"},
    {"germany", "DE", "Germany"},
    {"deutschland", "DE", "Germany"},
    {"spain", "ES", "Spain"},
    {"espana", "ES", "Spain"},
    {"portugal", "PT", "Portugal"},
    {"netherlands", "NL", "Netherlands"},
    {"the netherlands", "NL", "Netherlands"},
    {"belgium", "BE", "Belgium"},
    {"switzerland", "CH", "Switzerland"},
    {"austria", "AT", "Austria"},
    {"sweden", "SE", "Sweden"},
    {"norway", "NO", "Norway"},
    {"denmark", "DK", "Denmark"},
    {"finland", "FI", "Finland"},
    {"iceland", "IS", "Iceland"},
    {"ireland", "IE", "Ireland"},
    {"poland", "PL", "Poland"},
    {"czech republic", "CZ", "Czechia"},
    {"czechia", "CZ", "Czechia"},
    {"slovakia", "SK", "Slovakia"},
    {"slovenia", "SI", "Slovenia"},
    {"croatia", "HR", "Croatia"},
    {"serbia", "RS", "Serbia"},
    {"hungary", "HU", "Hungary"},
    {"romania", "RO", "Romania"},
    {"bulgaria", "BG", "Bulgaria"},
    {"greece", "GR", "Greece"},
    {"cyprus", "CY", "Cyprus"},
    {"malta", "MT", "Malta"},
    {"estonia", "EE", "Estonia"},
    {"latvia", "LV", "Latvia"},
    {"lithuania", "LT", "Lithuania"},
    {"luxembourg", "LU", "Luxembourg"},
    {"turkey", "TR", "Turkey"},
    {"turkiye", "TR", "Turkey"},
    {"russia", "RU", "Russia"},
    {"russian federation", "RU", "Russia"},
    {"ukraine", "UA", "Ukraine"},
    {"israel", "IL", "Israel"},
    {"iran", "IR", "Iran"},
    {"iraq", "IQ", "Iraq"},
    {"saudi arabia", "SA", "Saudi Arabia"},
    {"united arab emirates", "AE", "United Arab Emirates"},
    {"uae", "AE", "United Arab Emirates"},
    {"qatar", "QA", "Qatar"},
    {"jordan", "JO", "Jordan"},
    {"egypt", "EG", "Egypt"},
    {"morocco", "MA", "Morocco"},
    {"algeria", "DZ", "Algeria"},
    {"tunisia", "TN", "Tunisia"},
    {"nigeria", "NG", "Nigeria"},
    {"ghana", "GH", "Ghana"},
    {"kenya", "KE", "Kenya"},
    {"ethiopia", "ET", "Ethiopia"},
    {"south africa", "ZA", "South Africa"},
    {"india", "IN", "India"},
    {"pakistan", "PK", "Pakistan"},
    {"bangladesh", "BD", "Bangladesh"},
    {"sri lanka", "LK", "Sri Lanka"},
    {"china", "CN", "China"},
    {"p r china", "CN", "China"},
    {"pr china", "CN", "China"},
    {"peoples republic of china", "CN", "China"},
    {"hong kong", "HK", "Hong Kong"},
    {"taiwan", "TW", "Taiwan"},
    {"japan", "JP", "Japan"},
    {"south korea", "KR", "South Korea"},
    {"korea", "KR", "South Korea"},
    {"republic of korea", "KR", "South Korea"},
    {"singapore", "SG", "Singapore"},
    {"malaysia", "MY", "Malaysia"},
    {"indonesia", "ID", "Indonesia"},
    {"thailand", "TH", "Thailand"},
    {"vietnam", "VN", "Vietnam"},
    {"viet nam", "VN", "Vietnam"},
    {"philippines", "PH", "Philippines"},
    {"australia", "AU", "Australia"},
    {"new zealand", "NZ", "New Zealand"},
    {"canada", "CA", "Canada"},
    {"mexico", "MX", "Mexico"},
    {"brazil", "BR", "Brazil"},
    {"brasil", "BR", "Brazil"},
    {"argentina", "AR", "Argentina"},
    {"chile", "CL", "Chile"},
    {"colombia", "CO", "Colombia"},
    {"peru", "PE", "Peru"},
    {"ecuador", "EC", "Ecuador"},
    {"uruguay", "UY", "Uruguay"},
    {"venezuela", "VE", "Venezuela"},
    {"cuba", "CU", "Cuba"},
});

std::vector<std::string> folded_words(std::string_view s) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text::to_lower_ascii(text::fold_diacritics(s))) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current += c;
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::optional<CountryInfo> match_tail(const std::vector<std::string>& words) {
  // Longest alias first so "united states of america" beats "america".
  for (std::size_t take = std::min<std::size_t>(words.size(), 5); take >= 1; --take) {
    std::string tail;
    for (std::size_t i = words.size() - take; i < words.size(); ++i) {
      if (!tail.empty()) tail += ' ';
      tail += words[i];
    }
    for (const auto& c : kCountries) {
      if (c.alias == tail) return CountryInfo{c.code, c.name};
    }
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, 24> kInstitutionWords = {
    "universit", "institut", "college",   "politecnic", "polytechn", "ecole",  "hochschule", "academy",
    "academia",  "centre",   "center",    "laborator",  "ltd",       "inc",    "gmbh",       "corporation",
    "company",   "s p a",    "srl",       "council",    "agency",    "school", "faculty",    "department",
};

int institution_rank(std::string_view segment) {
  auto s = text::to_lower_ascii(text::fold_diacritics(segment));
  for (std::size_t i = 0; i < kInstitutionWords.size(); ++i) {
    if (s.find(kInstitutionWords[i]) != std::string::npos) {
      // Sub-units (school/faculty/department) rank below the institution.
      return i >= kInstitutionWords.size() - 3 ? 2 : 1;
    }
  }
  return 3;
}

}  // namespace

std::optional<CountryInfo> find_country(std::string_view affiliation) {
  auto segments = text::split(affiliation, ',');
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    auto words = folded_words(*it);
    if (words.empty()) continue;
    if (auto c = match_tail(words)) return c;
    // Only the last non-empty segment and the one before may carry the
    // country ("..., Cambridge CB2 1PZ, UK." or "..., Milano, Italy").
    if (std::distance(segments.rbegin(), it) >= 1) break;
  }
  return std::nullopt;
}

std::string institution_name(std::string_view affiliation) {
  auto segments = text::split(affiliation, ',');
  std::string best;
  int best_rank = 4;
  for (const auto& seg : segments) {
    auto cleaned = text::collapse_whitespace(seg);
    while (!cleaned.empty() && (cleaned.back() == '.' || cleaned.back() == ';')) cleaned.pop_back();
    if (cleaned.empty()) continue;
    int rank = institution_rank(cleaned);
    if (rank < best_rank) {
      best_rank = rank;
      best = cleaned;
    }
  }
  return best;
}

IngestOutcome ingest_record(Corpus& corpus, const IntrinsicRecord& source) {
  std::vector<ValidationIssue> issues;
  auto warn = [&](std::string_view code, std::string message) {
    issues.push_back({"", Severity::Warning, std::string(code), std::move(message)});
  };

  DocumentRecord doc;
  doc.title = text::collapse_whitespace(source.title);
  doc.year = source.year;
  if (source.resource_type_hint) {
    doc.resource_type = *source.resource_type_hint;
  } else {
    doc.resource_type = ResourceType::ReviewedPaper;
    warn(issue_code::kDefaultedType, "resource type unknown; defaulted to ReviewedPaper");
  }
  doc.venue = source.venue;
  doc.volume = source.volume;
  doc.issue = source.issue;
  doc.publisher = source.publisher;
  doc.abstract = source.abstract;
  doc.keywords = source.keywords;
  if (!source.language.empty()) doc.language = text::to_lower_ascii(text::trim(source.language));
  if (source.doi) {
    if (auto doi = normalize_doi(*source.doi)) {
      doc.doi = *doi;
    } else {
      warn(issue_code::kInvalidDoi, "DOI '" + *source.doi + "' is malformed and was not stored");
    }
  }
  doc.url = source.url;
  doc.source = source;

  if (doc.title.empty()) warn(issue_code::kMissingTitle, "record has no title");
  if (!doc.year) warn(issue_code::kMissingYear, "record has no year");
  if (source.authors.empty()) warn(issue_code::kMissingAuthors, "record has no authors");

  // Author position in the source -> ordinal after dropping repeated names.
  std::vector<std::optional<int>> ordinal_of(source.authors.size());
  std::set<std::string> seen_authors;
  for (std::size_t i = 0; i < source.authors.size(); ++i) {
    NormalizedName name;
    try {
      name = normalize_author_name(source.authors[i]);
    } catch (const Error&) {
      continue;
    }
    if (!name.parsed) {
      warn(issue_code::kUnparseableName, "author name '" + source.authors[i] + "' kept as written");
    }
    if (name.canonical_key.empty()) continue;
    EntityRecord author;
    author.kind = EntityKind::Author;
    author.display_name = name.display_name;
    author.canonical_key = name.canonical_key;
    const auto id = corpus.upsert_entity(std::move(author));
    if (!seen_authors.insert(id).second) continue;
    const int ordinal = static_cast<int>(doc.author_links.size()) + 1;
    ordinal_of[i] = ordinal;
    doc.author_links.push_back({"", id, LinkType::AuthoredBy, ordinal});
  }

  std::set<std::pair<std::string, std::optional<int>>> seen_inst;
  std::set<std::pair<std::string, std::optional<int>>> seen_country;
  for (const auto& aff : source.affiliations) {
    std::optional<int> ordinal;
    if (aff.author_index && *aff.author_index < ordinal_of.size()) ordinal = ordinal_of[*aff.author_index];

    std::string inst_id;
    const auto inst = institution_name(aff.raw);
    if (!inst.empty() && !text::fold_key(inst).empty()) {
      EntityRecord e;
      e.kind = EntityKind::Institution;
      e.display_name = inst;
      e.canonical_key = text::fold_key(inst);
      inst_id = corpus.upsert_entity(std::move(e));
      if (seen_inst.insert({inst_id, ordinal}).second) {
        doc.institution_links.push_back({"", inst_id, LinkType::AffiliatedWith, ordinal});
      }
    }
    if (auto country = find_country(aff.raw)) {
      EntityRecord e;
      e.kind = EntityKind::Country;
      e.display_name = std::string(country->name);
      e.canonical_key = text::to_lower_ascii(country->code);
      e.attributes["code"] = std::string(country->code);
      const auto country_id = corpus.upsert_entity(std::move(e));
      if (seen_country.insert({country_id, ordinal}).second) {
        doc.country_links.push_back({"", country_id, LinkType::LocatedIn, ordinal});
      }
      if (!inst_id.empty()) corpus.link_entities(inst_id, country_id, LinkType::LocatedIn);
    }
  }

  IngestOutcome out;
  out.record_id = corpus.upsert_record(std::move(doc));
  for (auto& issue : issues) issue.record_id = out.record_id;
  out.issues = std::move(issues);
  return out;
}

}  // namespace litmon
