#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/vocabulary.hpp"

namespace litmon {

/// Typed edge between a document and an entity, or between two entities.
/// For AuthoredBy, `ordinal` is the author position (1 = first author). For
/// AffiliatedWith and LocatedIn links held by a document it is the position
/// of the author the affiliation belongs to, when known.
struct Link {
  std::string from_id;
  std::string to_id;
  LinkType link_type = LinkType::AuthoredBy;
  std::optional<int> ordinal;

  auto operator<=>(const Link&) const = default;
};

struct UsageFlags {
  bool data_source = false;
  bool materials_selection = false;
  bool process_selection = false;
  bool charts = false;
  bool eco_audit = false;
  bool synthesizer = false;

  auto operator<=>(const UsageFlags&) const = default;
};

struct UsageDescriptor {
  std::optional<Product> principal_product;
  std::optional<std::string> product_version;
  std::vector<std::string> sub_products;
  UsageContext usage_context = UsageContext::AcademicResearch;
  std::vector<CoupledTool> coupled_tools;
  UsageFlags flags;

  bool operator==(const UsageDescriptor&) const = default;
};

struct ApplicationContext {
  std::vector<std::string> raw_field_labels;
  std::optional<FosField> fos_field;
  ResearchSegment research_segment = ResearchSegment::Academia;
  std::vector<MaterialFamily> material_families;
  std::vector<std::string> process_families;
  std::optional<ScopeDepth> scope_depth;
  std::optional<std::string> notes;

  bool operator==(const ApplicationContext&) const = default;
};

struct Affiliation {
  std::optional<std::size_t> author_index;  // 0-based; empty when unattributed
  std::string raw;

  bool operator==(const Affiliation&) const = default;
};

/// Bibliographic metadata as acquired from a citation file or the metadata
/// service. Fields hold decoded source values; normalization happens when the
/// record is ingested into a corpus.
struct IntrinsicRecord {
  std::string source_key;
  std::string title;
  std::optional<int> year;
  std::optional<int> month;
  std::optional<ResourceType> resource_type_hint;
  std::string venue;
  std::optional<std::string> volume;
  std::optional<std::string> issue;
  std::optional<std::string> publisher;
  std::optional<std::string> abstract;
  std::vector<std::string> keywords;
  std::string language;
  std::optional<std::string> doi;
  std::optional<std::string> url;
  std::vector<std::string> authors;
  std::vector<Affiliation> affiliations;
  SourceFormat raw_source = SourceFormat::Manual;

  bool operator==(const IntrinsicRecord&) const = default;
};

struct DocumentRecord {
  std::string record_id;
  std::string short_name;
  std::string title;
  std::optional<int> year;
  ResourceType resource_type = ResourceType::ReviewedPaper;
  std::string venue;
  std::optional<std::string> volume;
  std::optional<std::string> issue;
  std::optional<std::string> publisher;
  std::optional<std::string> abstract;
  std::vector<std::string> keywords;
  std::string language = "en";
  std::optional<std::string> doi;
  std::optional<std::string> url;
  std::optional<std::string> local_path;
  std::vector<std::string> cited_references;

  std::vector<Link> author_links;
  std::vector<Link> institution_links;
  std::vector<Link> country_links;
  std::vector<Link> product_links;
  std::vector<Link> field_links;

  std::optional<UsageDescriptor> usage;
  std::optional<ApplicationContext> application;
  CurationStatus curation_status = CurationStatus::Ingested;

  /// Metadata exactly as acquired, when the record came through ingestion.
  std::optional<IntrinsicRecord> source;

  bool operator==(const DocumentRecord&) const = default;

  /// Author link with ordinal 1, if any.
  const Link* first_author() const;
};

struct EntityRecord {
  std::string entity_id;
  EntityKind kind = EntityKind::Author;
  std::string display_name;
  std::string canonical_key;
  std::map<std::string, std::string> attributes;

  bool operator==(const EntityRecord&) const = default;
};

struct ValidationIssue {
  std::string record_id;
  Severity severity = Severity::Error;
  std::string code;
  std::string message;

  auto operator<=>(const ValidationIssue&) const = default;
};

/// Closed set of ValidationIssue codes.
namespace issue_code {
inline constexpr std::string_view kMissingYear = "MissingYear";
inline constexpr std::string_view kMissingTitle = "MissingTitle";
inline constexpr std::string_view kMissingAuthors = "MissingAuthors";
inline constexpr std::string_view kMissingUsage = "MissingUsage";
inline constexpr std::string_view kMissingProduct = "MissingProduct";
inline constexpr std::string_view kDanglingLink = "DanglingLink";
inline constexpr std::string_view kDuplicateCanonicalKey = "DuplicateCanonicalKey";
inline constexpr std::string_view kYearOutOfBounds = "YearOutOfBounds";
inline constexpr std::string_view kUnmappedFosLabel = "UnmappedFosLabel";
inline constexpr std::string_view kPartialYearCoverage = "PartialYearCoverage";
inline constexpr std::string_view kDuplicateOrdinal = "DuplicateOrdinal";
inline constexpr std::string_view kInvalidDoi = "InvalidDoi";
inline constexpr std::string_view kUnparseableName = "UnparseableName";
inline constexpr std::string_view kDefaultedType = "DefaultedType";

std::span<const std::string_view> all();
}  // namespace issue_code

struct AuditEntry {
  std::string record_id;
  std::string curator;
  std::string timestamp;  // ISO 8601, UTC
  UsageDescriptor usage;
  ApplicationContext context;

  bool operator==(const AuditEntry&) const = default;
};

struct YearMonth {
  int year = 0;
  int month = 12;

  auto operator<=>(const YearMonth&) const = default;
};

/// Parses "YYYY" or "YYYY-MM".
std::optional<YearMonth> parse_year_month(std::string_view text);
std::string format_year_month(const YearMonth& ym);

struct CorpusMeta {
  /// Date at which document collection stopped; the final year is partial
  /// when the month is before December.
  std::optional<YearMonth> collection_cutoff;
  int year_min = 1990;
  /// Upper bound for record years; the current year when unset.
  std::optional<int> year_max;

  bool operator==(const CorpusMeta&) const = default;
};

int current_year();

/// Returns the normalized DOI (lowercase, resolver prefixes stripped) or
/// nothing if the text does not follow the "10.<registrant>/<suffix>" grammar.
std::optional<std::string> normalize_doi(std::string_view raw);

}  // namespace litmon
