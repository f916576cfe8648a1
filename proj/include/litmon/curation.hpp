#pragma once

// Extrinsic metadata: the operational-use inclusion gate, annotations in
// the controlled vocabularies, FOS label mapping and quality checks.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "litmon/corpus.hpp"

namespace litmon {

// --- inclusion gate ----------------------------------------------------------

enum class Verdict : std::uint8_t { Include, Exclude };

/// A record is kept when it uses the software for at least one of these.
enum class InclusionCriterion : std::uint8_t { DataAccess, SelectionWorkflow, ChartsTradeoffs, WorkflowIntegration };

std::string_view to_string(Verdict v);
std::string_view to_string(InclusionCriterion c);

inline constexpr std::string_view kReasonMentionOnly = "MentionOnly";

struct InclusionDecision {
  std::string record_id;
  Verdict verdict = Verdict::Exclude;
  std::vector<InclusionCriterion> satisfied_criteria;  // in enum order
  std::string reason;                                   // reason code when excluded

  bool operator==(const InclusionDecision&) const = default;
};

/// Pure decision from curator flags: data_source -> DataAccess,
/// materials or process selection -> SelectionWorkflow, charts ->
/// ChartsTradeoffs, any coupled tool -> WorkflowIntegration. Throws
/// UnknownRecord.
InclusionDecision inclusion_gate(const Corpus& corpus, std::string_view record_id, const UsageDescriptor& annotation);

struct GateOutcome {
  InclusionDecision decision;
  CurationStatus status = CurationStatus::Ingested;
  std::vector<ValidationIssue> issues;
};

/// Runs the gate on the record's stored annotation and moves the record:
/// Exclude -> Excluded; Include -> Validated when the record has an author
/// and a principal product, otherwise it stays Annotated and the missing
/// pieces are reported. Throws UnknownRecord, or InvalidArgument when the
/// record has not been annotated.
GateOutcome apply_gate(Corpus& corpus, std::string_view record_id);

// --- FOS mapping ---------------------------------------------------------------

enum class FosProvenance : std::uint8_t { TableLookup, ManualOverride };

std::string_view to_string(FosProvenance p);

struct FosMapping {
  std::string raw_label;
  std::optional<FosField> fos_field;         // empty when unmapped
  std::optional<FosProvenance> provenance;   // empty when unmapped

  bool operator==(const FosMapping&) const = default;
};

/// Raw field label -> FOS category table. The file format is two
/// tab-separated columns (label, FOS code or identifier); '#' starts a
/// comment line.
class FosTable {
 public:
  /// The table shipped in data/fos_map.tsv.
  static const FosTable& bundled();
  /// Throws InvalidRecord naming the offending line.
  static FosTable parse(std::string_view tsv);
  static FosTable load(const std::filesystem::path& path);

  /// Case- and whitespace-insensitive exact lookup; overrides win.
  FosMapping map(std::string_view raw_label) const;
  void set_override(std::string_view raw_label, FosField field);
  std::size_t size() const { return table_.size(); }

 private:
  static std::string key(std::string_view label);
  std::map<std::string, FosField> table_;
  std::map<std::string, FosField> overrides_;
};

FosMapping map_fos(std::string_view raw_label);

// --- annotation ----------------------------------------------------------------

struct Annotation {
  UsageDescriptor usage;
  ApplicationContext context;
  std::string curator;
};

/// Reads an annotation document:
///
///   {"curator": "...",
///    "usage": {"principal_product": "CES EduPack", "product_version": ...,
///              "sub_products": [...], "usage_context": "Education",
///              "coupled_tools": ["ANSYS Mechanical", ...],
///              "flags": {"data_source": true, ...}},
///    "context": {"raw_field_labels": [...], "fos_field": "2.5",
///                "research_segment": "Academia", "material_families": [...],
///                "process_families": [...], "scope_depth": "Medium",
///                "notes": "..."}}
///
/// Product names go through the alias table and tool names through the tool
/// vocabulary. When fos_field is absent it is looked up from the raw labels.
/// Throws VocabularyViolation for values outside a controlled vocabulary and
/// InvalidArgument when the text is not JSON.
Annotation parse_annotation(const nlohmann::ordered_json& doc, const FosTable& fos = FosTable::bundled());
Annotation parse_annotation(std::string_view json_text, const FosTable& fos = FosTable::bundled());
inline Annotation parse_annotation(const std::string& json_text, const FosTable& fos = FosTable::bundled()) {
  return parse_annotation(std::string_view(json_text), fos);
}
inline Annotation parse_annotation(const char* json_text, const FosTable& fos = FosTable::bundled()) {
  return parse_annotation(std::string_view(json_text), fos);
}

/// Stores the descriptors, moves the record to Annotated, links product and
/// field entities and appends an audit entry. `timestamp` defaults to now
/// (UTC). Throws UnknownRecord or VocabularyViolation.
DocumentRecord apply_annotation(Corpus& corpus, std::string_view record_id, const UsageDescriptor& usage,
                                const ApplicationContext& context, std::string_view curator,
                                std::optional<std::string> timestamp = std::nullopt);

std::string utc_timestamp_now();

/// Entities that annotated records link to: products keyed by vocabulary
/// name, FOS fields keyed by code.
EntityRecord product_entity(Product product);
EntityRecord fos_entity(FosField field);

// --- quality checks ------------------------------------------------------------

/// Consistency report over the whole corpus, ordered by record id, then
/// severity and code.
/// Running it twice on the same corpus yields the same list.
std::vector<ValidationIssue> quality_check(const Corpus& corpus, const FosTable& fos = FosTable::bundled());

/// Issues at or above `minimum` (Error > Warning > Info).
std::vector<ValidationIssue> filter_severity(std::vector<ValidationIssue> issues, Severity minimum);

}  // namespace litmon
