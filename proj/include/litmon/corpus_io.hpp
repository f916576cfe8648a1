#pragma once

// Line-delimited corpus file format.
//
// UTF-8, one JSON object per line, each carrying a "type" key:
//
//   {"type":"header","format":"litmon-corpus","version":1,...meta}
//   {"type":"section","name":"entities"}
//   {"type":"entity",...}          one per entity
//   {"type":"entity_link",...}     entity-to-entity links
//   {"type":"section","name":"documents"}
//   {"type":"document",...}        document with its link tables inline
//   {"type":"audit",...}           annotation history, in append order
//
// Files are append-safe: a later "document" or "entity" line with an id
// seen before replaces the earlier one, so a writer may append updated
// records instead of rewriting the file.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "litmon/corpus.hpp"
#include "litmon/model.hpp"

namespace litmon {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kCorpusFormat = "litmon-corpus";
inline constexpr int kCorpusFormatVersion = 1;

Json to_json(const Link& link);
Json to_json(const UsageDescriptor& usage);
Json to_json(const ApplicationContext& context);
Json to_json(const IntrinsicRecord& record);
Json to_json(const DocumentRecord& record);
Json to_json(const EntityRecord& entity);
Json to_json(const ValidationIssue& issue);
Json to_json(const AuditEntry& entry);
Json to_json(const Subgraph& graph);

// Decoders throw InvalidEnumValue for out-of-vocabulary enum names and
// InvalidRecord for structurally malformed objects.
Link link_from_json(const Json& j);
UsageDescriptor usage_from_json(const Json& j);
ApplicationContext context_from_json(const Json& j);
IntrinsicRecord intrinsic_from_json(const Json& j);
DocumentRecord document_from_json(const Json& j);
EntityRecord entity_from_json(const Json& j);
AuditEntry audit_from_json(const Json& j);

struct CorpusLoadResult {
  Corpus corpus;
  /// Lines that could not be decoded; the rest of the file is still loaded.
  std::vector<ValidationIssue> issues;
};

void write_corpus(std::ostream& out, const Corpus& corpus);
std::string write_corpus(const Corpus& corpus);
CorpusLoadResult read_corpus(std::istream& in);
CorpusLoadResult read_corpus(std::string_view text);

/// Atomic replace through a temporary file. Throws IoFailure.
void save_corpus_file(const std::filesystem::path& path, const Corpus& corpus);
CorpusLoadResult load_corpus_file(const std::filesystem::path& path);

/// Appends record and audit lines to an existing corpus file.
void append_corpus_lines(const std::filesystem::path& path, const std::vector<Json>& lines);

Json document_line(const DocumentRecord& record);
Json audit_line(const AuditEntry& entry);

}  // namespace litmon
