#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "litmon/corpus.hpp"

namespace litmon {

enum class ExportFormat : std::uint8_t { LineDelimited, Csv };

std::optional<ExportFormat> parse_export_format(std::string_view name);  // "jsonl" | "csv"

/// Flattened one-row-per-record view, ordered by (year, short_name).
/// Columns:
///
///   record_id, short_name, title, year, resource_type, venue, doi,
///   language, curation_status, principal_product, product_version,
///   usage_context, coupled_tools, data_source, materials_selection,
///   process_selection, charts, eco_audit, synthesizer, fos_field,
///   research_segment, material_families, scope_depth, authors,
///   institutions, countries
///
/// List cells are joined with "; ". Booleans are "true"/"false"; absent
/// values are empty cells.
std::string corpus_csv(const Corpus& corpus);

/// LineDelimited is the lossless corpus file format; Csv is the flattened
/// view above. Throws IoFailure.
void export_corpus(const Corpus& corpus, const std::filesystem::path& path, ExportFormat format);

}  // namespace litmon
