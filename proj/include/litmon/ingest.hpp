#pragma once

// Acquisition of intrinsic metadata: citation-file parsers, author name
// normalization, and loading parsed records into a corpus.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/corpus.hpp"
#include "litmon/model.hpp"

namespace litmon {

/// A positioned problem found while parsing a citation file. `code` is one
/// of SyntaxError, MissingTerminator or EmptyInput.
struct ParseError {
  std::size_t line = 0;
  std::string code;
  std::string reason;

  bool operator==(const ParseError&) const = default;
};

struct ParseResult {
  std::vector<IntrinsicRecord> records;
  std::vector<ParseError> errors;
};

/// BibTeX reader. Supports {} and "" delimited values, `#` concatenation,
/// @string macros and the standard month macros; @comment and @preamble are
/// skipped; crossref inheritance is not resolved. Entries are delimited by
/// lines starting with '@', so a malformed entry is reported and parsing
/// resumes at the next entry.
ParseResult parse_bibtex(std::string_view text);

/// RIS reader ("TY  - JOUR" ... "ER  -"). PY takes precedence over DA for
/// the year; DA contributes the month.
ParseResult parse_ris(std::string_view text);

/// Writers for the same formats. Reading their output back gives the same
/// records (raw_source aside, which names the reader).
std::string write_bibtex(std::span<const IntrinsicRecord> records);
std::string write_ris(std::span<const IntrinsicRecord> records);

struct NormalizedName {
  std::string display_name;   // "Family, I. J."
  std::string canonical_key;  // "family_ij", diacritics folded
  bool parsed = true;         // false when kept as-is (single token, ...)
};

/// Accepts "Family, Given" and "Given Family" forms. Throws InvalidArgument
/// for blank input.
NormalizedName normalize_author_name(std::string_view raw);

struct IngestOutcome {
  std::string record_id;
  std::vector<ValidationIssue> issues;
};

/// Creates the document, its author/institution/country entities and links,
/// and keeps the acquired metadata as the record's source. Re-ingesting an
/// identical record returns the existing id.
IngestOutcome ingest_record(Corpus& corpus, const IntrinsicRecord& record);

/// Recognizes a country in a free-text affiliation ("..., Cambridge, UK").
struct CountryInfo {
  std::string_view code;  // ISO 3166-1 alpha-2
  std::string_view name;
};
std::optional<CountryInfo> find_country(std::string_view affiliation);

/// Institution name extracted from an affiliation string.
std::string institution_name(std::string_view affiliation);

}  // namespace litmon
