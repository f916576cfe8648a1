#pragma once

// UTF-8 and text normalization helpers shared by the parsers, the name
// normalizer, deduplication and the term statistics.

#include <string>
#include <string_view>
#include <vector>

namespace litmon::text {

std::u32string decode_utf8(std::string_view input);
std::string encode_utf8(std::u32string_view input);
void append_utf8(std::string& out, char32_t cp);

std::string_view trim(std::string_view s) noexcept;
std::string collapse_whitespace(std::string_view s);
std::string to_lower_ascii(std::string_view s);
bool iequals(std::string_view a, std::string_view b) noexcept;
bool starts_with_ci(std::string_view s, std::string_view prefix) noexcept;
std::vector<std::string> split(std::string_view s, char sep);

/// Replaces accented Latin letters by their base letters ("Bréchet" ->
/// "Brechet", "ß" -> "ss") and drops combining marks. Other code points are
/// kept unchanged.
std::string fold_diacritics(std::string_view s);

/// Folded, lowercased, restricted to [a-z0-9]. Used for canonical keys.
std::string fold_key(std::string_view s);

/// Lowercase, diacritics folded, punctuation removed, whitespace collapsed.
std::string normalize_title(std::string_view s);

/// Decodes LaTeX accent commands, escapes and grouping braces to plain UTF-8.
std::string decode_latex(std::string_view s);

/// Levenshtein distance over Unicode code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

}  // namespace litmon::text
