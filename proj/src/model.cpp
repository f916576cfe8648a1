#include "litmon/model.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>

#include "litmon/text.hpp"

namespace litmon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidEnumValue: return "InvalidEnumValue";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::DuplicateShortName: return "DuplicateShortName";
    case ErrorCode::DanglingLink: return "DanglingLink";
    case ErrorCode::UnknownRecord: return "UnknownRecord";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::UnknownDepth: return "UnknownDepth";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::MalformedRange: return "MalformedRange";
    case ErrorCode::EntityInUse: return "EntityInUse";
    case ErrorCode::VocabularyViolation: return "VocabularyViolation";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ServiceUnavailable: return "ServiceUnavailable";
    case ErrorCode::MalformedResponse: return "MalformedResponse";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::MissingOrdinal: return "MissingOrdinal";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BindFailure: return "BindFailure";
  }
  return "Unknown";
}

const Link* DocumentRecord::first_author() const {
  for (const auto& link : author_links) {
    if (link.ordinal == 1) return &link;
  }
  return nullptr;
}

namespace issue_code {
namespace {
constexpr std::string_view kAll[] = {
    kMissingYear,     kMissingTitle,       kMissingAuthors,     kMissingUsage,         kMissingProduct,
    kDanglingLink,    kDuplicateCanonicalKey, kYearOutOfBounds, kUnmappedFosLabel,     kPartialYearCoverage,
    kDuplicateOrdinal, kInvalidDoi,        kUnparseableName,    kDefaultedType,
};
}  // namespace
std::span<const std::string_view> all() { return kAll; }
}  // namespace issue_code

std::optional<YearMonth> parse_year_month(std::string_view input) {
  input = text::trim(input);
  YearMonth ym;
  auto [p, ec] = std::from_chars(input.data(), input.data() + input.size(), ym.year);
  if (ec != std::errc{} || p - input.data() != 4) return std::nullopt;
  std::string_view rest(p, input.data() + input.size() - p);
  if (rest.empty()) {
    ym.month = 12;
    return ym;
  }
  if (rest.front() != '-') return std::nullopt;
  rest.remove_prefix(1);
  auto [q, ec2] = std::from_chars(rest.data(), rest.data() + rest.size(), ym.month);
  if (ec2 != std::errc{} || q != rest.data() + rest.size() || ym.month < 1 || ym.month > 12) return std::nullopt;
  return ym;
}

std::string format_year_month(const YearMonth& ym) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", ym.year, ym.month);
  return buf;
}

int current_year() {
  const auto now = std::chrono::system_clock::now();
  const std::chrono::year_month_day ymd{std::chrono::floor<std::chrono::days>(now)};
  return static_cast<int>(ymd.year());
}

std::optional<std::string> normalize_doi(std::string_view raw) {
  std::string_view s = text::trim(raw);
  for (std::string_view prefix : {"https://doi.org/", "http://doi.org/", "https://dx.doi.org/", "http://dx.doi.org/",
                                  "doi.org/", "doi:", "doi "}) {
    if (text::starts_with_ci(s, prefix)) {
      s.remove_prefix(prefix.size());
      s = text::trim(s);
      break;
    }
  }
  if (s.size() < 6 || s.substr(0, 3) != "10.") return std::nullopt;
  std::size_t i = 3;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  // Registrant codes may carry sub-divisions ("10.1000.10/...").
  while (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  }
  if (digits < 4 || digits > 9 || i >= s.size() || s[i] != '/' || i + 1 >= s.size()) return std::nullopt;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return text::to_lower_ascii(s);
}

}  // namespace litmon
