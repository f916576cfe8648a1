#pragma once

// Duplicate detection over ingested records: exact DOI matches first, then
// fuzzy title matches within the same publication year.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon {

enum class MatchKind : std::uint8_t { DoiExact, TitleFuzzy };

std::string_view to_string(MatchKind kind);

struct DuplicateCluster {
  std::vector<std::string> members;  // sorted record ids
  MatchKind match_kind = MatchKind::DoiExact;
  /// 1.0 for DOI clusters; for title clusters the weakest similarity among
  /// the pairs that joined the cluster, hence always >= the threshold.
  double score = 1.0;

  bool operator==(const DuplicateCluster&) const = default;
};

inline constexpr double kDefaultFuzzyThreshold = 0.90;

/// 1 - edit_distance / max_length over normalize_title() forms; 0 when
/// either title is empty after normalization.
double title_similarity(std::string_view a, std::string_view b);

struct DedupeCandidate {
  std::string id;
  std::string title;
  std::optional<int> year;
  std::optional<std::string> doi;
};

/// Records sharing a normalized DOI form DoiExact clusters. The remaining
/// records are linked when their titles reach `threshold` and their years
/// are equal (and known); clusters are the transitive closure of those
/// links. Two records carrying different DOIs are never linked by title.
/// Output order: DOI clusters, then title clusters, each by first member.
/// Throws InvalidArgument unless 0 < threshold <= 1.
std::vector<DuplicateCluster> find_duplicates(std::span<const DedupeCandidate> records,
                                              double threshold = kDefaultFuzzyThreshold);

std::vector<DuplicateCluster> dedupe_corpus(const Corpus& corpus, double threshold = kDefaultFuzzyThreshold);

}  // namespace litmon
