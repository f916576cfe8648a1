#pragma once

// Independent reference computations used by the acceptance checks. They
// work from plain inputs (author lists, edge lists) and share no code with
// the library's analytics.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct AuthorStats {
  int docs = 0;
  int link_strength = 0;
  double mean_year = 0.0;  // 0 when no dated document
};

struct CoauthorNetwork {
  std::map<std::string, AuthorStats> nodes;
  std::map<std::pair<std::string, std::string>, int> edges;  // first < second
};

/// Brute-force co-authorship: every document is a set of author keys with
/// an optional year. Authors below `min_docs` are dropped together with
/// their edges; link strength sums the weights of the remaining edges.
CoauthorNetwork coauthors(const std::vector<std::pair<std::vector<std::string>, std::optional<int>>>& docs,
                          int min_docs);

using WeightedEdges = std::map<std::pair<std::string, std::string>, double>;

double modularity(const std::vector<std::string>& nodes, const WeightedEdges& edges,
                  const std::map<std::string, int>& partition);

struct BestPartition {
  std::map<std::string, int> partition;  // canonical labels: blocks numbered by first node
  double modularity = 0.0;
  int blocks = 0;
};

/// Enumerates every set partition (restricted growth strings) and keeps the
/// one with the highest modularity. Exponential; for a handful of nodes.
BestPartition best_partition(const std::vector<std::string>& nodes, const WeightedEdges& edges);

/// Relabels blocks in order of first appearance over `nodes`.
std::map<std::string, int> canonical(const std::vector<std::string>& nodes, const std::map<std::string, int>& partition);

}  // namespace oracle
