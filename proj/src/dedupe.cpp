#include "litmon/dedupe.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "litmon/text.hpp"

namespace litmon {

std::string_view to_string(MatchKind kind) { return kind == MatchKind::DoiExact ? "DoiExact" : "TitleFuzzy"; }

namespace {

double similarity_of(const std::u32string& a, const std::u32string& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double longest = static_cast<double>(std::max(a.size(), b.size()));
  return 1.0 - static_cast<double>(text::edit_distance(a, b)) / longest;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

double title_similarity(std::string_view a, std::string_view b) {
  return similarity_of(text::decode_utf8(text::normalize_title(a)), text::decode_utf8(text::normalize_title(b)));
}

std::vector<DuplicateCluster> find_duplicates(std::span<const DedupeCandidate> input, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "fuzzy threshold must be in (0, 1]");
  }
  // Work in id order so the result does not depend on input order.
  std::vector<const DedupeCandidate*> records;
  for (const auto& r : input) records.push_back(&r);
  std::sort(records.begin(), records.end(), [](auto* a, auto* b) { return a->id < b->id; });

  std::vector<std::optional<std::string>> dois(records.size());
  std::map<std::string, std::vector<std::size_t>> by_doi;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i]->doi) dois[i] = normalize_doi(*records[i]->doi);
    if (dois[i]) by_doi[*dois[i]].push_back(i);
  }

  std::vector<DuplicateCluster> doi_clusters;
  std::vector<bool> clustered(records.size(), false);
  for (const auto& [doi, members] : by_doi) {
    if (members.size() < 2) continue;
    DuplicateCluster c;
    c.match_kind = MatchKind::DoiExact;
    for (auto i : members) {
      c.members.push_back(records[i]->id);
      clustered[i] = true;
    }
    doi_clusters.push_back(std::move(c));
  }

  std::map<int, std::vector<std::size_t>> by_year;
  std::vector<std::u32string> titles(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (clustered[i] || !records[i]->year) continue;
    titles[i] = text::decode_utf8(text::normalize_title(records[i]->title));
    if (!titles[i].empty()) by_year[*records[i]->year].push_back(i);
  }

  UnionFind uf(records.size());
  struct Edge {
    std::size_t a, b;
    double score;
  };
  std::vector<Edge> edges;
  for (const auto& [year, members] : by_year) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const auto i = members[x];
        const auto j = members[y];
        if (dois[i] && dois[j] && *dois[i] != *dois[j]) continue;
        const double shorter = static_cast<double>(std::min(titles[i].size(), titles[j].size()));
        const double longer = static_cast<double>(std::max(titles[i].size(), titles[j].size()));
        if (shorter / longer < threshold) continue;  // similarity cannot reach the threshold
        const double s = similarity_of(titles[i], titles[j]);
        if (s >= threshold) edges.push_back({i, j, s});
      }
    }
  }
  // Strongest links first; a link that would put two different DOIs in one
  // cluster is dropped, so the closure never joins distinct DOIs either.
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.score > y.score; });
  std::vector<std::optional<std::string>> root_doi = dois;
  std::vector<Edge> applied;
  for (const auto& e : edges) {
    const auto ra = uf.find(e.a);
    const auto rb = uf.find(e.b);
    if (ra == rb) {
      applied.push_back(e);
      continue;
    }
    if (root_doi[ra] && root_doi[rb] && *root_doi[ra] != *root_doi[rb]) continue;
    const auto doi = root_doi[ra] ? root_doi[ra] : root_doi[rb];
    uf.unite(ra, rb);
    root_doi[uf.find(ra)] = doi;
    applied.push_back(e);
  }

  std::map<std::size_t, DuplicateCluster> fuzzy;
  for (const auto& e : applied) {
    auto& c = fuzzy[uf.find(e.a)];
    c.match_kind = MatchKind::TitleFuzzy;
    c.score = c.members.empty() ? e.score : std::min(c.score, e.score);
    c.members.push_back(records[e.a]->id);
    c.members.push_back(records[e.b]->id);
  }

  auto by_first_member = [](const DuplicateCluster& a, const DuplicateCluster& b) {
    return a.members.front() < b.members.front();
  };
  std::sort(doi_clusters.begin(), doi_clusters.end(), by_first_member);
  std::vector<DuplicateCluster> out = std::move(doi_clusters);
  std::vector<DuplicateCluster> title_clusters;
  for (auto& [root, c] : fuzzy) {
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    title_clusters.push_back(std::move(c));
  }
  std::sort(title_clusters.begin(), title_clusters.end(), by_first_member);
  for (auto& c : title_clusters) out.push_back(std::move(c));
  return out;
}

std::vector<DuplicateCluster> dedupe_corpus(const Corpus& corpus, double threshold) {
  std::vector<DedupeCandidate> candidates;
  for (const auto& [id, r] : corpus.records()) candidates.push_back({id, r.title, r.year, r.doi});
  return find_duplicates(candidates, threshold);
}

}  // namespace litmon
