#pragma once

// Indicators, networks and flows computed from a corpus snapshot. Every
// function here reads only Validated records and is a pure function of its
// input, so results are reproducible byte for byte once serialized.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon {

/// Validated records in (year, short_name) order.
std::vector<const DocumentRecord*> validated_records(const Corpus& corpus);

// --- yearly histogram ----------------------------------------------------------

struct YearCount {
  int year = 0;
  int count = 0;
  int cumulative = 0;

  bool operator==(const YearCount&) const = default;
};

struct YearHistogram {
  std::vector<YearCount> years;  // contiguous, missing years filled with 0
  int total = 0;
  int undated = 0;                  // validated records without a year
  std::optional<int> partial_year;  // final year cut short by the collection date
};

/// Range bounds default to the first and last year present. Throws
/// EmptyCorpus when there is no validated record.
YearHistogram yearly_histogram(const Corpus& corpus, std::optional<int> from = std::nullopt,
                               std::optional<int> to = std::nullopt);

// --- distributions -------------------------------------------------------------

enum class Dimension : std::uint8_t { ResourceType, Country, Institution, Product, FosField };
enum class Counting : std::uint8_t { AllLinks, FirstAuthorOnly };

std::string_view to_string(Dimension d);
std::string_view to_string(Counting c);
std::optional<Dimension> parse_dimension(std::string_view name);  // "resource-type", "fos", ...
std::optional<Counting> parse_counting(std::string_view name);    // "all", "first-author"

struct LabelCount {
  std::string label;
  int count = 0;

  bool operator==(const LabelCount&) const = default;
};

struct Distribution {
  Dimension dimension = Dimension::ResourceType;
  Counting counting = Counting::AllLinks;
  std::vector<LabelCount> entries;  // count descending, then label
  int records = 0;                  // validated records considered
  int unassigned = 0;               // records contributing no label
};

/// Resource type, product and FOS field give one label per record.
/// Country counts each distinct country of a record once (AllLinks) or only
/// the first author's country (FirstAuthorOnly). Institution requires
/// FirstAuthorOnly: the first author's affiliation, one per record. Throws
/// InvalidArgument for Institution with AllLinks, MissingOrdinal when a
/// record has no first author under FirstAuthorOnly.
Distribution distribution(const Corpus& corpus, Dimension dimension, Counting counting);

// --- usage shares --------------------------------------------------------------

struct UsageShare {
  std::string flag;
  int records = 0;
  double percentage = 0.0;  // rounded to 0.1

  bool operator==(const UsageShare&) const = default;
};

struct UsageShares {
  int total = 0;
  std::vector<UsageShare> shares;  // fixed flag order
};

/// Share of validated records with each usage flag set. Throws EmptyCorpus.
UsageShares usage_shares(const Corpus& corpus);

// --- weighted graphs -----------------------------------------------------------

struct GraphNode {
  std::string id;
  std::string label;
  int doc_count = 0;
  int total_link_strength = 0;
  double overlay_score = 0.0;  // mean publication year of the node's documents
  std::optional<int> cluster;

  bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
  std::string a;  // a < b
  std::string b;
  int weight = 0;

  bool operator==(const GraphEdge&) const = default;
};

struct WeightedGraph {
  std::vector<GraphNode> nodes;  // by id
  std::vector<GraphEdge> edges;  // by (a, b)
  int cluster_count = 0;         // 0 when not clustered

  const GraphNode* find(std::string_view id) const;
  /// Connected components as sorted id lists, largest first.
  std::vector<std::vector<std::string>> components() const;
};

/// Authors with at least `min_docs` validated documents; edge weight is the
/// number of documents a pair co-authored. Node ids are author canonical
/// keys.
WeightedGraph coauthorship_graph(const Corpus& corpus, int min_docs = 3);

/// Greedy (Clauset-Newman-Moore) modularity maximization. Merges the pair
/// of communities with the largest modularity gain while the gain is
/// positive; ties go to the pair whose smallest node labels sort first, so
/// the result is deterministic. Sets node.cluster (0 = largest cluster)
/// and cluster_count.
void cluster_greedy_modularity(WeightedGraph& graph, double resolution = 1.0);

/// Newman modularity of a partition (node id -> community).
double modularity(const WeightedGraph& graph, const std::map<std::string, int>& partition, double resolution = 1.0);

// --- terms ---------------------------------------------------------------------

class StopWords {
 public:
  /// data/stopwords.txt.
  static const StopWords& bundled();
  static StopWords parse(std::string_view text);  // one word per line, '#' comments
  bool contains(std::string_view word) const { return words_.count(std::string(word)) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

/// Lowercases, folds diacritics, splits on anything but letters and digits,
/// drops stop words, numbers and one-letter tokens, and folds plurals:
/// "-ies" -> "-y", "-sses/-xes/-ches/-shes" lose "es", otherwise a trailing
/// 's' is dropped unless it follows 's', 'u' or 'i' (length > 3).
/// Returns the tokens with their positions so that bigrams only join words
/// adjacent in the original text.
struct Token {
  std::string term;
  std::size_t position = 0;
};
std::vector<Token> tokenize(std::string_view text, const StopWords& stopwords);
std::string stem(std::string_view word);

/// Keyword phrase normalized the same way, words kept together ("Eco
/// Audits" -> "eco audit"); empty when nothing remains.
std::string normalize_phrase(std::string_view phrase, const StopWords& stopwords);

/// Unigrams and bigrams of adjacent retained tokens.
std::vector<std::string> text_terms(std::string_view text, const StopWords& stopwords);

struct TermStat {
  std::string term;
  int count = 0;
  double share = 0.0;  // percent of all retained term occurrences

  bool operator==(const TermStat&) const = default;
};

/// Keyword phrases count as one term each; titles add unigrams and bigrams.
/// Sorted by count descending, then term. `top` limits the list (0 = all);
/// shares always use the full total.
std::vector<TermStat> term_frequencies(const Corpus& corpus, const StopWords& stopwords = StopWords::bundled(),
                                       std::size_t top = 0);

/// Terms of each validated record for the co-occurrence map: keyword
/// phrases plus abstract unigrams and bigrams, each counted once per record.
/// Nodes are terms found in at least `min_occurrence` records; edge weight
/// is the number of records containing both terms. The graph is clustered
/// with cluster_greedy_modularity. Throws InvalidArgument if
/// min_occurrence < 1.
WeightedGraph term_cooccurrence(const Corpus& corpus, int min_occurrence,
                                const StopWords& stopwords = StopWords::bundled());

// --- flows -----------------------------------------------------------------------

enum class FlowDimension : std::uint8_t { Fos, Product, MaterialFamily, ResourceType, UsageContext, Segment, Tool };

std::string_view to_string(FlowDimension d);
std::optional<FlowDimension> parse_flow_dimension(std::string_view name);  // "fos", "product", "material", ...

struct Flow {
  std::string source;
  std::string target;
  double value = 0.0;

  bool operator==(const Flow&) const = default;
};

struct FlowSet {
  FlowDimension source_dimension = FlowDimension::Fos;
  FlowDimension target_dimension = FlowDimension::Product;
  std::vector<Flow> flows;  // by (source, target)
  bool normalized = false;
  int skipped = 0;  // records lacking a source or target value
};

/// One flow unit per (source value, target value) pair of each validated
/// record; multi-valued dimensions (material families, tools) give one pair
/// per value.
FlowSet sankey_flows(const Corpus& corpus, FlowDimension source, FlowDimension target, bool normalized);

/// Rescales each source's outgoing flows to percentages summing to 100.
FlowSet normalize_flows(const FlowSet& flows);

// --- coupled tools ---------------------------------------------------------------

struct ToolCount {
  ToolKind tool = ToolKind::Other;
  std::string label;
  int count = 0;              // records naming the tool
  double percentage = 0.0;    // of all tool occurrences
  double record_share = 0.0;  // of coupled records

  bool operator==(const ToolCount&) const = default;
};

struct CoupledToolReport {
  std::vector<ToolCount> tools;  // count descending, then label
  int coupled_records = 0;       // records with at least one coupled tool
  int occurrences = 0;           // sum of counts
  int records = 0;               // validated records considered
};

/// A record counts once per distinct tool kind; unknown tools aggregate in
/// Other.
CoupledToolReport coupled_tool_distribution(const Corpus& corpus);

// --- field / time matrix ---------------------------------------------------------

struct FieldYearColumn {
  int year = 0;
  int records = 0;
  std::vector<double> percentages;  // aligned with FieldTimeMatrix::fields; empty when records == 0
  bool partial = false;
};

struct FieldTimeMatrix {
  std::vector<FosField> fields;  // fields present in the range, taxonomy order
  std::vector<FieldYearColumn> columns;
};

/// Percentage of records per FOS field within each year of [from, to].
FieldTimeMatrix field_time_matrix(const Corpus& corpus, int from = 2015, int to = 2025);

}  // namespace litmon
