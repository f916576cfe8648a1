#include "litmon/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "litmon/embedded.hpp"
#include "litmon/text.hpp"

namespace litmon {

std::vector<const DocumentRecord*> validated_records(const Corpus& corpus) {
  std::vector<const DocumentRecord*> out;
  for (const auto* r : corpus.ordered_records()) {
    if (r->curation_status == CurationStatus::Validated) out.push_back(r);
  }
  return out;
}

namespace {

std::optional<int> partial_year_of(const CorpusMeta& meta) {
  if (meta.collection_cutoff && meta.collection_cutoff->month < 12) return meta.collection_cutoff->year;
  return std::nullopt;
}

double round_to(double value, double step) { return std::round(value / step) * step; }

void sort_counts(std::vector<LabelCount>& entries) {
  std::sort(entries.begin(), entries.end(), [](const LabelCount& a, const LabelCount& b) {
    return a.count != b.count ? a.count > b.count : a.label < b.label;
  });
}

}  // namespace

// --- histogram -------------------------------------------------------------------

YearHistogram yearly_histogram(const Corpus& corpus, std::optional<int> from, std::optional<int> to) {
  const auto records = validated_records(corpus);
  if (records.empty()) throw Error(ErrorCode::EmptyCorpus, "no validated records");
  YearHistogram h;
  std::map<int, int> counts;
  for (const auto* r : records) {
    if (!r->year) {
      ++h.undated;
      continue;
    }
    if ((from && *r->year < *from) || (to && *r->year > *to)) continue;
    ++counts[*r->year];
  }
  if (counts.empty() && !(from && to)) return h;
  const int first = from ? *from : counts.begin()->first;
  const int last = to ? *to : counts.rbegin()->first;
  int running = 0;
  for (int y = first; y <= last; ++y) {
    auto it = counts.find(y);
    const int c = it == counts.end() ? 0 : it->second;
    running += c;
    h.years.push_back({y, c, running});
  }
  h.total = running;
  if (auto p = partial_year_of(corpus.meta()); p && *p >= first && *p <= last) h.partial_year = p;
  return h;
}

// --- distributions ---------------------------------------------------------------

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::ResourceType: return "resource-type";
    case Dimension::Country: return "country";
    case Dimension::Institution: return "institution";
    case Dimension::Product: return "product";
    case Dimension::FosField: return "fos";
  }
  return "?";
}

std::string_view to_string(Counting c) { return c == Counting::AllLinks ? "all" : "first-author"; }

std::optional<Dimension> parse_dimension(std::string_view name) {
  auto n = text::to_lower_ascii(name);
  if (n == "resource-type" || n == "type" || n == "resourcetype") return Dimension::ResourceType;
  if (n == "country") return Dimension::Country;
  if (n == "institution") return Dimension::Institution;
  if (n == "product") return Dimension::Product;
  if (n == "fos" || n == "fos-field" || n == "field") return Dimension::FosField;
  return std::nullopt;
}

std::optional<Counting> parse_counting(std::string_view name) {
  auto n = text::to_lower_ascii(name);
  if (n == "all" || n == "all-links") return Counting::AllLinks;
  if (n == "first-author" || n == "first") return Counting::FirstAuthorOnly;
  return std::nullopt;
}

namespace {

// The link attributed to the first author: ordinal 1 first, otherwise the
// first unattributed link when no link carries an ordinal.
const Link* first_author_link(const std::vector<Link>& links) {
  for (const auto& l : links) {
    if (l.ordinal == 1) return &l;
  }
  const bool any_attributed = std::any_of(links.begin(), links.end(), [](const Link& l) { return l.ordinal.has_value(); });
  if (!any_attributed && !links.empty()) return &links.front();
  return nullptr;
}

}  // namespace

Distribution distribution(const Corpus& corpus, Dimension dimension, Counting counting) {
  if (dimension == Dimension::Institution && counting != Counting::FirstAuthorOnly) {
    throw Error(ErrorCode::InvalidArgument, "institution rankings count the first author's affiliation only");
  }
  Distribution d;
  d.dimension = dimension;
  d.counting = counting;
  std::map<std::string, int> counts;
  if (dimension == Dimension::ResourceType) {
    for (auto t : all_enum_values<ResourceType>()) counts[std::string(to_string(t))] = 0;
  } else if (dimension == Dimension::Product) {
    for (auto p : all_enum_values<Product>()) counts[std::string(to_string(p))] = 0;
  }

  auto entity_label = [&](const std::string& id) {
    const auto* e = corpus.find_entity(id);
    return e ? e->display_name : id;
  };

  for (const auto* r : validated_records(corpus)) {
    ++d.records;
    std::vector<std::string> labels;
    switch (dimension) {
      case Dimension::ResourceType:
        labels.emplace_back(to_string(r->resource_type));
        break;
      case Dimension::Product:
        if (r->usage && r->usage->principal_product) labels.emplace_back(to_string(*r->usage->principal_product));
        break;
      case Dimension::FosField:
        if (r->application && r->application->fos_field) labels.emplace_back(r->application->fos_field->name());
        break;
      case Dimension::Country:
      case Dimension::Institution: {
        const auto& links = dimension == Dimension::Country ? r->country_links : r->institution_links;
        if (counting == Counting::FirstAuthorOnly) {
          if (!r->first_author()) {
            throw Error(ErrorCode::MissingOrdinal, "record '" + r->short_name + "' has no first author");
          }
          if (const auto* l = first_author_link(links)) labels.push_back(entity_label(l->to_id));
        } else {
          std::set<std::string> distinct;
          for (const auto& l : links) distinct.insert(l.to_id);
          for (const auto& id : distinct) labels.push_back(entity_label(id));
        }
        break;
      }
    }
    if (labels.empty()) ++d.unassigned;
    for (const auto& label : labels) ++counts[label];
  }
  for (auto& [label, count] : counts) d.entries.push_back({label, count});
  sort_counts(d.entries);
  return d;
}

// --- usage shares ----------------------------------------------------------------

UsageShares usage_shares(const Corpus& corpus) {
  const auto records = validated_records(corpus);
  if (records.empty()) throw Error(ErrorCode::EmptyCorpus, "no validated records");
  using Getter = bool UsageFlags::*;
  static constexpr std::pair<std::string_view, Getter> kFlags[] = {
      {"data_source", &UsageFlags::data_source}, {"materials_selection", &UsageFlags::materials_selection},
      {"process_selection", &UsageFlags::process_selection}, {"charts", &UsageFlags::charts},
      {"eco_audit", &UsageFlags::eco_audit}, {"synthesizer", &UsageFlags::synthesizer},
  };
  UsageShares out;
  out.total = static_cast<int>(records.size());
  for (const auto& [name, member] : kFlags) {
    UsageShare s;
    s.flag = std::string(name);
    for (const auto* r : records) {
      if (r->usage && (r->usage->flags.*member)) ++s.records;
    }
    s.percentage = round_to(100.0 * s.records / out.total, 0.1);
    out.shares.push_back(std::move(s));
  }
  return out;
}

// --- graphs ----------------------------------------------------------------------

const GraphNode* WeightedGraph::find(std::string_view id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id, [](const GraphNode& n, std::string_view v) { return n.id < v; });
  return it != nodes.end() && it->id == id ? &*it : nullptr;
}

std::vector<std::vector<std::string>> WeightedGraph::components() const {
  std::map<std::string, std::string> parent;
  for (const auto& n : nodes) parent[n.id] = n.id;
  std::function<std::string(const std::string&)> root = [&](const std::string& x) {
    auto& p = parent[x];
    if (p != x) p = root(p);
    return p;
  };
  for (const auto& e : edges) {
    auto ra = root(e.a);
    auto rb = root(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& n : nodes) groups[root(n.id)].push_back(n.id);
  std::vector<std::vector<std::string>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

namespace {

// Builds a graph from per-document node sets. `keep` selects node ids.
WeightedGraph build_graph(const std::vector<std::pair<std::vector<std::string>, std::optional<int>>>& docs,
                          const std::map<std::string, std::string>& labels, int min_docs) {
  std::map<std::string, int> doc_count;
  std::map<std::string, std::pair<double, int>> year_sum;
  for (const auto& [members, year] : docs) {
    for (const auto& m : members) {
      ++doc_count[m];
      if (year) {
        year_sum[m].first += *year;
        ++year_sum[m].second;
      }
    }
  }
  std::unordered_map<std::string, std::size_t> index;
  WeightedGraph g;
  for (const auto& [id, count] : doc_count) {
    if (count < min_docs) continue;
    GraphNode n;
    n.id = id;
    auto l = labels.find(id);
    n.label = l != labels.end() ? l->second : id;
    n.doc_count = count;
    if (auto ys = year_sum.find(id); ys != year_sum.end() && ys->second.second > 0) {
      n.overlay_score = ys->second.first / ys->second.second;
    }
    index.emplace(id, g.nodes.size());
    g.nodes.push_back(std::move(n));
  }

  std::unordered_map<std::uint64_t, int> weights;
  for (const auto& [members, year] : docs) {
    std::vector<std::size_t> kept;
    for (const auto& m : members) {
      if (auto it = index.find(m); it != index.end()) kept.push_back(it->second);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) ++weights[(static_cast<std::uint64_t>(kept[i]) << 32) | kept[j]];
    }
  }
  for (const auto& [key, w] : weights) {
    const auto a = static_cast<std::size_t>(key >> 32);
    const auto b = static_cast<std::size_t>(key & 0xffffffffu);
    g.edges.push_back({g.nodes[a].id, g.nodes[b].id, w});
    g.nodes[a].total_link_strength += w;
    g.nodes[b].total_link_strength += w;
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return g;
}

}  // namespace

WeightedGraph coauthorship_graph(const Corpus& corpus, int min_docs) {
  std::vector<std::pair<std::vector<std::string>, std::optional<int>>> docs;
  std::map<std::string, std::string> labels;
  for (const auto* r : validated_records(corpus)) {
    std::vector<std::string> keys;
    for (const auto& l : r->author_links) {
      const auto* e = corpus.find_entity(l.to_id);
      if (!e) continue;
      keys.push_back(e->canonical_key);
      labels.emplace(e->canonical_key, e->display_name);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    docs.emplace_back(std::move(keys), r->year);
  }
  return build_graph(docs, labels, min_docs);
}

double modularity(const WeightedGraph& graph, const std::map<std::string, int>& partition, double resolution) {
  double total = 0.0;
  std::map<int, double> internal;
  std::map<int, double> degree;
  for (const auto& e : graph.edges) {
    total += e.weight;
    const int ca = partition.at(e.a);
    const int cb = partition.at(e.b);
    if (ca == cb) internal[ca] += e.weight;
    degree[ca] += e.weight;
    degree[cb] += e.weight;
  }
  if (total == 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [c, d] : degree) {
    q += internal[c] / total - resolution * (d / (2 * total)) * (d / (2 * total));
  }
  return q;
}

void cluster_greedy_modularity(WeightedGraph& graph, double resolution) {
  const std::size_t n = graph.nodes.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(graph.nodes[i].id, i);

  double total = 0.0;
  for (const auto& e : graph.edges) total += e.weight;

  std::vector<std::vector<std::size_t>> members(n);
  std::vector<std::string> min_label(n);
  std::vector<double> share(n, 0.0);  // degree / 2W
  std::vector<std::map<std::size_t, double>> between(n);
  std::vector<bool> alive(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {i};
    min_label[i] = graph.nodes[i].id;
  }
  if (total > 0.0) {
    for (const auto& e : graph.edges) {
      const auto a = index.at(e.a);
      const auto b = index.at(e.b);
      between[a][b] += e.weight;
      between[b][a] += e.weight;
      share[a] += e.weight / (2 * total);
      share[b] += e.weight / (2 * total);
    }
    constexpr double kEps = 1e-12;
    while (true) {
      bool found = false;
      double best = 0.0;
      std::size_t bi = 0, bj = 0;
      std::pair<std::string, std::string> best_key;
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (const auto& [j, w] : between[i]) {
          if (j <= i) continue;
          const double gain = 2.0 * (w / (2 * total) - resolution * share[i] * share[j]);
          auto key = std::minmax(min_label[i], min_label[j]);
          std::pair<std::string, std::string> k{key.first, key.second};
          if (!found || gain > best + kEps || (std::abs(gain - best) <= kEps && k < best_key)) {
            found = true;
            best = gain;
            bi = i;
            bj = j;
            best_key = std::move(k);
          }
        }
      }
      if (!found || best <= kEps) break;
      // Merge bj into bi.
      for (auto m : members[bj]) members[bi].push_back(m);
      members[bj].clear();
      min_label[bi] = std::min(min_label[bi], min_label[bj]);
      share[bi] += share[bj];
      for (const auto& [k, w] : between[bj]) {
        if (k == bi) continue;
        between[bi][k] += w;
        between[k][bi] += w;
        between[k].erase(bj);
      }
      between[bi].erase(bj);
      between[bj].clear();
      alive[bj] = false;
    }
  }

  std::vector<std::size_t> communities;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) communities.push_back(i);
  }
  std::sort(communities.begin(), communities.end(), [&](std::size_t a, std::size_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() > members[b].size();
    return min_label[a] < min_label[b];
  });
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (auto m : members[communities[c]]) graph.nodes[m].cluster = static_cast<int>(c);
  }
  graph.cluster_count = static_cast<int>(communities.size());
}

// --- terms -----------------------------------------------------------------------

StopWords StopWords::parse(std::string_view text) {
  StopWords s;
  for (const auto& line : text::split(text, '\n')) {
    auto w = text::trim(line);
    if (w.empty() || w.front() == '#') continue;
    s.words_.insert(text::to_lower_ascii(w));
  }
  return s;
}

const StopWords& StopWords::bundled() {
  static const StopWords words = parse(embedded::stopwords_txt);
  return words;
}

std::string stem(std::string_view word) {
  std::string w(word);
  auto ends = [&](std::string_view suffix) { return w.size() > suffix.size() + 1 && w.ends_with(suffix); };
  if (ends("ies")) {
    w.replace(w.size() - 3, 3, "y");
  } else if (ends("sses") || ends("xes") || ends("ches") || ends("shes")) {
    w.resize(w.size() - 2);
  } else if (w.size() > 3 && w.back() == 's') {
    const char before = w[w.size() - 2];
    if (before != 's' && before != 'u' && before != 'i') w.pop_back();
  }
  return w;
}

namespace {

std::vector<std::string> raw_words(std::string_view input) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text::to_lower_ascii(text::fold_diacritics(input))) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      current += c;
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool is_number(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::vector<Token> tokenize(std::string_view input, const StopWords& stopwords) {
  std::vector<Token> out;
  const auto words = raw_words(input);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (w.size() < 2 || is_number(w) || stopwords.contains(w)) continue;
    out.push_back({stem(w), i});
  }
  return out;
}

std::string normalize_phrase(std::string_view phrase, const StopWords& stopwords) {
  const auto words = raw_words(phrase);
  if (words.empty()) return {};
  if (words.size() == 1 && (stopwords.contains(words[0]) || words[0].size() < 2 || is_number(words[0]))) return {};
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += stem(w);
  }
  return out;
}

std::vector<std::string> text_terms(std::string_view input, const StopWords& stopwords) {
  const auto tokens = tokenize(input, stopwords);
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.term);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i + 1].position == tokens[i].position + 1) out.push_back(tokens[i].term + " " + tokens[i + 1].term);
  }
  return out;
}

std::vector<TermStat> term_frequencies(const Corpus& corpus, const StopWords& stopwords, std::size_t top) {
  std::map<std::string, int> counts;
  for (const auto* r : validated_records(corpus)) {
    for (const auto& k : r->keywords) {
      auto phrase = normalize_phrase(k, stopwords);
      if (!phrase.empty()) ++counts[phrase];
    }
    for (auto& t : text_terms(r->title, stopwords)) ++counts[t];
  }
  long long total = 0;
  for (const auto& [t, c] : counts) total += c;
  std::vector<TermStat> out;
  for (const auto& [t, c] : counts) out.push_back({t, c, total ? 100.0 * c / static_cast<double>(total) : 0.0});
  std::sort(out.begin(), out.end(), [](const TermStat& a, const TermStat& b) {
    return a.count != b.count ? a.count > b.count : a.term < b.term;
  });
  if (top && out.size() > top) out.resize(top);
  return out;
}

WeightedGraph term_cooccurrence(const Corpus& corpus, int min_occurrence, const StopWords& stopwords) {
  if (min_occurrence < 1) throw Error(ErrorCode::InvalidArgument, "min_occurrence must be at least 1");
  std::vector<std::pair<std::vector<std::string>, std::optional<int>>> docs;
  for (const auto* r : validated_records(corpus)) {
    std::set<std::string> terms;
    for (const auto& k : r->keywords) {
      auto phrase = normalize_phrase(k, stopwords);
      if (!phrase.empty()) terms.insert(std::move(phrase));
    }
    if (r->abstract) {
      for (auto& t : text_terms(*r->abstract, stopwords)) terms.insert(std::move(t));
    }
    docs.emplace_back(std::vector<std::string>(terms.begin(), terms.end()), r->year);
  }
  auto g = build_graph(docs, {}, min_occurrence);
  cluster_greedy_modularity(g);
  return g;
}

// --- flows -----------------------------------------------------------------------

std::string_view to_string(FlowDimension d) {
  switch (d) {
    case FlowDimension::Fos: return "fos";
    case FlowDimension::Product: return "product";
    case FlowDimension::MaterialFamily: return "material";
    case FlowDimension::ResourceType: return "resource-type";
    case FlowDimension::UsageContext: return "context";
    case FlowDimension::Segment: return "segment";
    case FlowDimension::Tool: return "tool";
  }
  return "?";
}

std::optional<FlowDimension> parse_flow_dimension(std::string_view name) {
  auto n = text::to_lower_ascii(name);
  if (n == "fos" || n == "field") return FlowDimension::Fos;
  if (n == "product") return FlowDimension::Product;
  if (n == "material" || n == "material-family" || n == "materials") return FlowDimension::MaterialFamily;
  if (n == "resource-type" || n == "type") return FlowDimension::ResourceType;
  if (n == "context" || n == "usage-context") return FlowDimension::UsageContext;
  if (n == "segment" || n == "research-segment") return FlowDimension::Segment;
  if (n == "tool" || n == "tools") return FlowDimension::Tool;
  return std::nullopt;
}

namespace {

std::vector<std::string> flow_values(const DocumentRecord& r, FlowDimension d) {
  std::vector<std::string> out;
  switch (d) {
    case FlowDimension::Fos:
      if (r.application && r.application->fos_field) out.emplace_back(r.application->fos_field->name());
      break;
    case FlowDimension::Product:
      if (r.usage && r.usage->principal_product) out.emplace_back(to_string(*r.usage->principal_product));
      break;
    case FlowDimension::MaterialFamily:
      if (r.application) {
        std::set<MaterialFamily> distinct(r.application->material_families.begin(), r.application->material_families.end());
        for (auto m : distinct) out.emplace_back(to_string(m));
      }
      break;
    case FlowDimension::ResourceType:
      out.emplace_back(to_string(r.resource_type));
      break;
    case FlowDimension::UsageContext:
      if (r.usage) out.emplace_back(to_string(r.usage->usage_context));
      break;
    case FlowDimension::Segment:
      if (r.application) out.emplace_back(to_string(r.application->research_segment));
      break;
    case FlowDimension::Tool:
      if (r.usage) {
        std::set<ToolKind> distinct;
        for (const auto& t : r.usage->coupled_tools) distinct.insert(t.kind);
        for (auto k : distinct) out.emplace_back(tool_display_name(k));
      }
      break;
  }
  return out;
}

}  // namespace

FlowSet sankey_flows(const Corpus& corpus, FlowDimension source, FlowDimension target, bool normalized) {
  FlowSet set;
  set.source_dimension = source;
  set.target_dimension = target;
  std::map<std::pair<std::string, std::string>, int> counts;
  for (const auto* r : validated_records(corpus)) {
    auto sources = flow_values(*r, source);
    auto targets = flow_values(*r, target);
    if (sources.empty() || targets.empty()) {
      ++set.skipped;
      continue;
    }
    for (const auto& s : sources) {
      for (const auto& t : targets) ++counts[{s, t}];
    }
  }
  for (const auto& [key, c] : counts) set.flows.push_back({key.first, key.second, static_cast<double>(c)});
  return normalized ? normalize_flows(set) : set;
}

FlowSet normalize_flows(const FlowSet& input) {
  FlowSet out = input;
  std::map<std::string, double> totals;
  for (const auto& f : input.flows) totals[f.source] += f.value;
  for (auto& f : out.flows) {
    const double t = totals[f.source];
    f.value = t > 0.0 ? 100.0 * f.value / t : 0.0;
  }
  out.normalized = true;
  return out;
}

// --- coupled tools ---------------------------------------------------------------

CoupledToolReport coupled_tool_distribution(const Corpus& corpus) {
  CoupledToolReport out;
  std::map<ToolKind, int> counts;
  for (const auto* r : validated_records(corpus)) {
    ++out.records;
    if (!r->usage || r->usage->coupled_tools.empty()) continue;
    ++out.coupled_records;
    std::set<ToolKind> distinct;
    for (const auto& t : r->usage->coupled_tools) distinct.insert(t.kind);
    for (auto k : distinct) ++counts[k];
  }
  for (const auto& [k, c] : counts) out.occurrences += c;
  for (const auto& [k, c] : counts) {
    ToolCount t;
    t.tool = k;
    t.label = std::string(tool_display_name(k));
    t.count = c;
    t.percentage = 100.0 * c / out.occurrences;
    t.record_share = 100.0 * c / out.coupled_records;
    out.tools.push_back(std::move(t));
  }
  std::sort(out.tools.begin(), out.tools.end(), [](const ToolCount& a, const ToolCount& b) {
    return a.count != b.count ? a.count > b.count : a.label < b.label;
  });
  return out;
}

// --- field / time ----------------------------------------------------------------

FieldTimeMatrix field_time_matrix(const Corpus& corpus, int from, int to) {
  if (from > to) throw Error(ErrorCode::MalformedRange, "year range is empty");
  std::map<int, std::map<FosField, int>> counts;
  std::set<FosField> present;
  for (const auto* r : validated_records(corpus)) {
    if (!r->year || *r->year < from || *r->year > to) continue;
    if (!r->application || !r->application->fos_field) continue;
    ++counts[*r->year][*r->application->fos_field];
    present.insert(*r->application->fos_field);
  }
  FieldTimeMatrix m;
  m.fields.assign(present.begin(), present.end());
  const auto partial = partial_year_of(corpus.meta());
  for (int y = from; y <= to; ++y) {
    FieldYearColumn col;
    col.year = y;
    col.partial = partial && *partial == y;
    auto it = counts.find(y);
    if (it != counts.end()) {
      for (const auto& [f, c] : it->second) col.records += c;
      for (const auto& f : m.fields) {
        auto fc = it->second.find(f);
        col.percentages.push_back(fc == it->second.end() ? 0.0 : 100.0 * fc->second / col.records);
      }
    }
    m.columns.push_back(std::move(col));
  }
  return m;
}

}  // namespace litmon
