#include "litmon/reports.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "json.hpp"
#include "litmon/analytics.hpp"
#include "litmon/filter.hpp"
#include "litmon/text.hpp"

namespace litmon {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kJson = "application/json";
constexpr std::string_view kCsv = "text/csv";
constexpr std::string_view kTsv = "text/tab-separated-values";

// Six decimals keep reports readable and stable across platforms.
double tidy(double v) {
  double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

std::string number(double v) {
  v = tidy(v);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string tsv_field(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

class Params {
 public:
  Params(const ReportParams& raw, std::initializer_list<std::string_view> allowed) : raw_(raw) {
    for (const auto& [k, v] : raw) {
      bool ok = k == "format" || k == "filter";
      for (auto a : allowed) ok = ok || a == k;
      if (!ok) throw Error(ErrorCode::InvalidArgument, "unknown report parameter '" + k + "'");
    }
  }

  std::string get(const std::string& key, std::string fallback) const {
    auto it = raw_.find(key);
    return it == raw_.end() || it->second.empty() ? fallback : it->second;
  }

  std::optional<int> get_int(const std::string& key) const {
    auto it = raw_.find(key);
    if (it == raw_.end() || it->second.empty()) return std::nullopt;
    int v = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::InvalidArgument, "parameter '" + key + "' must be an integer");
    }
    return v;
  }

  int get_int(const std::string& key, int fallback) const { return get_int(key).value_or(fallback); }

  bool get_bool(const std::string& key) const {
    auto v = text::to_lower_ascii(get(key, "false"));
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw Error(ErrorCode::InvalidArgument, "parameter '" + key + "' must be true or false");
  }

  /// Adds the record filter to a query description.
  Json annotate(Json query) const {
    if (!query.is_object()) query = Json::object();
    auto f = get("filter", "");
    if (!f.empty()) query["filter"] = f;
    return query;
  }

  std::string format(std::initializer_list<std::string_view> accepted) const {
    auto f = text::to_lower_ascii(get("format", "json"));
    for (auto a : accepted) {
      if (a == f) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "format '" + f + "' is not available for this report");
  }

 private:
  const ReportParams& raw_;
};

RenderedReport json_report(std::string_view name, Json query, const Corpus& corpus, Json data) {
  Json doc;
  doc["report"] = name;
  doc["query"] = std::move(query);
  doc["records"] = validated_records(corpus).size();
  doc["data"] = std::move(data);
  return {std::string(kJson), doc.dump(2) + "\n"};
}

Json graph_json(const WeightedGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json j;
    j["id"] = n.id;
    j["label"] = n.label;
    j["doc_count"] = n.doc_count;
    j["total_link_strength"] = n.total_link_strength;
    j["overlay_score"] = tidy(n.overlay_score);
    j["cluster"] = n.cluster ? Json(*n.cluster) : Json(nullptr);
    nodes.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  Json out;
  out["node_count"] = g.nodes.size();
  out["edge_count"] = g.edges.size();
  out["component_count"] = g.components().size();
  out["cluster_count"] = g.cluster_count;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

RenderedReport graph_tsv(const WeightedGraph& g, std::string_view table) {
  std::string body;
  if (table == "nodes") {
    body = "id\tlabel\tdoc_count\tstrength\toverlay\tcluster\n";
    for (const auto& n : g.nodes) {
      body += tsv_field(n.id) + '\t' + tsv_field(n.label) + '\t' + std::to_string(n.doc_count) + '\t' +
              std::to_string(n.total_link_strength) + '\t' + number(n.overlay_score) + '\t' +
              (n.cluster ? std::to_string(*n.cluster) : std::string()) + '\n';
    }
  } else {
    body = "a\tb\tweight\n";
    for (const auto& e : g.edges) body += tsv_field(e.a) + '\t' + tsv_field(e.b) + '\t' + std::to_string(e.weight) + '\n';
  }
  return {std::string(kTsv), body};
}

RenderedReport years_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const auto start = p.get_int("start");
  const auto end = p.get_int("end");
  if (start && end && *start > *end) throw Error(ErrorCode::MalformedRange, "start year is after end year");
  const auto h = yearly_histogram(c, start, end);
  if (fmt == "csv") {
    std::string body = "year,count,cumulative,partial\n";
    for (const auto& y : h.years) {
      body += std::to_string(y.year) + ',' + std::to_string(y.count) + ',' + std::to_string(y.cumulative) + ',' +
              (h.partial_year == y.year ? "true" : "false") + '\n';
    }
    return {std::string(kCsv), body};
  }
  Json q;
  q["start"] = start ? Json(*start) : Json(nullptr);
  q["end"] = end ? Json(*end) : Json(nullptr);
  Json data;
  data["total"] = h.total;
  data["undated"] = h.undated;
  data["partial_year"] = h.partial_year ? Json(*h.partial_year) : Json(nullptr);
  Json years = Json::array();
  for (const auto& y : h.years) years.push_back(Json{{"year", y.year}, {"count", y.count}, {"cumulative", y.cumulative}});
  data["years"] = std::move(years);
  return json_report("years", p.annotate(std::move(q)), c, std::move(data));
}

RenderedReport dist_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const auto dim_name = p.get("dim", "resource-type");
  const auto dim = parse_dimension(dim_name);
  if (!dim) throw Error(ErrorCode::InvalidArgument, "unknown dimension '" + dim_name + "'");
  const auto default_counting = *dim == Dimension::Institution ? "first-author" : "all";
  const auto counting_name = p.get("counting", default_counting);
  const auto counting = parse_counting(counting_name);
  if (!counting) throw Error(ErrorCode::InvalidArgument, "unknown counting rule '" + counting_name + "'");
  const auto d = distribution(c, *dim, *counting);
  if (fmt == "csv") {
    std::string body = "label,count\n";
    for (const auto& e : d.entries) body += csv_field(e.label) + ',' + std::to_string(e.count) + '\n';
    return {std::string(kCsv), body};
  }
  Json q;
  q["dim"] = to_string(*dim);
  q["counting"] = to_string(*counting);
  Json data;
  int total = 0;
  Json entries = Json::array();
  for (const auto& e : d.entries) {
    entries.push_back(Json{{"label", e.label}, {"count", e.count}});
    total += e.count;
  }
  data["total"] = total;
  data["unassigned"] = d.unassigned;
  data["entries"] = std::move(entries);
  return json_report("dist", p.annotate(std::move(q)), c, std::move(data));
}

RenderedReport usage_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const auto u = usage_shares(c);
  if (fmt == "csv") {
    std::string body = "flag,records,percentage\n";
    for (const auto& s : u.shares) body += s.flag + ',' + std::to_string(s.records) + ',' + number(s.percentage) + '\n';
    return {std::string(kCsv), body};
  }
  Json data;
  data["total"] = u.total;
  Json shares = Json::array();
  for (const auto& s : u.shares) {
    shares.push_back(Json{{"flag", s.flag}, {"records", s.records}, {"percentage", tidy(s.percentage)}});
  }
  data["shares"] = std::move(shares);
  return json_report("usage", p.annotate(Json::object()), c, std::move(data));
}

RenderedReport coauthors_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "nodes", "edges"});
  const int min_docs = p.get_int("min_docs", 3);
  if (min_docs < 1) throw Error(ErrorCode::InvalidArgument, "min_docs must be at least 1");
  auto g = coauthorship_graph(c, min_docs);
  cluster_greedy_modularity(g);
  if (fmt != "json") return graph_tsv(g, fmt);
  Json q;
  q["min_docs"] = min_docs;
  return json_report("coauthors", p.annotate(std::move(q)), c, graph_json(g));
}

RenderedReport terms_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const int top = p.get_int("top", 50);
  if (top < 0) throw Error(ErrorCode::InvalidArgument, "top must not be negative");
  const auto terms = term_frequencies(c, StopWords::bundled(), static_cast<std::size_t>(top));
  if (fmt == "csv") {
    std::string body = "term,count,share\n";
    for (const auto& t : terms) body += csv_field(t.term) + ',' + std::to_string(t.count) + ',' + number(t.share) + '\n';
    return {std::string(kCsv), body};
  }
  Json q;
  q["top"] = top;
  Json list = Json::array();
  for (const auto& t : terms) list.push_back(Json{{"term", t.term}, {"count", t.count}, {"share", tidy(t.share)}});
  Json data;
  data["terms"] = std::move(list);
  return json_report("terms", p.annotate(std::move(q)), c, std::move(data));
}

RenderedReport cooccur_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "nodes", "edges"});
  const int min_occ = p.get_int("min_occ", 5);
  const auto g = term_cooccurrence(c, min_occ);
  if (fmt != "json") return graph_tsv(g, fmt);
  Json q;
  q["min_occ"] = min_occ;
  return json_report("cooccur", p.annotate(std::move(q)), c, graph_json(g));
}

RenderedReport sankey_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const auto source_name = p.get("source", "fos");
  const auto target_name = p.get("target", "product");
  const auto source = parse_flow_dimension(source_name);
  const auto target = parse_flow_dimension(target_name);
  if (!source) throw Error(ErrorCode::InvalidArgument, "unknown flow dimension '" + source_name + "'");
  if (!target) throw Error(ErrorCode::InvalidArgument, "unknown flow dimension '" + target_name + "'");
  const bool normalized = p.get_bool("normalized");
  const auto flows = sankey_flows(c, *source, *target, normalized);
  if (fmt == "csv") {
    std::string body = "source,target,value\n";
    for (const auto& f : flows.flows) {
      body += csv_field(f.source) + ',' + csv_field(f.target) + ',' + number(f.value) + '\n';
    }
    return {std::string(kCsv), body};
  }
  Json q;
  q["source"] = to_string(*source);
  q["target"] = to_string(*target);
  q["normalized"] = normalized;
  Json list = Json::array();
  for (const auto& f : flows.flows) {
    list.push_back(Json{{"source", f.source}, {"target", f.target}, {"value", tidy(f.value)}});
  }
  Json data;
  data["normalized"] = flows.normalized;
  data["skipped"] = flows.skipped;
  data["flows"] = std::move(list);
  return json_report("sankey", p.annotate(std::move(q)), c, std::move(data));
}

RenderedReport coupled_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const auto r = coupled_tool_distribution(c);
  if (fmt == "csv") {
    std::string body = "tool,count,percentage,record_share\n";
    for (const auto& t : r.tools) {
      body += csv_field(t.label) + ',' + std::to_string(t.count) + ',' + number(t.percentage) + ',' +
              number(t.record_share) + '\n';
    }
    return {std::string(kCsv), body};
  }
  Json data;
  data["coupled_records"] = r.coupled_records;
  data["occurrences"] = r.occurrences;
  data["records"] = r.records;
  Json tools = Json::array();
  for (const auto& t : r.tools) {
    tools.push_back(Json{{"tool", to_string(t.tool)},
                         {"label", t.label},
                         {"count", t.count},
                         {"percentage", tidy(t.percentage)},
                         {"record_share", tidy(t.record_share)}});
  }
  data["tools"] = std::move(tools);
  return json_report("coupled", p.annotate(Json::object()), c, std::move(data));
}

RenderedReport field_time_report(const Corpus& c, const Params& p) {
  const auto fmt = p.format({"json", "csv"});
  const int start = p.get_int("start", 2015);
  const int end = p.get_int("end", 2025);
  const auto m = field_time_matrix(c, start, end);
  if (fmt == "csv") {
    std::string body = "field";
    for (const auto& col : m.columns) body += ',' + std::to_string(col.year) + (col.partial ? "*" : "");
    body += '\n';
    for (std::size_t f = 0; f < m.fields.size(); ++f) {
      body += csv_field(m.fields[f].name());
      for (const auto& col : m.columns) body += ',' + (col.percentages.empty() ? std::string() : number(col.percentages[f]));
      body += '\n';
    }
    return {std::string(kCsv), body};
  }
  Json q;
  q["start"] = start;
  q["end"] = end;
  Json fields = Json::array();
  for (const auto& f : m.fields) fields.push_back(Json{{"id", f.id()}, {"code", f.code()}, {"name", f.name()}});
  Json columns = Json::array();
  for (const auto& col : m.columns) {
    Json values = Json::array();
    for (double v : col.percentages) values.push_back(tidy(v));
    columns.push_back(Json{{"year", col.year}, {"records", col.records}, {"partial", col.partial}, {"percentages", values}});
  }
  Json data;
  data["fields"] = std::move(fields);
  data["columns"] = std::move(columns);
  return json_report("field-time", p.annotate(std::move(q)), c, std::move(data));
}

}  // namespace

std::vector<std::string_view> report_names() {
  return {"years", "dist", "usage", "coauthors", "terms", "cooccur", "sankey", "coupled", "field-time"};
}

RenderedReport render_report(const Corpus& corpus, std::string_view name, const ReportParams& params) {
  const Corpus* source = &corpus;
  Corpus filtered;
  if (auto it = params.find("filter"); it != params.end() && !it->second.empty()) {
    filtered = restrict(corpus, FilterExpr::parse(it->second));
    source = &filtered;
  }
  const Corpus& c = *source;
  if (name == "years") return years_report(c, Params(params, {"start", "end"}));
  if (name == "dist") return dist_report(c, Params(params, {"dim", "counting"}));
  if (name == "usage") return usage_report(c, Params(params, {}));
  if (name == "coauthors") return coauthors_report(c, Params(params, {"min_docs"}));
  if (name == "terms") return terms_report(c, Params(params, {"top"}));
  if (name == "cooccur") return cooccur_report(c, Params(params, {"min_occ"}));
  if (name == "sankey") return sankey_report(c, Params(params, {"source", "target", "normalized"}));
  if (name == "coupled") return coupled_report(c, Params(params, {}));
  if (name == "field-time") return field_time_report(c, Params(params, {"start", "end"}));
  throw Error(ErrorCode::NotFound, "unknown report '" + std::string(name) + "'");
}

}  // namespace litmon
