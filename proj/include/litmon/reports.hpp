#pragma once

// Named analytic reports rendered to bytes. The CLI `report` commands and
// the HTTP /reports endpoints both go through render_report, so the same
// snapshot and parameters give identical output on either path.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon {

using ReportParams = std::map<std::string, std::string>;

struct RenderedReport {
  std::string content_type;  // application/json, text/csv, text/tab-separated-values
  std::string body;
};

/// Report names: years, dist, usage, coauthors, terms, cooccur, sankey,
/// coupled, field-time. Parameters (all optional):
///
///   format     json (default) | csv; graphs also nodes | edges
///   filter     record filter applied before the report is computed
///   years      start, end
///   dist       dim = resource-type | country | institution | product | fos,
///              counting = all | first-author
///   coauthors  min_docs (3); the network is clustered by modularity
///   terms      top (50, 0 = all)
///   cooccur    min_occ (5)
///   sankey     source (fos), target (product), normalized (false)
///   field-time start (2015), end (2025)
///
/// JSON reports carry the report name and the effective parameters. Throws
/// NotFound for an unknown report, InvalidArgument for unknown or invalid
/// parameters, plus the errors of the underlying analytic.
RenderedReport render_report(const Corpus& corpus, std::string_view name, const ReportParams& params = {});

std::vector<std::string_view> report_names();

}  // namespace litmon
