#pragma once

// Synthetic corpora with known answers. They are deterministic: the same
// call always yields an identical corpus.

#include <string_view>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon::fixtures {

/// 1113 validated records: 596 reviewed papers, 219 conference papers,
/// 163 theses, 88 technical reports and 47 standards or patents, with
/// authors, institutions, countries, keywords, abstracts and annotations.
Corpus table1();

/// 100 validated records whose usage flags are set on exactly 75 (data
/// source), 40 (materials selection), 6 (process selection), 34 (charts)
/// and 10 (eco audit) records.
Corpus usage_shares();

/// 1015 validated records, 203 of them naming coupled tools: 46 Other, 45
/// Ansys Mechanical, 38 SolidWorks and 89 more spread over other tools.
/// 15 records name two tools, so there are 218 occurrences.
Corpus coupled_tools();

/// Collaboration groups. "Bontempi, E." has 12 documents; with authors of
/// at least 3 documents the incident edge weights sum to 27.
Corpus collaboration();

/// "Ashby, M. F." is the sole author of 3 documents affiliated with 2
/// institutions; nothing else links to them.
Corpus ashby_neighborhood();

/// Ten records whose keywords form two disjoint triangles:
/// {alpha, beta, gamma} and {delta, epsilon, zeta}, five records each.
Corpus two_cliques();

std::vector<std::string_view> names();
/// Throws NotFound.
Corpus by_name(std::string_view name);

}  // namespace litmon::fixtures
