#pragma once

// Data files compiled into the library (see data/).

#include <string_view>

namespace litmon::embedded {

extern const std::string_view stopwords_txt;
extern const std::string_view fos_map_tsv;

}  // namespace litmon::embedded
