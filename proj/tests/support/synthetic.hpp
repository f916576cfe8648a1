#pragma once

// Test-side corpus builder. Documents are described with plain values so
// that oracles can recompute expected results without going through the
// corpus graph.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon::synth {

struct SynthDoc {
  std::string title;
  std::optional<int> year;
  ResourceType type = ResourceType::ReviewedPaper;
  std::vector<std::string> authors;  // "Family, G."
  std::vector<std::string> keywords;
  std::string abstract;
  std::optional<std::string> doi;
  Product product = Product::EduPack;
  std::optional<FosField> fos;
  std::vector<MaterialFamily> materials;
  std::vector<std::string> tools;
  UsageContext usage_context = UsageContext::AcademicResearch;
  ResearchSegment segment = ResearchSegment::Academia;
  UsageFlags flags;
  CurationStatus status = CurationStatus::Validated;
};

/// Builds a corpus with one record per document. Validated documents get a
/// usage descriptor and application context; the rest stay Ingested.
Corpus build_corpus(const std::vector<SynthDoc>& docs, std::optional<YearMonth> cutoff = YearMonth{2025, 12});

/// Small deterministic RNG wrapper; uses only the engine, not the standard
/// distributions, so sequences are stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}
  /// Uniform in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(double p) { return static_cast<double>(engine_()) / 4294967296.0 < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
  /// k distinct elements of v, in random order.
  template <class T>
  std::vector<T> sample(std::vector<T> v, std::size_t k) {
    for (std::size_t i = 0; i < v.size() && i < k; ++i) std::swap(v[i], v[i + below(v.size() - i)]);
    v.resize(std::min(k, v.size()));
    return v;
  }

 private:
  std::mt19937 engine_;
};

/// Pool of distinct author names, all parseable as "Family, G.".
std::vector<std::string> author_pool(std::size_t n);

/// A random corpus of at most `max_docs` documents with random authors,
/// years (some missing), fields, products, materials and tools; about one
/// document in eight is left unvalidated.
std::vector<SynthDoc> random_docs(Rng& rng, std::size_t max_docs);

}  // namespace litmon::synth
