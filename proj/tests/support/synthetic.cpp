#include "synthetic.hpp"

#include "litmon/curation.hpp"
#include "litmon/ingest.hpp"

namespace litmon::synth {

Corpus build_corpus(const std::vector<SynthDoc>& docs, std::optional<YearMonth> cutoff) {
  Corpus corpus;
  CorpusMeta meta;
  meta.collection_cutoff = cutoff;
  meta.year_max = 2030;
  corpus.set_meta(meta);
  for (const auto& d : docs) {
    DocumentRecord r;
    r.title = d.title;
    r.year = d.year;
    r.resource_type = d.type;
    r.keywords = d.keywords;
    if (!d.abstract.empty()) r.abstract = d.abstract;
    r.doi = d.doi;
    for (std::size_t i = 0; i < d.authors.size(); ++i) {
      const auto n = normalize_author_name(d.authors[i]);
      EntityRecord e;
      e.kind = EntityKind::Author;
      e.display_name = n.display_name;
      e.canonical_key = n.canonical_key;
      r.author_links.push_back({"", corpus.upsert_entity(e), LinkType::AuthoredBy, static_cast<int>(i) + 1});
    }
    if (d.status != CurationStatus::Ingested) {
      UsageDescriptor u;
      u.principal_product = d.product;
      u.usage_context = d.usage_context;
      u.flags = d.flags;
      for (const auto& t : d.tools) u.coupled_tools.push_back(resolve_tool(t));
      ApplicationContext c;
      c.fos_field = d.fos;
      c.research_segment = d.segment;
      c.material_families = d.materials;
      r.product_links.push_back({"", corpus.upsert_entity(product_entity(d.product)), LinkType::UsesProduct, {}});
      if (d.fos) r.field_links.push_back({"", corpus.upsert_entity(fos_entity(*d.fos)), LinkType::InField, {}});
      r.usage = std::move(u);
      r.application = std::move(c);
    }
    r.curation_status = d.status;
    corpus.upsert_record(std::move(r));
  }
  return corpus;
}

std::vector<std::string> author_pool(std::size_t n) {
  static const std::vector<std::string> families = {
      "Andersen", "Bauer",   "Carvalho", "Dubois",  "Eriksson", "Fischer", "Garcia",  "Hoffmann",
      "Ivanova",  "Jensen",  "Kowalski", "Lambert", "Moreau",   "Nakamura", "Olsen",  "Petrov",
      "Quinn",    "Rossi",   "Schmidt",  "Tanaka",  "Urban",    "Varga",   "Weber",   "Yilmaz"};
  static const std::string initials = "ABCDEFGHJKLMNPRST";
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(families[i % families.size()] + ", " + initials[(i / families.size()) % initials.size()] + ".");
  }
  return out;
}

std::vector<SynthDoc> random_docs(Rng& rng, std::size_t max_docs) {
  static const std::vector<std::string> words = {"materials", "selection", "design",  "polymer", "alloy",
                                                 "composite", "eco",       "audit",   "carbon",  "process",
                                                 "lightweight", "teaching", "charts", "database", "ranking"};
  static const std::vector<std::string> tools = {"ANSYS Mechanical", "SolidWorks", "Abaqus", "COMSOL", "OpenLCA"};
  const auto fields = fos_taxonomy();
  const auto pool = author_pool(static_cast<std::size_t>(rng.between(2, 12)));

  std::vector<SynthDoc> docs(rng.below(max_docs) + 1);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto& d = docs[i];
    d.title = "Study " + std::to_string(i) + " of " + rng.pick(words) + " " + rng.pick(words);
    if (!rng.chance(0.1)) d.year = rng.between(2014, 2026);
    d.type = static_cast<ResourceType>(rng.below(enum_count<ResourceType>()));
    d.authors = rng.sample(pool, static_cast<std::size_t>(rng.between(1, 5)));
    d.keywords = rng.sample(words, rng.below(4));
    d.product = static_cast<Product>(rng.below(enum_count<Product>()));
    if (!rng.chance(0.15)) d.fos = FosField::from_id(fields[rng.below(fields.size())].id);
    for (auto m : all_enum_values<MaterialFamily>()) {
      if (rng.chance(0.25)) d.materials.push_back(m);
    }
    d.tools = rng.sample(tools, rng.below(3));
    d.usage_context = static_cast<UsageContext>(rng.below(enum_count<UsageContext>()));
    d.segment = static_cast<ResearchSegment>(rng.below(enum_count<ResearchSegment>()));
    d.flags.data_source = rng.chance(0.7);
    d.flags.materials_selection = rng.chance(0.4);
    d.flags.charts = rng.chance(0.3);
    if (rng.chance(0.125)) d.status = CurationStatus::Ingested;
  }
  return docs;
}

}  // namespace litmon::synth
