#include "litmon/fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "litmon/curation.hpp"
#include "litmon/error.hpp"
#include "litmon/ingest.hpp"
#include "litmon/text.hpp"

namespace litmon::fixtures {

namespace {

struct DocSpec {
  std::string short_name;  // derived when empty
  std::string title;
  int year = 2020;
  ResourceType type = ResourceType::ReviewedPaper;
  std::string venue;
  std::vector<std::string> authors;
  std::vector<std::pair<int, std::string>> affiliations;  // (0-based author, institution id)
  std::vector<std::string> keywords;
  std::optional<std::string> abstract;
  std::optional<UsageDescriptor> usage;
  std::optional<ApplicationContext> context;
  CurationStatus status = CurationStatus::Validated;
};

class Builder {
 public:
  explicit Builder(std::optional<YearMonth> cutoff = YearMonth{2025, 9}) {
    CorpusMeta meta;
    meta.collection_cutoff = cutoff;
    meta.year_min = 1990;
    meta.year_max = 2025;
    corpus_.set_meta(meta);
  }

  std::string author(std::string_view name) {
    auto n = normalize_author_name(name);
    EntityRecord e;
    e.kind = EntityKind::Author;
    e.display_name = n.display_name;
    e.canonical_key = n.canonical_key;
    return corpus_.upsert_entity(std::move(e));
  }

  /// `country` is a country name or empty.
  std::string institution(std::string_view name, std::string_view country = {}) {
    EntityRecord e;
    e.kind = EntityKind::Institution;
    e.display_name = std::string(name);
    auto id = corpus_.upsert_entity(std::move(e));
    if (!country.empty()) {
      auto info = find_country(country);
      if (!info) throw Error(ErrorCode::InvalidArgument, "fixture country '" + std::string(country) + "'");
      EntityRecord c;
      c.kind = EntityKind::Country;
      c.display_name = std::string(info->name);
      c.canonical_key = std::string(info->code);
      std::transform(c.canonical_key.begin(), c.canonical_key.end(), c.canonical_key.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
      c.attributes["code"] = std::string(info->code);
      auto country_id = corpus_.upsert_entity(std::move(c));
      corpus_.link_entities(id, country_id, LinkType::LocatedIn);
      country_of_[id] = country_id;
    }
    return id;
  }

  std::string add(DocSpec d) {
    DocumentRecord r;
    r.short_name = std::move(d.short_name);
    r.title = std::move(d.title);
    r.year = d.year;
    r.resource_type = d.type;
    r.venue = std::move(d.venue);
    r.keywords = std::move(d.keywords);
    r.abstract = std::move(d.abstract);
    for (std::size_t i = 0; i < d.authors.size(); ++i) {
      r.author_links.push_back({"", author(d.authors[i]), LinkType::AuthoredBy, static_cast<int>(i) + 1});
    }
    for (const auto& [idx, inst] : d.affiliations) {
      const int ordinal = idx + 1;
      Link l{"", inst, LinkType::AffiliatedWith, ordinal};
      if (std::find(r.institution_links.begin(), r.institution_links.end(), l) == r.institution_links.end()) {
        r.institution_links.push_back(l);
      }
      if (auto it = country_of_.find(inst); it != country_of_.end()) {
        Link c{"", it->second, LinkType::LocatedIn, ordinal};
        if (std::find(r.country_links.begin(), r.country_links.end(), c) == r.country_links.end()) {
          r.country_links.push_back(c);
        }
      }
    }
    if (d.usage && d.usage->principal_product) {
      r.product_links.push_back(
          {"", corpus_.upsert_entity(product_entity(*d.usage->principal_product)), LinkType::UsesProduct, {}});
    }
    if (d.context && d.context->fos_field) {
      r.field_links.push_back({"", corpus_.upsert_entity(fos_entity(*d.context->fos_field)), LinkType::InField, {}});
    }
    r.usage = std::move(d.usage);
    r.application = std::move(d.context);
    r.curation_status = d.status;
    return corpus_.upsert_record(std::move(r));
  }

  Corpus take() { return std::move(corpus_); }

 private:
  Corpus corpus_;
  std::map<std::string, std::string> country_of_;
};

UsageDescriptor usage_of(Product p, UsageFlags flags = {.data_source = true, .materials_selection = true}) {
  UsageDescriptor u;
  u.principal_product = p;
  u.flags = flags;
  return u;
}

ApplicationContext context_of(std::string_view fos_code) {
  ApplicationContext c;
  c.fos_field = FosField::from_code(fos_code);
  if (c.fos_field) c.raw_field_labels.push_back(text::to_lower_ascii(c.fos_field->name()));
  return c;
}

// Deterministic draws. std::mt19937 output is fixed by the standard; the
// library distributions are not, so they are avoided.
class Draw {
 public:
  explicit Draw(std::uint32_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return n ? rng_() % n : 0; }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
  /// Index drawn with the given integer weights.
  std::size_t weighted(const std::vector<int>& weights) {
    int total = 0;
    for (int w : weights) total += w;
    int x = static_cast<int>(below(static_cast<std::size_t>(total)));
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (x < weights[i]) return i;
      x -= weights[i];
    }
    return weights.size() - 1;
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace

// --- Table 1 -------------------------------------------------------------------

namespace {

const std::vector<std::string> kSurnames = {
    "Rossi",    "Smith",     "Garcia",   "Muller",   "Dubois",    "Silva",    "Wang",      "Kumar",
    "Andersson", "Novak",    "Kowalski", "Yilmaz",   "Tanaka",    "Kim",      "Nguyen",    "Costa",
    "Bianchi",  "Johnson",   "Martin",   "Schmidt",  "Lefebvre",  "Santos",   "Li",        "Singh",
    "Lindqvist", "Horvath",  "Nowak",    "Demir",    "Suzuki",    "Park",     "Tran",      "Ferreira",
    "Romano",   "Brown",     "Lopez",    "Fischer",  "Moreau",    "Oliveira", "Zhang",     "Patel",
    "Nilsson",  "Dvorak",    "Wojcik",   "Kaya",     "Watanabe",  "Choi",     "Pham",      "Pereira",
    "Colombo",  "Taylor",    "Martinez", "Weber",    "Laurent",   "Souza",    "Liu",       "Sharma",
    "Berg",     "Kovacs",    "Lewandowski", "Celik", "Ito",       "Jung",     "Hoang",     "Almeida",
    "Ricci",    "Wilson",    "Sanchez",  "Becker",   "Girard",    "Rodrigues", "Chen",     "Gupta",
    "Eriksson", "Szabo",     "Zielinski", "Aydin",   "Yamamoto",  "Kang",     "Vu",        "Carvalho",
};

struct InstitutionSpec {
  const char* name;
  const char* country;
};

const std::vector<InstitutionSpec> kInstitutions = {
    {"University of Cambridge", "United Kingdom"},  {"Politecnico di Milano", "Italy"},
    {"University of Brescia", "Italy"},              {"Politecnico di Torino", "Italy"},
    {"Technical University of Munich", "Germany"},   {"RWTH Aachen University", "Germany"},
    {"Universite Grenoble Alpes", "France"},         {"Arts et Metiers", "France"},
    {"Universidad Politecnica de Madrid", "Spain"},  {"University of Porto", "Portugal"},
    {"Delft University of Technology", "Netherlands"}, {"KTH Royal Institute of Technology", "Sweden"},
    {"Jonkoping University", "Sweden"},              {"NTNU", "Norway"},
    {"Massachusetts Institute of Technology", "United States"}, {"Georgia Institute of Technology", "United States"},
    {"University of Michigan", "United States"},     {"University of Toronto", "Canada"},
    {"Tsinghua University", "China"},                {"Shanghai Jiao Tong University", "China"},
    {"Indian Institute of Technology Delhi", "India"}, {"Anna University", "India"},
    {"University of Sao Paulo", "Brazil"},           {"Universiti Teknologi Malaysia", "Malaysia"},
    {"University of Tokyo", "Japan"},                {"KAIST", "South Korea"},
    {"Istanbul Technical University", "Turkey"},     {"Warsaw University of Technology", "Poland"},
    {"University of Sydney", "Australia"},           {"University of Leeds", "United Kingdom"},
    {"Loughborough University", "United Kingdom"},   {"Granta Design Ltd", "United Kingdom"},
};

const std::vector<std::string> kKeywords = {
    "material selection",  "life cycle assessment", "sustainability",        "eco design",
    "additive manufacturing", "composites",         "lightweight design",    "eco audit",
    "ashby charts",        "engineering education", "product design",        "materials informatics",
    "finite element analysis", "circular economy",  "embodied energy",       "carbon footprint",
    "natural fibres",      "biomaterials",          "process selection",     "multi-criteria decision making",
    "data management",     "recycling",             "polymers",              "metal alloys",
    "design methodology",  "cost analysis",         "thermal management",    "automotive",
    "aerospace",           "construction materials", "packaging",            "sandwich structures",
};

const std::vector<std::string> kTitleMethods = {
    "Materials selection",   "Design",          "Life cycle assessment", "Comparative analysis",
    "Sustainable design",    "Optimization",    "Selection methodology", "Data-driven design",
    "Environmental assessment", "Characterization",
};
const std::vector<std::string> kTitleObjects = {
    "lightweight components", "composite structures", "polymer packaging", "biomedical implants",
    "automotive panels",      "building materials",   "additive manufactured parts", "heat exchangers",
    "natural fibre composites", "aerospace brackets", "sports equipment",  "electronic enclosures",
};
const std::vector<std::string> kTitleContexts = {
    "using Granta EduPack", "with Ashby charts", "in engineering education", "for sustainable products",
    "under cost constraints", "in early design", "for circular economy", "with eco audit",
};

const std::vector<std::string> kJournals = {
    "Materials & Design", "Journal of Cleaner Production", "Sustainability", "Materials",
    "International Journal of Engineering Education", "Composites Part B: Engineering",
    "Resources, Conservation and Recycling", "Journal of Materials Engineering and Performance",
};
const std::vector<std::string> kConferences = {
    "Proceedings of the International Conference on Engineering Design",
    "ASME International Mechanical Engineering Congress", "Procedia CIRP",
    "Proceedings of the CDIO Conference", "International Conference on Sustainable Design and Manufacturing",
};

const std::vector<std::string> kFosCodes = {"2.5", "2.3", "2.7", "2.11", "1.5", "2.1", "2.2", "2.4", "2.6", "1.2"};
const std::vector<int> kFosWeights = {35, 25, 10, 8, 5, 5, 3, 3, 3, 3};

const std::vector<std::string> kToolLabels = {
    "Ansys Mechanical", "SolidWorks", "Abaqus", "COMSOL", "MATLAB", "CATIA", "Creo", "OpenLCA", "SimaPro",
};

std::string author_name(std::size_t i) {
  static const char initials[] = "ABCDEFGHJKLMNPRS";
  std::string name = kSurnames[i % kSurnames.size()] + ", ";
  name += initials[(i / kSurnames.size()) % 16];
  name += '.';
  return name;
}

}  // namespace

Corpus table1() {
  Builder b;
  Draw draw(20250930);

  std::vector<std::string> institutions;
  for (const auto& spec : kInstitutions) institutions.push_back(b.institution(spec.name, spec.country));

  std::vector<ResourceType> types;
  const std::pair<ResourceType, int> counts[] = {
      {ResourceType::ReviewedPaper, 596},
      {ResourceType::ConferenceProceedings, 219},
      {ResourceType::Thesis, 163},
      {ResourceType::TechnicalReportWhitePaper, 88},
      {ResourceType::StandardPatent, 47},
  };
  for (const auto& [type, n] : counts) types.insert(types.end(), static_cast<std::size_t>(n), type);
  draw.shuffle(types);

  std::vector<int> years;
  std::vector<int> year_weights;
  for (int y = 1994; y <= 2025; ++y) {
    years.push_back(y);
    year_weights.push_back(1 + (y - 1994) * (y - 1994) / 8);
  }

  constexpr std::size_t kAuthorPool = 420;
  for (ResourceType type : types) {
    DocSpec d;
    d.type = type;
    d.year = years[draw.weighted(year_weights)];
    d.title = draw.pick(kTitleMethods) + " of " + draw.pick(kTitleObjects) + " " + draw.pick(kTitleContexts);

    const std::size_t n_authors = type == ResourceType::Thesis ? 1 + draw.below(2) : 1 + draw.below(5);
    for (std::size_t i = 0; d.authors.size() < n_authors && i < 20; ++i) {
      // Squared draw: a few prolific authors, a long tail of occasional ones.
      const double u = static_cast<double>(draw.below(10000)) / 10000.0;
      auto name = author_name(static_cast<std::size_t>(u * u * kAuthorPool));
      if (std::find(d.authors.begin(), d.authors.end(), name) == d.authors.end()) d.authors.push_back(name);
    }
    for (std::size_t i = 0; i < d.authors.size(); ++i) {
      // Each author has a home institution; std::hash is not portable, so
      // the mapping uses its own arithmetic.
      std::size_t h = 0;
      for (unsigned char ch : d.authors[i]) h = h * 31 + ch;
      d.affiliations.emplace_back(static_cast<int>(i), institutions[h % institutions.size()]);
    }

    switch (type) {
      case ResourceType::ReviewedPaper: d.venue = draw.pick(kJournals); break;
      case ResourceType::ConferenceProceedings: d.venue = draw.pick(kConferences); break;
      case ResourceType::Thesis: d.venue = kInstitutions[draw.below(kInstitutions.size())].name; break;
      case ResourceType::TechnicalReportWhitePaper: d.venue = "Granta Design Ltd"; break;
      case ResourceType::StandardPatent: d.venue = draw.chance(50) ? "ISO" : "European Patent Office"; break;
    }

    const std::size_t n_keywords = 2 + draw.below(4);
    while (d.keywords.size() < n_keywords) {
      const auto& k = draw.pick(kKeywords);
      if (std::find(d.keywords.begin(), d.keywords.end(), k) == d.keywords.end()) d.keywords.push_back(k);
    }
    d.abstract = "This work applies materials selection to " + draw.pick(kTitleObjects) + ". The work covers " +
                 d.keywords[0] + " and " + d.keywords[1] + " " + draw.pick(kTitleContexts) + ".";

    UsageDescriptor u;
    const auto product = draw.weighted({70, 12, 18});
    u.principal_product = static_cast<Product>(product);
    u.usage_context = static_cast<UsageContext>(draw.weighted({60, 30, 6, 4}));
    u.flags.data_source = draw.chance(75);
    u.flags.materials_selection = draw.chance(40);
    u.flags.process_selection = draw.chance(6);
    u.flags.charts = draw.chance(34);
    u.flags.eco_audit = draw.chance(10);
    u.flags.synthesizer = draw.chance(3);
    if (draw.chance(20)) {
      const auto& label = draw.pick(kToolLabels);
      u.coupled_tools.push_back(resolve_tool(label));
    }
    d.usage = std::move(u);

    auto ctx = context_of(kFosCodes[draw.weighted(kFosWeights)]);
    ctx.research_segment = static_cast<ResearchSegment>(draw.weighted({70, 20, 10}));
    ctx.material_families.push_back(static_cast<MaterialFamily>(draw.below(enum_count<MaterialFamily>())));
    ctx.scope_depth = static_cast<ScopeDepth>(draw.below(3));
    d.context = std::move(ctx);
    b.add(std::move(d));
  }
  return b.take();
}

// --- usage shares ----------------------------------------------------------------

Corpus usage_shares() {
  Builder b;
  auto inst = b.institution("University of Cambridge", "United Kingdom");
  for (int i = 0; i < 100; ++i) {
    DocSpec d;
    d.title = "Usage record " + std::to_string(i + 1);
    d.year = 2010 + i % 15;
    d.authors = {author_name(static_cast<std::size_t>(i))};
    d.affiliations = {{0, inst}};
    UsageFlags f;
    f.data_source = i < 75;
    f.materials_selection = i % 5 < 2;  // 40
    f.process_selection = i % 17 == 3;  // 6
    f.charts = i >= 66;                 // 34
    f.eco_audit = i % 10 == 7;          // 10
    d.usage = usage_of(Product::EduPack, f);
    d.context = context_of("2.5");
    b.add(std::move(d));
  }
  return b.take();
}

// --- coupled tools ---------------------------------------------------------------

Corpus coupled_tools() {
  Builder b;
  auto inst = b.institution("Politecnico di Torino", "Italy");
  std::vector<CoupledTool> first;
  auto repeat = [&](int n, ToolKind kind, std::string_view label) {
    for (int i = 0; i < n; ++i) first.push_back({kind, std::string(label)});
  };
  const std::vector<std::string> other_labels = {"OpenLCA", "SimaPro", "GaBi", "Rhino", "Blender", "KeyShot"};
  for (int i = 0; i < 46; ++i) first.push_back({ToolKind::Other, other_labels[i % other_labels.size()]});
  repeat(45, ToolKind::AnsysMechanical, "Ansys Mechanical");
  repeat(38, ToolKind::SolidWorks, "SolidWorks");
  repeat(15, ToolKind::Abaqus, "Abaqus");
  repeat(10, ToolKind::Comsol, "COMSOL");
  repeat(9, ToolKind::Matlab, "MATLAB");
  repeat(12, ToolKind::Catia, "CATIA");
  repeat(10, ToolKind::Creo, "Creo");
  repeat(8, ToolKind::AnsysWorkbench, "Ansys Workbench");
  repeat(6, ToolKind::SiemensNx, "Siemens NX");
  repeat(4, ToolKind::Inventor, "Inventor");
  // 203 records; 15 of them get a second, different tool.
  const std::pair<std::size_t, CoupledTool> second[] = {
      {0, {ToolKind::Abaqus, "Abaqus"}},   {1, {ToolKind::Abaqus, "Abaqus"}},   {2, {ToolKind::Abaqus, "Abaqus"}},
      {3, {ToolKind::Abaqus, "Abaqus"}},   {4, {ToolKind::Abaqus, "Abaqus"}},   {46, {ToolKind::Comsol, "COMSOL"}},
      {47, {ToolKind::Comsol, "COMSOL"}},  {48, {ToolKind::Comsol, "COMSOL"}},  {49, {ToolKind::Comsol, "COMSOL"}},
      {50, {ToolKind::Comsol, "COMSOL"}},  {91, {ToolKind::Matlab, "MATLAB"}},  {92, {ToolKind::Matlab, "MATLAB"}},
      {93, {ToolKind::Matlab, "MATLAB"}},  {94, {ToolKind::Matlab, "MATLAB"}},  {95, {ToolKind::Matlab, "MATLAB"}},
  };
  std::map<std::size_t, CoupledTool> extra(std::begin(second), std::end(second));

  for (std::size_t i = 0; i < 1015; ++i) {
    DocSpec d;
    d.title = "Coupled workflow record " + std::to_string(i + 1);
    d.year = 2005 + static_cast<int>(i % 20);
    d.authors = {author_name(i % 300)};
    d.affiliations = {{0, inst}};
    d.usage = usage_of(i % 3 == 0 ? Product::Selector : Product::EduPack);
    if (i < first.size()) {
      d.usage->coupled_tools.push_back(first[i]);
      if (auto it = extra.find(i); it != extra.end()) d.usage->coupled_tools.push_back(it->second);
    }
    d.context = context_of(i % 2 ? "2.3" : "2.5");
    b.add(std::move(d));
  }
  return b.take();
}

// --- collaboration ---------------------------------------------------------------

Corpus collaboration() {
  Builder b;
  auto brescia = b.institution("University of Brescia", "Italy");
  auto cambridge = b.institution("University of Cambridge", "United Kingdom");
  auto grenoble = b.institution("Universite Grenoble Alpes", "France");
  auto jonkoping = b.institution("Jonkoping University", "Sweden");
  auto torino = b.institution("Politecnico di Torino", "Italy");

  auto add = [&](std::string title, int year, std::vector<std::string> authors, std::string inst,
                 std::vector<std::string> keywords) {
    DocSpec d;
    d.title = std::move(title);
    d.year = year;
    for (std::size_t i = 0; i < authors.size(); ++i) d.affiliations.emplace_back(static_cast<int>(i), inst);
    d.authors = std::move(authors);
    d.keywords = std::move(keywords);
    d.usage = usage_of(Product::EduPack);
    d.context = context_of("2.5");
    b.add(std::move(d));
  };

  // Bontempi group: nine papers with the three regular co-authors, three
  // with occasional ones who stay below the three-document threshold.
  const std::vector<std::string> bontempi_core = {"Bontempi, E.", "Depero, L. E.", "Federici, S.", "Zanoletti, A."};
  for (int i = 0; i < 9; ++i) {
    add("Sustainable materials from waste recovery, part " + std::to_string(i + 1), 2017 + i % 6, bontempi_core,
        brescia, {"circular economy", "recycling"});
  }
  add("Silica fume reuse in construction", 2020, {"Bontempi, E.", "Gianoncelli, A."}, brescia, {"recycling"});
  add("Ash stabilization screening", 2021, {"Bontempi, E.", "Gianoncelli, A."}, brescia, {"recycling"});
  add("Rice husk ash as a filler", 2022, {"Bontempi, E.", "Assi, A."}, brescia, {"natural fibres"});

  // Historical materials-selection group.
  for (int i = 0; i < 4; ++i) {
    add("Materials selection in mechanical design, study " + std::to_string(i + 1), 1994 + 3 * i,
        {"Ashby, M. F.", "Cebon, D."}, cambridge, {"material selection", "ashby charts"});
  }
  add("Hybrid materials and property space", 2004, {"Ashby, M. F.", "Brechet, Y.", "Cebon, D."}, grenoble,
      {"hybrids"});
  add("Architectured materials", 2006, {"Brechet, Y.", "Ashby, M. F."}, grenoble, {"hybrids"});
  add("Selection guidelines for sandwich cores", 2008, {"Ashby, M. F.", "Brechet, Y."}, grenoble,
      {"sandwich structures"});

  // Education group.
  for (int i = 0; i < 4; ++i) {
    add("Teaching materials selection, cohort " + std::to_string(i + 1), 2014 + i,
        {"Fredriksson, C.", "Lindberg, K."}, jonkoping, {"engineering education"});
  }
  add("Project-based learning with selection software", 2018, {"Fredriksson, C."}, jonkoping,
      {"engineering education"});

  // Manufacturing group.
  for (int i = 0; i < 3; ++i) {
    add("Machining process selection and energy, case " + std::to_string(i + 1), 2015 + i,
        {"Ingrao, G.", "Priarone, P. C.", "Settineri, L."}, torino, {"process selection"});
  }
  return b.take();
}

// --- Ashby neighborhood ---------------------------------------------------------

Corpus ashby_neighborhood() {
  Builder b;
  auto cambridge = b.institution("University of Cambridge");
  auto granta = b.institution("Granta Design Ltd");
  const std::tuple<const char*, int, std::string> docs[] = {
      {"Materials selection in mechanical design", 1992, cambridge},
      {"Multi-objective optimization in material design and selection", 2000, granta},
      {"Materials and the environment", 2009, cambridge},
  };
  for (const auto& [title, year, inst] : docs) {
    DocSpec d;
    d.title = title;
    d.year = year;
    d.authors = {"Ashby, M. F."};
    d.affiliations = {{0, inst}};
    d.status = CurationStatus::Ingested;
    b.add(std::move(d));
  }
  return b.take();
}

// --- two cliques -----------------------------------------------------------------

Corpus two_cliques() {
  Builder b;
  for (int i = 0; i < 10; ++i) {
    DocSpec d;
    const bool first = i < 5;
    d.title = std::string(first ? "Left" : "Right") + " group record " + std::to_string(i % 5 + 1);
    d.year = 2015 + i;
    d.authors = {author_name(static_cast<std::size_t>(i))};
    d.keywords = first ? std::vector<std::string>{"alpha", "beta", "gamma"}
                       : std::vector<std::string>{"delta", "epsilon", "zeta"};
    d.usage = usage_of(Product::EduPack);
    d.context = context_of("2.5");
    b.add(std::move(d));
  }
  return b.take();
}

std::vector<std::string_view> names() {
  return {"table1", "usage-shares", "coupled-tools", "collaboration", "ashby", "two-cliques"};
}

Corpus by_name(std::string_view name) {
  if (name == "table1") return table1();
  if (name == "usage-shares") return usage_shares();
  if (name == "coupled-tools") return coupled_tools();
  if (name == "collaboration") return collaboration();
  if (name == "ashby") return ashby_neighborhood();
  if (name == "two-cliques") return two_cliques();
  throw Error(ErrorCode::NotFound, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace litmon::fixtures
