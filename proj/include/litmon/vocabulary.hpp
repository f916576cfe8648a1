#pragma once

// Closed vocabularies of the corpus schema and their string forms.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "litmon/error.hpp"

namespace litmon {

enum class ResourceType : std::uint8_t {
  ReviewedPaper,
  ConferenceProceedings,
  Thesis,
  TechnicalReportWhitePaper,
  StandardPatent,
};

enum class CurationStatus : std::uint8_t { Ingested, Annotated, Validated, Excluded };

enum class Product : std::uint8_t { EduPack, Selector, MI };

enum class UsageContext : std::uint8_t { AcademicResearch, Education, Benchmarking, CompetitiveAnalysis };

enum class ResearchSegment : std::uint8_t { Academia, Industrial, Education };

enum class MaterialFamily : std::uint8_t {
  MetalsAndAlloys,
  Polymers,
  CeramicsAndGlasses,
  Composites,
  Elastomers,
  Foams,
  NaturalMaterials,
  Hybrids,
  Generic,
};

enum class ScopeDepth : std::uint8_t { Low, Medium, High };

enum class EntityKind : std::uint8_t { Author, Institution, Country, Product, FosField };

enum class LinkType : std::uint8_t { AuthoredBy, AffiliatedWith, LocatedIn, UsesProduct, InField };

enum class Severity : std::uint8_t { Error, Warning, Info };

enum class SourceFormat : std::uint8_t { BibTeX, RIS, DoiService, Manual };

enum class ToolKind : std::uint8_t {
  AnsysMechanical,
  AnsysWorkbench,
  AnsysFluent,
  AnsysLsDyna,
  Abaqus,
  Comsol,
  Marc,
  Nastran,
  Hypermesh,
  Moldflow,
  SolidWorks,
  Catia,
  Creo,
  SiemensNx,
  Inventor,
  Fusion360,
  Matlab,
  OpenFoam,
  Other,
};

template <class E>
struct EnumTraits;

#define LITMON_ENUM_TRAITS(E, ...)                                        \
  template <>                                                             \
  struct EnumTraits<E> {                                                  \
    static constexpr std::array names = std::to_array<std::string_view>({__VA_ARGS__}); \
    static constexpr std::string_view type_name = #E;                    \
  };

LITMON_ENUM_TRAITS(ResourceType, "ReviewedPaper", "ConferenceProceedings", "Thesis", "TechnicalReportWhitePaper",
                   "StandardPatent")
LITMON_ENUM_TRAITS(CurationStatus, "Ingested", "Annotated", "Validated", "Excluded")
LITMON_ENUM_TRAITS(Product, "EduPack", "Selector", "MI")
LITMON_ENUM_TRAITS(UsageContext, "AcademicResearch", "Education", "Benchmarking", "CompetitiveAnalysis")
LITMON_ENUM_TRAITS(ResearchSegment, "Academia", "Industrial", "Education")
LITMON_ENUM_TRAITS(MaterialFamily, "MetalsAndAlloys", "Polymers", "CeramicsAndGlasses", "Composites", "Elastomers",
                   "Foams", "NaturalMaterials", "Hybrids", "Generic")
LITMON_ENUM_TRAITS(ScopeDepth, "Low", "Medium", "High")
LITMON_ENUM_TRAITS(EntityKind, "Author", "Institution", "Country", "Product", "FosField")
LITMON_ENUM_TRAITS(LinkType, "AuthoredBy", "AffiliatedWith", "LocatedIn", "UsesProduct", "InField")
LITMON_ENUM_TRAITS(Severity, "Error", "Warning", "Info")
LITMON_ENUM_TRAITS(SourceFormat, "BibTeX", "RIS", "DoiService", "Manual")
LITMON_ENUM_TRAITS(ToolKind, "AnsysMechanical", "AnsysWorkbench", "AnsysFluent", "AnsysLsDyna", "Abaqus", "Comsol",
                   "Marc", "Nastran", "Hypermesh", "Moldflow", "SolidWorks", "Catia", "Creo", "SiemensNx", "Inventor",
                   "Fusion360", "Matlab", "OpenFoam", "Other")

#undef LITMON_ENUM_TRAITS

template <class E>
constexpr std::size_t enum_count() {
  return EnumTraits<E>::names.size();
}

template <class E>
constexpr bool enum_in_range(E value) {
  return static_cast<std::size_t>(value) < enum_count<E>();
}

template <class E>
constexpr std::string_view to_string(E value) {
  auto i = static_cast<std::size_t>(value);
  return i < enum_count<E>() ? EnumTraits<E>::names[i] : std::string_view{"?"};
}

/// Exact (case-insensitive) name lookup.
template <class E>
std::optional<E> try_parse_enum(std::string_view name) {
  for (std::size_t i = 0; i < enum_count<E>(); ++i) {
    const auto& candidate = EnumTraits<E>::names[i];
    if (candidate.size() == name.size()) {
      bool same = true;
      for (std::size_t k = 0; k < name.size() && same; ++k) {
        same = (candidate[k] | 0x20) == (name[k] | 0x20);
      }
      if (same) return static_cast<E>(i);
    }
  }
  return std::nullopt;
}

template <class E>
E parse_enum(std::string_view name) {
  if (auto v = try_parse_enum<E>(name)) return *v;
  throw Error(ErrorCode::InvalidEnumValue,
              "invalid " + std::string(EnumTraits<E>::type_name) + " value '" + std::string(name) + "'");
}

template <class E>
constexpr auto all_enum_values() {
  std::array<E, enum_count<E>()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<E>(i);
  return out;
}

// --- products -------------------------------------------------------------

struct ProductAlias {
  std::string_view label;
  Product product;
};

/// Canonical and legacy product names, including the CES-era brands.
std::span<const ProductAlias> product_aliases();

/// Resolves a canonical or legacy product name. Matching ignores case,
/// punctuation and whitespace.
std::optional<Product> resolve_product(std::string_view label);

// --- coupled CAD/CAE/FEM tools -----------------------------------------------

struct CoupledTool {
  ToolKind kind = ToolKind::Other;
  std::string raw_label;

  auto operator<=>(const CoupledTool&) const = default;
};

/// Maps a free-text tool name to the controlled vocabulary. Unknown names map
/// to Other; the raw label is retained either way.
CoupledTool resolve_tool(std::string_view label);

/// Human-readable name used in reports ("Ansys Mechanical").
std::string_view tool_display_name(ToolKind kind);

// --- OECD Fields of Science and Technology (2007), second-order level --------

struct FosCategory {
  std::string_view code;  // "2.5"
  std::string_view id;    // "MaterialsEngineering"
  std::string_view name;  // "Materials engineering"
};

std::span<const FosCategory> fos_taxonomy();

class FosField {
 public:
  static std::optional<FosField> from_id(std::string_view id);
  static std::optional<FosField> from_code(std::string_view code);
  /// Accepts an identifier, a code or the category name.
  static std::optional<FosField> parse(std::string_view text);

  std::string_view id() const;
  std::string_view code() const;
  std::string_view name() const;

  auto operator<=>(const FosField&) const = default;

 private:
  explicit FosField(std::uint8_t index) : index_(index) {}
  std::uint8_t index_ = 0;
};

}  // namespace litmon
