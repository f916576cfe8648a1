#include "litmon/vocabulary.hpp"

#include "litmon/text.hpp"

namespace litmon {

namespace {

constexpr ProductAlias kProductAliases[] = {
    {"EduPack", Product::EduPack},
    {"Granta EduPack", Product::EduPack},
    {"Ansys Granta EduPack", Product::EduPack},
    {"CES EduPack", Product::EduPack},
    {"Granta CES EduPack", Product::EduPack},
    {"CES Edu Pack", Product::EduPack},
    // Bare "CES" in the legacy literature overwhelmingly refers to the
    // teaching edition.
    {"Granta CES", Product::EduPack},
    {"CES", Product::EduPack},
    {"Selector", Product::Selector},
    {"Granta Selector", Product::Selector},
    {"Ansys Granta Selector", Product::Selector},
    {"CES Selector", Product::Selector},
    {"Granta CES Selector", Product::Selector},
    {"Cambridge Engineering Selector", Product::Selector},
    {"MI", Product::MI},
    {"Granta MI", Product::MI},
    {"Granta MI Enterprise", Product::MI},
    {"Ansys Granta MI", Product::MI},
    {"Ansys Granta MI Enterprise", Product::MI},
};

struct ToolAlias {
  std::string_view label;
  ToolKind kind;
};

constexpr ToolAlias kToolAliases[] = {
    {"Ansys Mechanical", ToolKind::AnsysMechanical},
    {"Ansys APDL", ToolKind::AnsysMechanical},
    {"Ansys Mechanical APDL", ToolKind::AnsysMechanical},
    {"Ansys", ToolKind::AnsysMechanical},
    {"Ansys Workbench", ToolKind::AnsysWorkbench},
    {"Workbench", ToolKind::AnsysWorkbench},
    {"Ansys Fluent", ToolKind::AnsysFluent},
    {"Fluent", ToolKind::AnsysFluent},
    {"Ansys LS-DYNA", ToolKind::AnsysLsDyna},
    {"LS-DYNA", ToolKind::AnsysLsDyna},
    {"Abaqus", ToolKind::Abaqus},
    {"Simulia Abaqus", ToolKind::Abaqus},
    {"COMSOL", ToolKind::Comsol},
    {"COMSOL Multiphysics", ToolKind::Comsol},
    {"Marc", ToolKind::Marc},
    {"MSC Marc", ToolKind::Marc},
    {"Nastran", ToolKind::Nastran},
    {"MSC Nastran", ToolKind::Nastran},
    {"HyperMesh", ToolKind::Hypermesh},
    {"Altair HyperMesh", ToolKind::Hypermesh},
    {"Moldflow", ToolKind::Moldflow},
    {"Autodesk Moldflow", ToolKind::Moldflow},
    {"SolidWorks", ToolKind::SolidWorks},
    {"SOLIDWORKS Simulation", ToolKind::SolidWorks},
    {"CATIA", ToolKind::Catia},
    {"Creo", ToolKind::Creo},
    {"PTC Creo", ToolKind::Creo},
    {"Siemens NX", ToolKind::SiemensNx},
    {"NX", ToolKind::SiemensNx},
    {"Inventor", ToolKind::Inventor},
    {"Autodesk Inventor", ToolKind::Inventor},
    {"Fusion 360", ToolKind::Fusion360},
    {"MATLAB", ToolKind::Matlab},
    {"OpenFOAM", ToolKind::OpenFoam},
    {"Other", ToolKind::Other},
};

constexpr std::string_view kToolDisplayNames[] = {
    "Ansys Mechanical", "Ansys Workbench", "Ansys Fluent", "Ansys LS-DYNA", "Abaqus", "COMSOL", "Marc",
    "Nastran", "HyperMesh", "Moldflow", "SolidWorks", "CATIA", "Creo", "Siemens NX", "Inventor",
    "Fusion 360", "MATLAB", "OpenFOAM", "Other",
};
static_assert(std::size(kToolDisplayNames) == enum_count<ToolKind>());

constexpr FosCategory kFosTaxonomy[] = {
    {"1.1", "Mathematics", "Mathematics"},
    {"1.2", "ComputerAndInformationSciences", "Computer and information sciences"},
    {"1.3", "PhysicalSciences", "Physical sciences"},
    {"1.4", "ChemicalSciences", "Chemical sciences"},
    {"1.5", "EarthAndRelatedEnvironmentalSciences", "Earth and related environmental sciences"},
    {"1.6", "BiologicalSciences", "Biological sciences"},
    {"1.7", "OtherNaturalSciences", "Other natural sciences"},
    {"2.1", "CivilEngineering", "Civil engineering"},
    {"2.2", "ElectricalElectronicInformationEngineering",
     "Electrical engineering, electronic engineering, information engineering"},
    {"2.3", "MechanicalEngineering", "Mechanical engineering"},
    {"2.4", "ChemicalEngineering", "Chemical engineering"},
    {"2.5", "MaterialsEngineering", "Materials engineering"},
    {"2.6", "MedicalEngineering", "Medical engineering"},
    {"2.7", "EnvironmentalEngineering", "Environmental engineering"},
    {"2.8", "EnvironmentalBiotechnology", "Environmental biotechnology"},
    {"2.9", "IndustrialBiotechnology", "Industrial biotechnology"},
    {"2.10", "NanoTechnology", "Nano-technology"},
    {"2.11", "OtherEngineeringAndTechnologies", "Other engineering and technologies"},
    {"3.1", "BasicMedicine", "Basic medicine"},
    {"3.2", "ClinicalMedicine", "Clinical medicine"},
    {"3.3", "HealthSciences", "Health sciences"},
    {"3.4", "HealthBiotechnology", "Health biotechnology"},
    {"3.5", "OtherMedicalSciences", "Other medical sciences"},
    {"4.1", "AgricultureForestryFisheries", "Agriculture, forestry, and fisheries"},
    {"4.2", "AnimalAndDairyScience", "Animal and dairy science"},
    {"4.3", "VeterinaryScience", "Veterinary science"},
    {"4.4", "AgriculturalBiotechnology", "Agricultural biotechnology"},
    {"4.5", "OtherAgriculturalSciences", "Other agricultural sciences"},
    {"5.1", "Psychology", "Psychology"},
    {"5.2", "EconomicsAndBusiness", "Economics and business"},
    {"5.3", "EducationalSciences", "Educational sciences"},
    {"5.4", "Sociology", "Sociology"},
    {"5.5", "Law", "Law"},
    {"5.6", "PoliticalScience", "Political science"},
    {"5.7", "SocialAndEconomicGeography", "Social and economic geography"},
    {"5.8", "MediaAndCommunications", "Media and communications"},
    {"5.9", "OtherSocialSciences", "Other social sciences"},
    {"6.1", "HistoryAndArchaeology", "History and archaeology"},
    {"6.2", "LanguagesAndLiterature", "Languages and literature"},
    {"6.3", "PhilosophyEthicsReligion", "Philosophy, ethics and religion"},
    {"6.4", "Arts", "Arts (arts, history of arts, performing arts, music)"},
    {"6.5", "OtherHumanities", "Other humanities"},
};

}  // namespace

std::span<const ProductAlias> product_aliases() { return kProductAliases; }

std::optional<Product> resolve_product(std::string_view label) {
  const auto key = text::fold_key(label);
  if (key.empty()) return std::nullopt;
  for (const auto& alias : kProductAliases) {
    if (text::fold_key(alias.label) == key) return alias.product;
  }
  return std::nullopt;
}

CoupledTool resolve_tool(std::string_view label) {
  CoupledTool tool;
  tool.raw_label = text::collapse_whitespace(label);
  const auto key = text::fold_key(label);
  for (const auto& alias : kToolAliases) {
    if (text::fold_key(alias.label) == key) {
      tool.kind = alias.kind;
      return tool;
    }
  }
  for (auto kind : all_enum_values<ToolKind>()) {
    if (text::fold_key(to_string(kind)) == key) {
      tool.kind = kind;
      return tool;
    }
  }
  tool.kind = ToolKind::Other;
  return tool;
}

std::string_view tool_display_name(ToolKind kind) {
  auto i = static_cast<std::size_t>(kind);
  return i < std::size(kToolDisplayNames) ? kToolDisplayNames[i] : "Other";
}

std::span<const FosCategory> fos_taxonomy() { return kFosTaxonomy; }

std::optional<FosField> FosField::from_id(std::string_view id) {
  for (std::size_t i = 0; i < std::size(kFosTaxonomy); ++i) {
    if (kFosTaxonomy[i].id == id) return FosField(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

std::optional<FosField> FosField::from_code(std::string_view code) {
  code = text::trim(code);
  for (std::size_t i = 0; i < std::size(kFosTaxonomy); ++i) {
    if (kFosTaxonomy[i].code == code) return FosField(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

std::optional<FosField> FosField::parse(std::string_view input) {
  if (auto f = from_id(input)) return f;
  if (auto f = from_code(input)) return f;
  const auto key = text::fold_key(input);
  for (std::size_t i = 0; i < std::size(kFosTaxonomy); ++i) {
    if (text::fold_key(kFosTaxonomy[i].id) == key || text::fold_key(kFosTaxonomy[i].name) == key) {
      return FosField(static_cast<std::uint8_t>(i));
    }
  }
  return std::nullopt;
}

std::string_view FosField::id() const { return kFosTaxonomy[index_].id; }
std::string_view FosField::code() const { return kFosTaxonomy[index_].code; }
std::string_view FosField::name() const { return kFosTaxonomy[index_].name; }

}  // namespace litmon
