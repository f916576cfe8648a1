#include <gtest/gtest.h>

#include "litmon/vocabulary.hpp"

using namespace litmon;

TEST(Vocabulary, EnumNamesRoundTrip) {
  for (auto t : all_enum_values<ResourceType>()) EXPECT_EQ(parse_enum<ResourceType>(to_string(t)), t);
  for (auto k : all_enum_values<ToolKind>()) EXPECT_EQ(parse_enum<ToolKind>(to_string(k)), k);
  EXPECT_EQ(enum_count<ResourceType>(), 5u);
}

TEST(Vocabulary, ParseIsCaseInsensitive) {
  EXPECT_EQ(try_parse_enum<CurationStatus>("validated"), CurationStatus::Validated);
  EXPECT_FALSE(try_parse_enum<CurationStatus>("Valid").has_value());
}

TEST(Vocabulary, InvalidEnumThrows) {
  try {
    parse_enum<Product>("Photoshop");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidEnumValue);
  }
}

TEST(Vocabulary, ProductAliases) {
  EXPECT_EQ(resolve_product("EduPack"), Product::EduPack);
  EXPECT_EQ(resolve_product("CES EduPack"), Product::EduPack);
  EXPECT_EQ(resolve_product("Granta CES"), Product::EduPack);
  EXPECT_EQ(resolve_product("ces-edupack"), Product::EduPack);
  EXPECT_EQ(resolve_product("Granta Selector"), Product::Selector);
  EXPECT_EQ(resolve_product("GRANTA MI"), Product::MI);
  EXPECT_FALSE(resolve_product("MATLAB").has_value());
}

TEST(Vocabulary, Tools) {
  EXPECT_EQ(resolve_tool("ANSYS Mechanical").kind, ToolKind::AnsysMechanical);
  EXPECT_EQ(resolve_tool("solidworks").kind, ToolKind::SolidWorks);
  EXPECT_EQ(resolve_tool("COMSOL Multiphysics").kind, ToolKind::Comsol);
  const auto other = resolve_tool("OpenLCA");
  EXPECT_EQ(other.kind, ToolKind::Other);
  EXPECT_EQ(other.raw_label, "OpenLCA");
  EXPECT_EQ(tool_display_name(ToolKind::AnsysMechanical), "Ansys Mechanical");
}

TEST(Vocabulary, FosTaxonomy) {
  const auto f = FosField::from_code("2.5");
  ASSERT_TRUE(f);
  EXPECT_EQ(f->id(), "MaterialsEngineering");
  EXPECT_EQ(f->name(), "Materials engineering");
  EXPECT_EQ(FosField::parse("Materials engineering"), f);
  EXPECT_EQ(FosField::parse("MaterialsEngineering"), f);
  EXPECT_FALSE(FosField::from_code("9.9").has_value());
  EXPECT_GT(fos_taxonomy().size(), 30u);
}
