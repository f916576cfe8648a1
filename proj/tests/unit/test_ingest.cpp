#include <gtest/gtest.h>

#include <map>
#include <set>

#include "litmon/ingest.hpp"

using namespace litmon;

TEST(AuthorNames, FamilyCommaGiven) {
  const auto n = normalize_author_name("Ashby, Michael F.");
  EXPECT_EQ(n.display_name, "Ashby, M. F.");
  EXPECT_EQ(n.canonical_key, "ashby_mf");
  EXPECT_TRUE(n.parsed);
}

TEST(AuthorNames, GivenFamily) {
  EXPECT_EQ(normalize_author_name("Michael F. Ashby").canonical_key, "ashby_mf");
  EXPECT_EQ(normalize_author_name("M.F. Ashby").canonical_key, "ashby_mf");
}

TEST(AuthorNames, DiacriticsFoldIntoTheKey) {
  const auto n = normalize_author_name("Bréchet, Yves");
  EXPECT_EQ(n.display_name, "Bréchet, Y.");
  EXPECT_EQ(n.canonical_key, "brechet_y");
  EXPECT_EQ(normalize_author_name("Brechet, Y.").canonical_key, n.canonical_key);
}

TEST(AuthorNames, HyphenatedGivenNames) {
  EXPECT_EQ(normalize_author_name("Perdu, Jean-François").display_name, "Perdu, J.-F.");
}

TEST(AuthorNames, CorporateNameKeptAsIs) {
  const auto n = normalize_author_name("Granta Design");
  EXPECT_FALSE(n.canonical_key.empty());
  const auto single = normalize_author_name("Anonymous");
  EXPECT_FALSE(single.parsed);
  EXPECT_EQ(single.display_name, "Anonymous");
}

TEST(AuthorNames, BlankThrows) { EXPECT_THROW(normalize_author_name("   "), Error); }

TEST(Affiliations, Countries) {
  EXPECT_EQ(find_country("University of Cambridge, Cambridge, UK")->code, "GB");
  EXPECT_EQ(find_country("Technische Universität München, Munich, Germany")->code, "DE");
  EXPECT_EQ(find_country("Politecnico di Torino, Torino, Italy")->name, "Italy");
  EXPECT_FALSE(find_country("Granta Design Ltd").has_value());
}

TEST(Affiliations, InstitutionName) {
  EXPECT_EQ(institution_name("Department of Engineering, University of Cambridge, Cambridge, UK"),
            "University of Cambridge");
  EXPECT_EQ(institution_name("Granta Design Ltd"), "Granta Design Ltd");
}

namespace {

IntrinsicRecord sample() {
  IntrinsicRecord r;
  r.source_key = "cebon_1994";
  r.title = "Materials selection for  precision instruments";
  r.year = 1994;
  r.resource_type_hint = ResourceType::ReviewedPaper;
  r.venue = "Measurement Science and Technology";
  r.doi = "https://doi.org/10.1088/0957-0233/5/3/015";
  r.authors = {"Cebon, David", "Ashby, Michael F."};
  r.affiliations = {{0, "Department of Engineering, University of Cambridge, Cambridge, UK"},
                    {1, "Department of Engineering, University of Cambridge, Cambridge, UK"}};
  r.language = "English";
  r.raw_source = SourceFormat::BibTeX;
  return r;
}

}  // namespace

TEST(Ingest, CreatesRecordAndEntities) {
  Corpus c;
  const auto out = ingest_record(c, sample());
  EXPECT_TRUE(out.issues.empty());
  const auto* r = c.find_record(out.record_id);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->title, "Materials selection for precision instruments");
  EXPECT_EQ(r->doi, "10.1088/0957-0233/5/3/015");
  EXPECT_EQ(r->language, "english");
  EXPECT_EQ(r->curation_status, CurationStatus::Ingested);
  EXPECT_EQ(r->author_links.size(), 2u);
  EXPECT_EQ(r->institution_links.size(), 2u);  // one per author ordinal
  EXPECT_EQ(r->country_links.size(), 2u);
  ASSERT_TRUE(r->source.has_value());
  EXPECT_EQ(*r->source, sample());

  std::map<EntityKind, int> kinds;
  for (const auto& [id, e] : c.entities()) ++kinds[e.kind];
  EXPECT_EQ(kinds[EntityKind::Author], 2);
  EXPECT_EQ(kinds[EntityKind::Institution], 1);
  EXPECT_EQ(kinds[EntityKind::Country], 1);
}

TEST(Ingest, ReingestIsIdempotent) {
  Corpus c;
  const auto a = ingest_record(c, sample());
  const auto b = ingest_record(c, sample());
  EXPECT_EQ(a.record_id, b.record_id);
  EXPECT_EQ(c.records().size(), 1u);
}

TEST(Ingest, WarningsForIncompleteMetadata) {
  Corpus c;
  IntrinsicRecord r;
  r.title = "Untyped";
  r.doi = "doi:not valid";
  const auto out = ingest_record(c, r);
  std::set<std::string> codes;
  for (const auto& i : out.issues) {
    codes.insert(i.code);
    EXPECT_EQ(i.record_id, out.record_id);
  }
  EXPECT_TRUE(codes.count("DefaultedType"));
  EXPECT_TRUE(codes.count("InvalidDoi"));
  EXPECT_TRUE(codes.count("MissingYear"));
  EXPECT_TRUE(codes.count("MissingAuthors"));
  EXPECT_FALSE(c.find_record(out.record_id)->doi.has_value());
}

TEST(Ingest, RepeatedAuthorLinkedOnce) {
  Corpus c;
  auto r = sample();
  r.authors = {"Ashby, M. F.", "Michael F. Ashby", "Cebon, D."};
  r.affiliations.clear();
  const auto out = ingest_record(c, r);
  const auto* rec = c.find_record(out.record_id);
  ASSERT_EQ(rec->author_links.size(), 2u);
  EXPECT_EQ(rec->author_links[1].ordinal, 2);
}

TEST(Doi, Normalization) {
  EXPECT_EQ(normalize_doi("10.1016/J.MATDES.2021.109711"), "10.1016/j.matdes.2021.109711");
  EXPECT_EQ(normalize_doi("https://doi.org/10.1000/xyz"), "10.1000/xyz");
  EXPECT_EQ(normalize_doi("http://dx.doi.org/10.1000/xyz"), "10.1000/xyz");
  EXPECT_EQ(normalize_doi("doi:10.1000/xyz"), "10.1000/xyz");
  EXPECT_FALSE(normalize_doi("10.1000").has_value());
  EXPECT_FALSE(normalize_doi("11.1000/xyz").has_value());
  EXPECT_FALSE(normalize_doi("").has_value());
}

TEST(YearMonthText, ParseAndFormat) {
  EXPECT_EQ(parse_year_month("2025-09"), (YearMonth{2025, 9}));
  EXPECT_EQ(parse_year_month("2024"), (YearMonth{2024, 12}));
  EXPECT_FALSE(parse_year_month("2024-13").has_value());
  EXPECT_EQ(format_year_month({2025, 9}), "2025-09");
}
