#pragma once

// Record filters: conjunctions of equality, range and substring predicates.
//
//   year=2015..2020;product=EduPack;type=Thesis;title~eco audit
//
// `field=value` tests equality (case-insensitive; enum fields accept their
// names, product also its legacy aliases), `field=lo..hi` an inclusive
// numeric range with either bound optional, `field~text` a substring after
// folding case and diacritics. Multi-valued fields (keyword, material,
// tool, author, institution, country) match when any value matches.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litmon/corpus.hpp"

namespace litmon {

enum class PredicateOp : std::uint8_t { Equals, Range, Contains };

struct Predicate {
  std::string field;
  PredicateOp op = PredicateOp::Equals;
  std::string value;
  std::optional<int> low;
  std::optional<int> high;

  bool operator==(const Predicate&) const = default;
};

class FilterExpr {
 public:
  FilterExpr() = default;

  /// Throws UnknownField, MalformedRange, or InvalidArgument for a clause
  /// without an operator.
  static FilterExpr parse(std::string_view text);

  /// Field names accepted in predicates.
  static std::span<const std::string_view> fields();

  bool matches(const Corpus& corpus, const DocumentRecord& record) const;
  bool empty() const { return predicates_.empty(); }
  const std::vector<Predicate>& predicates() const { return predicates_; }
  std::string to_string() const;

  void add(Predicate p);

 private:
  std::vector<Predicate> predicates_;
};

/// Matching records ordered by (year, short_name).
std::vector<const DocumentRecord*> query(const Corpus& corpus, const FilterExpr& filter);

/// Copy of the corpus restricted to matching records; entities are kept.
Corpus restrict(const Corpus& corpus, const FilterExpr& filter);

}  // namespace litmon
