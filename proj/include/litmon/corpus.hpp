#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litmon/model.hpp"

namespace litmon {

/// Node kind in a navigation subgraph. Documents sort after entities.
enum class NodeKind : std::uint8_t { Author, Institution, Country, Product, FosField, Document };

std::string_view to_string(NodeKind kind);

struct SubgraphNode {
  std::string id;
  NodeKind kind = NodeKind::Document;
  std::string label;
  std::string canonical_key;
  int distance = 0;

  bool operator==(const SubgraphNode&) const = default;
};

struct Subgraph {
  std::vector<SubgraphNode> nodes;  // ordered by (kind, canonical_key, id)
  std::vector<Link> links;          // links with both endpoints in `nodes`, sorted

  bool contains(std::string_view id) const;
};

/// The document/entity graph as a value. Every mutation validates the hard
/// invariants and keeps the bidirectional link index current; a failed
/// mutation throws and leaves the corpus unchanged.
class Corpus {
 public:
  Corpus() = default;

  // -- reads -----------------------------------------------------------------
  const std::map<std::string, DocumentRecord>& records() const { return records_; }
  const std::map<std::string, EntityRecord>& entities() const { return entities_; }
  const std::vector<Link>& entity_links() const { return entity_links_; }
  const std::vector<AuditEntry>& audit() const { return audit_; }
  const CorpusMeta& meta() const { return meta_; }

  const DocumentRecord* find_record(std::string_view record_id) const;
  const DocumentRecord* find_by_short_name(std::string_view short_name) const;
  const EntityRecord* find_entity(std::string_view entity_id) const;
  const EntityRecord* find_entity(EntityKind kind, std::string_view canonical_key) const;

  /// Every stored link with `id` as either endpoint.
  std::vector<Link> links_of(std::string_view id) const;

  /// Nodes reachable within `depth` hops from a document or entity.
  Subgraph neighborhood(std::string_view id, int depth) const;

  /// Records in (year, short_name) order.
  std::vector<const DocumentRecord*> ordered_records() const;

  // -- mutations -------------------------------------------------------------

  /// Inserts or replaces a record and returns its id. A record without id
  /// whose content equals a stored record resolves to that record.
  std::string upsert_record(DocumentRecord record);

  /// Inserts an entity, or returns the id of the existing entity of the same
  /// kind and canonical key.
  std::string upsert_entity(EntityRecord entity);

  void link_entities(std::string_view from_id, std::string_view to_id, LinkType type);

  /// Re-points every link of `drop` to `keep` and removes `drop`.
  void merge_entities(std::string_view keep_id, std::string_view drop_id);

  /// Throws EntityInUse while any link references the entity.
  void remove_entity(std::string_view entity_id);

  void set_status(std::string_view record_id, CurationStatus status);
  void append_audit(AuditEntry entry);
  void set_meta(CorpusMeta meta) { meta_ = std::move(meta); }

  /// Loader path: stores records and entities as found in a file, without
  /// the boundary checks, so that quality checks can report on them.
  void load_record_unchecked(DocumentRecord record);
  void load_entity_unchecked(EntityRecord entity);
  void load_entity_link_unchecked(Link link);

  bool operator==(const Corpus& other) const;

 private:
  friend class CorpusStore;

  void validate(const DocumentRecord& record) const;
  void index_record(const DocumentRecord& record);
  void unindex_record(const DocumentRecord& record);
  std::string next_record_id();
  std::string derive_short_name(const DocumentRecord& record) const;
  void index_link(const Link& link);
  void unindex_link(const Link& link);

  std::map<std::string, DocumentRecord> records_;
  std::map<std::string, EntityRecord> entities_;
  std::vector<Link> entity_links_;
  std::vector<AuditEntry> audit_;
  CorpusMeta meta_;

  std::map<std::string, std::string, std::less<>> short_names_;
  std::map<std::pair<EntityKind, std::string>, std::string, std::less<>> entity_keys_;
  std::map<std::string, std::vector<Link>, std::less<>> adjacency_;
  std::uint64_t next_sequence_ = 1;
};

/// Single-writer, multi-reader holder of the current corpus snapshot.
/// Readers get an immutable snapshot; writers are serialized and publish a
/// new snapshot with a bumped version on success.
class CorpusStore {
 public:
  explicit CorpusStore(Corpus initial = {});

  std::shared_ptr<const Corpus> snapshot() const;
  std::uint64_t version() const;

  /// Snapshot and its version, read atomically.
  std::pair<std::shared_ptr<const Corpus>, std::uint64_t> versioned_snapshot() const;

  template <class Fn>
  auto mutate(Fn&& fn) {
    std::lock_guard writer(writer_mutex_);
    auto working = std::make_shared<Corpus>(*snapshot());
    if constexpr (std::is_void_v<decltype(fn(*working))>) {
      fn(*working);
      publish(std::move(working));
    } else {
      auto result = fn(*working);
      publish(std::move(working));
      return result;
    }
  }

 private:
  void publish(std::shared_ptr<const Corpus> next);

  mutable std::shared_mutex snapshot_mutex_;
  std::mutex writer_mutex_;
  std::shared_ptr<const Corpus> current_;
  std::uint64_t version_ = 0;
};

}  // namespace litmon
