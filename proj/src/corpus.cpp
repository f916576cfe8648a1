#include "litmon/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>

#include "litmon/text.hpp"

namespace litmon {

namespace {

constexpr std::string_view kNodeKindNames[] = {"Author", "Institution", "Country", "Product", "FosField", "Document"};

NodeKind node_kind(EntityKind kind) { return static_cast<NodeKind>(static_cast<std::uint8_t>(kind)); }

std::string_view entity_id_prefix(EntityKind kind) {
  switch (kind) {
    case EntityKind::Author: return "author:";
    case EntityKind::Institution: return "institution:";
    case EntityKind::Country: return "country:";
    case EntityKind::Product: return "product:";
    case EntityKind::FosField: return "fos:";
  }
  return "entity:";
}

struct LinkSlot {
  const std::vector<Link> DocumentRecord::*member;
  EntityKind kind;
  LinkType type;
  std::string_view name;
};

constexpr LinkSlot kLinkSlots[] = {
    {&DocumentRecord::author_links, EntityKind::Author, LinkType::AuthoredBy, "author_links"},
    {&DocumentRecord::institution_links, EntityKind::Institution, LinkType::AffiliatedWith, "institution_links"},
    {&DocumentRecord::country_links, EntityKind::Country, LinkType::LocatedIn, "country_links"},
    {&DocumentRecord::product_links, EntityKind::Product, LinkType::UsesProduct, "product_links"},
    {&DocumentRecord::field_links, EntityKind::FosField, LinkType::InField, "field_links"},
};

template <class Fn>
void for_each_link(const DocumentRecord& record, Fn&& fn) {
  for (const auto& slot : kLinkSlots) {
    for (const auto& link : record.*(slot.member)) fn(link);
  }
}

template <class Fn>
void for_each_link_mut(DocumentRecord& record, Fn&& fn) {
  for (auto* list : {&record.author_links, &record.institution_links, &record.country_links, &record.product_links,
                     &record.field_links}) {
    for (auto& link : *list) fn(link);
  }
}

void check_enums(const DocumentRecord& r) {
  auto bad = [](std::string_view what) {
    throw Error(ErrorCode::InvalidEnumValue, "record has an out-of-range " + std::string(what));
  };
  if (!enum_in_range(r.resource_type)) bad("resource_type");
  if (!enum_in_range(r.curation_status)) bad("curation_status");
  for_each_link(r, [&](const Link& l) {
    if (!enum_in_range(l.link_type)) bad("link_type");
  });
  if (r.usage) {
    if (r.usage->principal_product && !enum_in_range(*r.usage->principal_product)) bad("principal_product");
    if (!enum_in_range(r.usage->usage_context)) bad("usage_context");
    for (const auto& t : r.usage->coupled_tools) {
      if (!enum_in_range(t.kind)) bad("coupled tool");
    }
  }
  if (r.application) {
    if (!enum_in_range(r.application->research_segment)) bad("research_segment");
    for (auto m : r.application->material_families) {
      if (!enum_in_range(m)) bad("material family");
    }
    if (r.application->scope_depth && !enum_in_range(*r.application->scope_depth)) bad("scope_depth");
  }
}

bool lifecycle_allows(CurationStatus from, CurationStatus to) {
  if (from == to || to == CurationStatus::Excluded || to == CurationStatus::Annotated) return true;
  return static_cast<int>(to) == static_cast<int>(from) + 1;
}

}  // namespace

std::string_view to_string(NodeKind kind) { return kNodeKindNames[static_cast<std::size_t>(kind)]; }

bool Subgraph::contains(std::string_view id) const {
  return std::any_of(nodes.begin(), nodes.end(), [&](const SubgraphNode& n) { return n.id == id; });
}

// --- reads -------------------------------------------------------------------

const DocumentRecord* Corpus::find_record(std::string_view record_id) const {
  auto it = records_.find(std::string(record_id));
  return it == records_.end() ? nullptr : &it->second;
}

const DocumentRecord* Corpus::find_by_short_name(std::string_view short_name) const {
  auto it = short_names_.find(short_name);
  return it == short_names_.end() ? nullptr : find_record(it->second);
}

const EntityRecord* Corpus::find_entity(std::string_view entity_id) const {
  auto it = entities_.find(std::string(entity_id));
  return it == entities_.end() ? nullptr : &it->second;
}

const EntityRecord* Corpus::find_entity(EntityKind kind, std::string_view canonical_key) const {
  auto it = entity_keys_.find(std::pair{kind, std::string(canonical_key)});
  return it == entity_keys_.end() ? nullptr : find_entity(it->second);
}

std::vector<Link> Corpus::links_of(std::string_view id) const {
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? std::vector<Link>{} : it->second;
}

Subgraph Corpus::neighborhood(std::string_view id, int depth) const {
  if (!find_record(id) && !find_entity(id)) {
    throw Error(ErrorCode::UnknownEntity, "unknown entity '" + std::string(id) + "'");
  }
  if (depth < 1) {
    throw Error(ErrorCode::UnknownDepth, "depth must be at least 1, got " + std::to_string(depth));
  }
  std::map<std::string, int> distance{{std::string(id), 0}};
  std::deque<std::string> frontier{std::string(id)};
  while (!frontier.empty()) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    const int d = distance[current];
    if (d >= depth) continue;
    auto it = adjacency_.find(current);
    if (it == adjacency_.end()) continue;
    for (const auto& link : it->second) {
      const std::string& other = link.from_id == current ? link.to_id : link.from_id;
      if (!find_record(other) && !find_entity(other)) continue;  // dangling
      if (distance.emplace(other, d + 1).second) frontier.push_back(other);
    }
  }

  Subgraph out;
  for (const auto& [node_id, d] : distance) {
    SubgraphNode node;
    node.id = node_id;
    node.distance = d;
    if (const auto* rec = find_record(node_id)) {
      node.kind = NodeKind::Document;
      node.label = rec->title;
      node.canonical_key = rec->short_name;
    } else {
      const auto* ent = find_entity(node_id);
      node.kind = node_kind(ent->kind);
      node.label = ent->display_name;
      node.canonical_key = ent->canonical_key;
    }
    out.nodes.push_back(std::move(node));
  }
  std::sort(out.nodes.begin(), out.nodes.end(), [](const SubgraphNode& a, const SubgraphNode& b) {
    return std::tie(a.kind, a.canonical_key, a.id) < std::tie(b.kind, b.canonical_key, b.id);
  });

  std::set<Link> links;
  for (const auto& [node_id, d] : distance) {
    auto it = adjacency_.find(node_id);
    if (it == adjacency_.end()) continue;
    for (const auto& link : it->second) {
      if (distance.count(link.from_id) && distance.count(link.to_id)) links.insert(link);
    }
  }
  out.links.assign(links.begin(), links.end());
  return out;
}

std::vector<const DocumentRecord*> Corpus::ordered_records() const {
  std::vector<const DocumentRecord*> out;
  out.reserve(records_.size());
  for (const auto& [id, rec] : records_) out.push_back(&rec);
  std::sort(out.begin(), out.end(), [](const DocumentRecord* a, const DocumentRecord* b) {
    return std::tie(a->year, a->short_name, a->record_id) < std::tie(b->year, b->short_name, b->record_id);
  });
  return out;
}

// --- mutations ---------------------------------------------------------------

void Corpus::validate(const DocumentRecord& record) const {
  check_enums(record);
  if (record.doi && normalize_doi(*record.doi) != record.doi) {
    throw Error(ErrorCode::InvalidRecord, "record '" + record.short_name + "' has a malformed DOI '" + *record.doi + "'");
  }
  for (const auto& slot : kLinkSlots) {
    for (const auto& link : record.*(slot.member)) {
      if (link.from_id != record.record_id) {
        throw Error(ErrorCode::InvalidRecord, std::string(slot.name) + " entry does not originate at the record");
      }
      if (link.link_type != slot.type) {
        throw Error(ErrorCode::InvalidRecord,
                    std::string(slot.name) + " entry has link type " + std::string(to_string(link.link_type)));
      }
      const auto* target = find_entity(link.to_id);
      if (!target) {
        throw Error(ErrorCode::DanglingLink, "link to unknown entity '" + link.to_id + "'");
      }
      if (target->kind != slot.kind) {
        throw Error(ErrorCode::InvalidRecord, std::string(slot.name) + " entry points at a " +
                                                  std::string(to_string(target->kind)) + " entity");
      }
    }
  }
  std::vector<int> ordinals;
  for (const auto& link : record.author_links) {
    if (!link.ordinal) throw Error(ErrorCode::InvalidRecord, "author link without ordinal");
    ordinals.push_back(*link.ordinal);
  }
  std::sort(ordinals.begin(), ordinals.end());
  for (std::size_t i = 0; i < ordinals.size(); ++i) {
    if (ordinals[i] != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::InvalidRecord, "author ordinals must be distinct and numbered 1..n");
    }
  }
  if (record.curation_status == CurationStatus::Validated) {
    if (record.author_links.empty()) {
      throw Error(ErrorCode::InvalidRecord, "a validated record needs at least one author");
    }
    if (!record.usage || !record.usage->principal_product) {
      throw Error(ErrorCode::InvalidRecord, "a validated record needs a usage descriptor with a principal product");
    }
  }
}

std::string Corpus::next_record_id() {
  while (true) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "D%06llu", static_cast<unsigned long long>(next_sequence_++));
    if (!records_.count(buf)) return buf;
  }
}

std::string Corpus::derive_short_name(const DocumentRecord& record) const {
  std::string author;
  if (const auto* first = record.first_author()) {
    if (const auto* ent = find_entity(first->to_id)) {
      author = ent->canonical_key.substr(0, ent->canonical_key.find('_'));
    }
  }
  std::string word;
  for (const auto& token : text::split(text::normalize_title(record.title), ' ')) {
    if (!token.empty()) {
      word = text::fold_key(token);
      break;
    }
  }
  const std::string year = record.year ? std::to_string(*record.year) : "";
  std::string name = author.empty() ? word + year : author + year + word;
  return name.empty() ? "record" : name;
}

std::string Corpus::upsert_record(DocumentRecord record) {
  if (record.doi) {
    auto normalized = normalize_doi(*record.doi);
    if (!normalized) {
      throw Error(ErrorCode::InvalidRecord, "malformed DOI '" + *record.doi + "'");
    }
    record.doi = std::move(normalized);
  }

  auto same_content = [&](const DocumentRecord& existing) {
    DocumentRecord candidate = record;
    candidate.record_id = existing.record_id;
    candidate.short_name = existing.short_name;
    for_each_link_mut(candidate, [&](Link& l) { l.from_id = existing.record_id; });
    return candidate == existing;
  };

  if (record.record_id.empty()) {
    if (!record.short_name.empty()) {
      if (const auto* existing = find_by_short_name(record.short_name)) {
        if (same_content(*existing)) return existing->record_id;
        throw Error(ErrorCode::DuplicateShortName, "short name '" + record.short_name + "' is already in use");
      }
    } else {
      const std::string base = derive_short_name(record);
      for (int n = 0;; ++n) {
        std::string candidate = base;
        if (n > 0) {
          // ashby1999materials, ashby1999materialsb, ...c, then numeric suffixes
          candidate += n < 26 ? std::string(1, static_cast<char>('a' + n)) : "-" + std::to_string(n);
        }
        const auto* existing = find_by_short_name(candidate);
        if (!existing) {
          record.short_name = std::move(candidate);
          break;
        }
        if (same_content(*existing)) return existing->record_id;
      }
    }
    record.record_id = next_record_id();
  } else {
    if (record.short_name.empty()) {
      if (const auto* existing = find_record(record.record_id)) {
        record.short_name = existing->short_name;
      } else {
        record.short_name = derive_short_name(record);
      }
    }
    if (const auto* holder = find_by_short_name(record.short_name); holder && holder->record_id != record.record_id) {
      throw Error(ErrorCode::DuplicateShortName, "short name '" + record.short_name + "' is already in use");
    }
  }

  for_each_link_mut(record, [&](Link& l) {
    if (l.from_id.empty()) l.from_id = record.record_id;
  });
  validate(record);

  if (auto it = records_.find(record.record_id); it != records_.end()) {
    unindex_record(it->second);
    records_.erase(it);
  }
  index_record(record);
  std::string id = record.record_id;
  records_.emplace(id, std::move(record));
  return id;
}

std::string Corpus::upsert_entity(EntityRecord entity) {
  if (!enum_in_range(entity.kind)) throw Error(ErrorCode::InvalidEnumValue, "entity has an out-of-range kind");
  if (entity.canonical_key.empty()) entity.canonical_key = text::fold_key(entity.display_name);
  if (entity.canonical_key.empty()) throw Error(ErrorCode::InvalidRecord, "entity needs a display name or key");

  if (auto it = entity_keys_.find(std::pair{entity.kind, entity.canonical_key}); it != entity_keys_.end()) {
    auto& existing = entities_.at(it->second);
    for (auto& [k, v] : entity.attributes) existing.attributes.try_emplace(k, v);
    return existing.entity_id;
  }
  if (entity.entity_id.empty()) {
    entity.entity_id = std::string(entity_id_prefix(entity.kind)) + entity.canonical_key;
    for (int n = 2; entities_.count(entity.entity_id); ++n) {
      entity.entity_id = std::string(entity_id_prefix(entity.kind)) + entity.canonical_key + "-" + std::to_string(n);
    }
  } else if (entities_.count(entity.entity_id)) {
    throw Error(ErrorCode::InvalidRecord, "entity id '" + entity.entity_id + "' is bound to another key");
  }
  std::string id = entity.entity_id;
  entity_keys_.emplace(std::pair{entity.kind, entity.canonical_key}, id);
  entities_.emplace(id, std::move(entity));
  return id;
}

void Corpus::link_entities(std::string_view from_id, std::string_view to_id, LinkType type) {
  if (!find_entity(from_id)) throw Error(ErrorCode::DanglingLink, "unknown entity '" + std::string(from_id) + "'");
  if (!find_entity(to_id)) throw Error(ErrorCode::DanglingLink, "unknown entity '" + std::string(to_id) + "'");
  Link link{std::string(from_id), std::string(to_id), type, std::nullopt};
  if (std::find(entity_links_.begin(), entity_links_.end(), link) != entity_links_.end()) return;
  index_link(link);
  entity_links_.push_back(std::move(link));
}

void Corpus::merge_entities(std::string_view keep_id, std::string_view drop_id) {
  const auto* keep = find_entity(keep_id);
  const auto* drop = find_entity(drop_id);
  if (!keep || !drop) throw Error(ErrorCode::UnknownEntity, "merge needs two existing entities");
  if (keep->kind != drop->kind) throw Error(ErrorCode::InvalidArgument, "cannot merge entities of different kinds");
  if (keep_id == drop_id) return;
  const std::string keep_s(keep_id), drop_s(drop_id);

  std::vector<std::string> touched;
  for (const auto& link : links_of(drop_s)) {
    if (records_.count(link.from_id)) touched.push_back(link.from_id);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (const auto& record_id : touched) {
    DocumentRecord record = records_.at(record_id);
    for_each_link_mut(record, [&](Link& l) {
      if (l.to_id == drop_s) l.to_id = keep_s;
    });
    // The same author may now appear twice: keep the earliest position.
    std::sort(record.author_links.begin(), record.author_links.end(),
              [](const Link& a, const Link& b) { return a.ordinal < b.ordinal; });
    std::vector<Link> authors;
    for (const auto& l : record.author_links) {
      if (std::none_of(authors.begin(), authors.end(), [&](const Link& x) { return x.to_id == l.to_id; })) {
        authors.push_back(l);
      }
    }
    for (std::size_t i = 0; i < authors.size(); ++i) authors[i].ordinal = static_cast<int>(i) + 1;
    record.author_links = std::move(authors);
    for (auto* list : {&record.institution_links, &record.country_links, &record.product_links, &record.field_links}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    unindex_record(records_.at(record_id));
    index_record(record);
    records_[record_id] = std::move(record);
  }

  std::vector<Link> links;
  for (auto link : entity_links_) {
    unindex_link(link);
    if (link.from_id == drop_s) link.from_id = keep_s;
    if (link.to_id == drop_s) link.to_id = keep_s;
    if (link.from_id == link.to_id) continue;
    if (std::find(links.begin(), links.end(), link) == links.end()) links.push_back(link);
  }
  for (const auto& link : links) index_link(link);
  entity_links_ = std::move(links);

  auto& kept = entities_.at(keep_s);
  for (auto& [k, v] : entities_.at(drop_s).attributes) kept.attributes.try_emplace(k, v);
  const auto dropped = entities_.at(drop_s);
  entity_keys_.erase(std::pair{dropped.kind, dropped.canonical_key});
  entities_.erase(drop_s);
  adjacency_.erase(drop_s);
}

void Corpus::remove_entity(std::string_view entity_id) {
  const auto* entity = find_entity(entity_id);
  if (!entity) throw Error(ErrorCode::UnknownEntity, "unknown entity '" + std::string(entity_id) + "'");
  if (auto it = adjacency_.find(entity_id); it != adjacency_.end() && !it->second.empty()) {
    throw Error(ErrorCode::EntityInUse,
                "entity '" + std::string(entity_id) + "' has " + std::to_string(it->second.size()) + " links");
  }
  entity_keys_.erase(std::pair{entity->kind, entity->canonical_key});
  entities_.erase(std::string(entity_id));
}

void Corpus::set_status(std::string_view record_id, CurationStatus status) {
  const auto* current = find_record(record_id);
  if (!current) throw Error(ErrorCode::UnknownRecord, "unknown record '" + std::string(record_id) + "'");
  if (!enum_in_range(status)) throw Error(ErrorCode::InvalidEnumValue, "out-of-range curation status");
  if (!lifecycle_allows(current->curation_status, status)) {
    throw Error(ErrorCode::InvalidRecord, "status cannot move from " + std::string(to_string(current->curation_status)) +
                                              " to " + std::string(to_string(status)));
  }
  DocumentRecord updated = *current;
  updated.curation_status = status;
  validate(updated);
  records_.at(std::string(record_id)) = std::move(updated);
}

void Corpus::append_audit(AuditEntry entry) {
  if (!find_record(entry.record_id)) throw Error(ErrorCode::UnknownRecord, "unknown record '" + entry.record_id + "'");
  audit_.push_back(std::move(entry));
}

void Corpus::load_record_unchecked(DocumentRecord record) {
  if (auto it = records_.find(record.record_id); it != records_.end()) {
    unindex_record(it->second);
    records_.erase(it);
  }
  unsigned long long seq = 0;
  if (std::sscanf(record.record_id.c_str(), "D%llu", &seq) == 1 && seq >= next_sequence_) next_sequence_ = seq + 1;
  index_record(record);
  std::string id = record.record_id;
  records_.emplace(std::move(id), std::move(record));
}

void Corpus::load_entity_unchecked(EntityRecord entity) {
  if (auto it = entities_.find(entity.entity_id); it != entities_.end()) {
    entity_keys_.erase(std::pair{it->second.kind, it->second.canonical_key});
  }
  entity_keys_.insert_or_assign(std::pair{entity.kind, entity.canonical_key}, entity.entity_id);
  std::string id = entity.entity_id;
  entities_.insert_or_assign(std::move(id), std::move(entity));
}

void Corpus::load_entity_link_unchecked(Link link) {
  if (std::find(entity_links_.begin(), entity_links_.end(), link) != entity_links_.end()) return;
  index_link(link);
  entity_links_.push_back(std::move(link));
}

bool Corpus::operator==(const Corpus& other) const {
  return records_ == other.records_ && entities_ == other.entities_ && entity_links_ == other.entity_links_ &&
         audit_ == other.audit_ && meta_ == other.meta_;
}

void Corpus::index_link(const Link& link) {
  adjacency_[link.from_id].push_back(link);
  if (link.to_id != link.from_id) adjacency_[link.to_id].push_back(link);
}

void Corpus::unindex_link(const Link& link) {
  for (const auto* endpoint : {&link.from_id, &link.to_id}) {
    auto it = adjacency_.find(*endpoint);
    if (it == adjacency_.end()) continue;
    auto& list = it->second;
    if (auto pos = std::find(list.begin(), list.end(), link); pos != list.end()) list.erase(pos);
    if (list.empty()) adjacency_.erase(it);
  }
}

void Corpus::index_record(const DocumentRecord& record) {
  short_names_[record.short_name] = record.record_id;
  for_each_link(record, [&](const Link& l) { index_link(l); });
}

void Corpus::unindex_record(const DocumentRecord& record) {
  if (auto it = short_names_.find(record.short_name); it != short_names_.end() && it->second == record.record_id) {
    short_names_.erase(it);
  }
  for_each_link(record, [&](const Link& l) { unindex_link(l); });
}

// --- store -------------------------------------------------------------------

CorpusStore::CorpusStore(Corpus initial) : current_(std::make_shared<const Corpus>(std::move(initial))) {}

std::shared_ptr<const Corpus> CorpusStore::snapshot() const {
  std::shared_lock lock(snapshot_mutex_);
  return current_;
}

std::uint64_t CorpusStore::version() const {
  std::shared_lock lock(snapshot_mutex_);
  return version_;
}

std::pair<std::shared_ptr<const Corpus>, std::uint64_t> CorpusStore::versioned_snapshot() const {
  std::shared_lock lock(snapshot_mutex_);
  return {current_, version_};
}

void CorpusStore::publish(std::shared_ptr<const Corpus> next) {
  std::unique_lock lock(snapshot_mutex_);
  current_ = std::move(next);
  ++version_;
}

}  // namespace litmon
