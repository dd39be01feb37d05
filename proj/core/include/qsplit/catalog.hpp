#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsplit/errors.hpp"
#include "qsplit/types.hpp"

namespace qsplit {

struct AttributeDef {
  std::string name;
  DataType type = DataType::Int64;
  bool nullable = false;  // always false in this version
};

struct ForeignKeyDef {
  std::string local_attribute;
  std::string target_relation;
  std::string target_attribute;
};

struct RelationDef {
  std::string name;
  std::vector<AttributeDef> attributes;
  std::optional<std::string> primary_key;
  std::vector<ForeignKeyDef> foreign_keys;

  int attribute_index(const std::string& attr) const;  // -1 when absent
  const AttributeDef& attribute(const std::string& attr) const;
};

enum class RelationKind : uint8_t { Base, Materialized };

// Accounted size of one row: 8 bytes per int64, (length + 8) bytes per
// string, plus 16 bytes of row overhead.
uint64_t accounted_row_size(const Row& row);

// Equality index over one column: value -> row ids. Built for primary-key and
// foreign-key columns of base relations.
using ColumnIndex = std::unordered_map<Value, std::vector<uint32_t>, ValueHash>;

class StoredRelation {
 public:
  StoredRelation(RelationDef def, RelationKind kind) : def_(std::move(def)), kind_(kind) {}

  const RelationDef& def() const { return def_; }
  RelationKind kind() const { return kind_; }
  const std::vector<Row>& rows() const { return rows_; }
  size_t row_count() const { return rows_.size(); }
  uint64_t byte_size() const { return byte_size_; }

  // True when rows are physically ordered by the primary key (base relations
  // after load; stands in for index order).
  bool sorted_by_pk() const { return sorted_by_pk_; }

  void append_row(Row row);
  void finalize_base_storage();  // PK uniqueness check, PK-order sort, index build
  const ColumnIndex* index_on(const std::string& attr) const;

 private:
  RelationDef def_;
  RelationKind kind_;
  std::vector<Row> rows_;
  uint64_t byte_size_ = 0;
  bool sorted_by_pk_ = false;
  std::map<std::string, ColumnIndex> indexes_;

  friend class Catalog;
};

struct MemoryBudget {
  uint64_t limit_bytes = 512ull * 1024 * 1024;
  uint64_t used_bytes = 0;
  uint64_t peak_bytes = 0;

  uint64_t available() const { return limit_bytes - used_bytes; }
  void charge(uint64_t n) {
    used_bytes += n;
    if (used_bytes > peak_bytes) peak_bytes = used_bytes;
  }
  void release(uint64_t n) { used_bytes -= n; }
};

// Immutable after load: base relations, schemas, and foreign-key metadata.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(const std::vector<RelationDef>& defs) { define_schema(defs); }

  void define_schema(const std::vector<RelationDef>& defs);

  bool has_relation(const std::string& name) const { return relations_.count(name) > 0; }
  const StoredRelation& relation(const std::string& name) const;
  StoredRelation& mutable_relation(const std::string& name);
  std::vector<std::string> relation_names() const;

  // Loads an RFC-4180-style CSV with a header row; returns rows loaded.
  size_t load_csv(const std::string& relation, const std::string& path);
  size_t load_rows(const std::string& relation, std::vector<Row> rows);

  // Entity relation: its primary key is referenced by some foreign key.
  bool is_entity(const std::string& relation) const;
  // True iff `attr` of `relation` is a declared FK pointing at the primary
  // key of `target` attribute `target_attr`.
  bool is_foreign_key(const std::string& relation, const std::string& attr,
                      const std::string& target, const std::string& target_attr) const;
  bool has_index(const std::string& relation, const std::string& attr) const;

 private:
  std::map<std::string, StoredRelation> relations_;
};

struct AttrSlot {
  QualifiedAttr attr;
  DataType type = DataType::Int64;
};

// One query session: owns the materialized temp tables and the memory
// budget. Sessions never share temps; the catalog itself is shared read-only.
class Session {
 public:
  Session(const Catalog& catalog, MemoryBudget budget) : catalog_(catalog), budget_(budget) {}

  const Catalog& catalog() const { return catalog_; }
  MemoryBudget& budget() { return budget_; }
  const MemoryBudget& budget() const { return budget_; }

  // Drains `rows` into a new materialized relation. Throws MemoryExceededError
  // before the budget would be exceeded; the budget is only charged when the
  // whole stream fits.
  const StoredRelation& materialize(const std::string& name, const std::vector<AttrSlot>& schema,
                                    std::vector<Row> rows);
  uint64_t drop_materialized(const std::string& name);
  void drop_all_materialized();

  bool has_temp(const std::string& name) const { return temps_.count(name) > 0; }
  const StoredRelation& temp(const std::string& name) const;
  std::vector<std::string> temp_names() const;

  std::string next_temp_name() { return "t" + std::to_string(++temp_counter_); }

 private:
  const Catalog& catalog_;
  MemoryBudget budget_;
  std::map<std::string, std::unique_ptr<StoredRelation>> temps_;
  uint64_t temp_counter_ = 0;
};

}  // namespace qsplit
