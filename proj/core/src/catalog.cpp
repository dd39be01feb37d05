#include "qsplit/catalog.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace qsplit {

std::string to_string(DataType type) {
  return type == DataType::Int64 ? "int64" : "string";
}

std::string to_string(const Value& v) {
  if (const auto* i = std::get_if<int64_t>(&v)) return std::to_string(*i);
  return "'" + std::get<std::string>(v) + "'";
}

int RelationDef::attribute_index(const std::string& attr) const {
  for (size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attr) return static_cast<int>(i);
  }
  return -1;
}

const AttributeDef& RelationDef::attribute(const std::string& attr) const {
  int idx = attribute_index(attr);
  if (idx < 0) throw UnknownAttributeError(name + "." + attr);
  return attributes[idx];
}

uint64_t accounted_row_size(const Row& row) {
  uint64_t size = 16;  // row overhead
  for (const auto& v : row) {
    if (std::holds_alternative<int64_t>(v)) {
      size += 8;
    } else {
      size += std::get<std::string>(v).size() + 8;
    }
  }
  return size;
}

void StoredRelation::append_row(Row row) {
  byte_size_ += accounted_row_size(row);
  rows_.push_back(std::move(row));
}

void StoredRelation::finalize_base_storage() {
  if (!def_.primary_key) return;
  int pk = def_.attribute_index(*def_.primary_key);

  // Base storage is clustered on the primary key: a sequential scan then
  // emits PK order, which merge join treats as pre-sorted.
  std::stable_sort(rows_.begin(), rows_.end(),
                   [pk](const Row& a, const Row& b) { return a[pk] < b[pk]; });
  for (size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i][pk] == rows_[i - 1][pk]) {
      throw DuplicatePrimaryKeyError("duplicate primary key " + to_string(rows_[i][pk]) +
                                     " in relation " + def_.name);
    }
  }
  sorted_by_pk_ = true;
}

const ColumnIndex* StoredRelation::index_on(const std::string& attr) const {
  auto it = indexes_.find(attr);
  return it == indexes_.end() ? nullptr : &it->second;
}

void Catalog::define_schema(const std::vector<RelationDef>& defs) {
  for (const auto& def : defs) {
    if (relations_.count(def.name)) throw DuplicateRelationError(def.name);
    std::unordered_set<std::string> seen;
    for (const auto& attr : def.attributes) {
      if (!seen.insert(attr.name).second) {
        throw DuplicateRelationError("duplicate attribute " + attr.name + " in " + def.name);
      }
    }
    if (def.primary_key && def.attribute_index(*def.primary_key) < 0) {
      throw UnknownAttributeError(def.name + "." + *def.primary_key);
    }
    relations_.emplace(def.name, StoredRelation(def, RelationKind::Base));
  }
  // FK targets must resolve to an existing relation's primary key.
  for (const auto& def : defs) {
    for (const auto& fk : def.foreign_keys) {
      if (def.attribute_index(fk.local_attribute) < 0) {
        throw UnknownAttributeError(def.name + "." + fk.local_attribute);
      }
      auto it = relations_.find(fk.target_relation);
      if (it == relations_.end()) {
        throw DanglingForeignKeyError("foreign key " + def.name + "." + fk.local_attribute +
                                      " references unknown relation " + fk.target_relation);
      }
      const auto& target = it->second.def();
      if (!target.primary_key || *target.primary_key != fk.target_attribute) {
        throw DanglingForeignKeyError("foreign key " + def.name + "." + fk.local_attribute +
                                      " must reference the primary key of " + fk.target_relation);
      }
    }
  }
}

const StoredRelation& Catalog::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw NotFoundError(name);
  return it->second;
}

StoredRelation& Catalog::mutable_relation(const std::string& name) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw NotFoundError(name);
  return it->second;
}

std::vector<std::string> Catalog::relation_names() const {
  std::vector<std::string> names;
  names.reserve(relations_.size());
  for (const auto& [name, _] : relations_) names.push_back(name);
  return names;
}

size_t Catalog::load_rows(const std::string& relation, std::vector<Row> rows) {
  auto& rel = mutable_relation(relation);
  for (auto& row : rows) rel.append_row(std::move(row));
  rel.finalize_base_storage();

  // Indexes on the primary key and every foreign-key column.
  std::set<std::string> indexed;
  if (rel.def().primary_key) indexed.insert(*rel.def().primary_key);
  for (const auto& fk : rel.def().foreign_keys) indexed.insert(fk.local_attribute);
  for (const auto& attr : indexed) {
    int idx = rel.def().attribute_index(attr);
    ColumnIndex index;
    for (uint32_t r = 0; r < rel.rows().size(); ++r) {
      index[rel.rows()[r][idx]].push_back(r);
    }
    rel.indexes_[attr] = std::move(index);
  }
  return rel.row_count();
}

bool Catalog::is_entity(const std::string& relation) const {
  const auto& rel = this->relation(relation);
  if (!rel.def().primary_key) return false;
  for (const auto& [_, other] : relations_) {
    for (const auto& fk : other.def().foreign_keys) {
      if (fk.target_relation == relation && fk.target_attribute == *rel.def().primary_key) {
        return true;
      }
    }
  }
  return false;
}

bool Catalog::is_foreign_key(const std::string& relation, const std::string& attr,
                             const std::string& target, const std::string& target_attr) const {
  auto it = relations_.find(relation);
  if (it == relations_.end()) return false;
  for (const auto& fk : it->second.def().foreign_keys) {
    if (fk.local_attribute == attr && fk.target_relation == target &&
        fk.target_attribute == target_attr) {
      return true;
    }
  }
  return false;
}

bool Catalog::has_index(const std::string& relation, const std::string& attr) const {
  auto it = relations_.find(relation);
  return it != relations_.end() && it->second.index_on(attr) != nullptr;
}

const StoredRelation& Session::materialize(const std::string& name,
                                           const std::vector<AttrSlot>& schema,
                                           std::vector<Row> rows) {
  if (temps_.count(name)) throw DuplicateRelationError(name);

  RelationDef def;
  def.name = name;
  for (const auto& slot : schema) def.attributes.push_back({slot.attr.str(), slot.type, false});

  auto rel = std::make_unique<StoredRelation>(std::move(def), RelationKind::Materialized);
  for (auto& row : rows) {
    uint64_t size = accounted_row_size(row);
    if (rel->byte_size() + size > budget_.available()) {
      throw MemoryExceededError(name, rel->byte_size() + size, budget_.available());
    }
    rel->append_row(std::move(row));
  }
  budget_.charge(rel->byte_size());
  auto [it, _] = temps_.emplace(name, std::move(rel));
  return *it->second;
}

uint64_t Session::drop_materialized(const std::string& name) {
  auto it = temps_.find(name);
  if (it == temps_.end()) {
    if (catalog_.has_relation(name)) throw NotMaterializedError(name);
    throw NotFoundError(name);
  }
  uint64_t released = it->second->byte_size();
  budget_.release(released);
  temps_.erase(it);
  return released;
}

void Session::drop_all_materialized() {
  for (const auto& [name, rel] : temps_) budget_.release(rel->byte_size());
  temps_.clear();
}

const StoredRelation& Session::temp(const std::string& name) const {
  auto it = temps_.find(name);
  if (it == temps_.end()) throw NotFoundError(name);
  return *it->second;
}

std::vector<std::string> Session::temp_names() const {
  std::vector<std::string> names;
  names.reserve(temps_.size());
  for (const auto& [name, _] : temps_) names.push_back(name);
  return names;
}

}  // namespace qsplit
