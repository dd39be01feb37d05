#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace qsplit {

enum class DataType : uint8_t { Int64, String };

std::string to_string(DataType type);

// A cell value. No NULLs: every cell holds exactly one typed value.
using Value = std::variant<int64_t, std::string>;
using Row = std::vector<Value>;

inline DataType type_of(const Value& v) {
  return std::holds_alternative<int64_t>(v) ? DataType::Int64 : DataType::String;
}

std::string to_string(const Value& v);

struct ValueHash {
  size_t operator()(const Value& v) const {
    if (const auto* i = std::get_if<int64_t>(&v)) {
      return std::hash<int64_t>{}(*i);
    }
    return std::hash<std::string>{}(std::get<std::string>(v));
  }
};

// Globally unique attribute identity. `instance` is the FROM-clause instance
// (alias) for base relations; materialized results keep the origin-qualified
// identity of every column they carry, so an attribute keeps one name for the
// whole life of a query no matter which relation currently holds it.
struct QualifiedAttr {
  std::string instance;
  std::string attribute;

  std::string str() const { return instance + "." + attribute; }
  bool operator==(const QualifiedAttr&) const = default;
  auto operator<=>(const QualifiedAttr&) const = default;
};

struct QualifiedAttrHash {
  size_t operator()(const QualifiedAttr& a) const {
    return std::hash<std::string>{}(a.instance) * 1000003u ^ std::hash<std::string>{}(a.attribute);
  }
};

}  // namespace qsplit
