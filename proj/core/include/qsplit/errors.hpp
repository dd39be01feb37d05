#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsplit {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateRelationError : EngineError {
  explicit DuplicateRelationError(const std::string& name)
      : EngineError("duplicate relation: " + name) {}
};

struct DanglingForeignKeyError : EngineError {
  using EngineError::EngineError;
};

struct TypeMismatchError : EngineError {
  size_t row = 0;
  std::string column;
  TypeMismatchError(size_t row_, std::string column_, const std::string& detail)
      : EngineError("type mismatch at row " + std::to_string(row_) + ", column " + column_ + ": " +
                    detail),
        row(row_),
        column(std::move(column_)) {}
  explicit TypeMismatchError(const std::string& detail) : EngineError(detail) {}
};

struct DuplicatePrimaryKeyError : EngineError {
  using EngineError::EngineError;
};

struct MissingColumnError : EngineError {
  using EngineError::EngineError;
};

// The out-of-memory condition for temp-table materialization. Callers treat
// this as a per-query failure, never as a process-level fault.
struct MemoryExceededError : EngineError {
  std::string relation;
  uint64_t needed_bytes = 0;
  uint64_t available_bytes = 0;
  MemoryExceededError(std::string relation_, uint64_t needed, uint64_t available)
      : EngineError("memory budget exceeded materializing " + relation_ + ": needs " +
                    std::to_string(needed) + " bytes, " + std::to_string(available) + " available"),
        relation(std::move(relation_)),
        needed_bytes(needed),
        available_bytes(available) {}
};

struct NotFoundError : EngineError {
  explicit NotFoundError(const std::string& name) : EngineError("not found: " + name) {}
};

struct NotMaterializedError : EngineError {
  explicit NotMaterializedError(const std::string& name)
      : EngineError("not a materialized relation: " + name) {}
};

struct SyntaxError : EngineError {
  size_t position = 0;
  SyntaxError(size_t position_, const std::string& detail)
      : EngineError("syntax error at position " + std::to_string(position_) + ": " + detail),
        position(position_) {}
};

struct UnknownRelationError : EngineError {
  explicit UnknownRelationError(const std::string& name)
      : EngineError("unknown relation: " + name) {}
};

struct UnknownAttributeError : EngineError {
  explicit UnknownAttributeError(const std::string& name)
      : EngineError("unknown attribute: " + name) {}
};

struct UnsupportedFeatureError : EngineError {
  explicit UnsupportedFeatureError(const std::string& feature)
      : EngineError("unsupported feature: " + feature +
                    " (non-SPJ constructs are out of scope in this version)") {}
};

struct NegativeKeyError : EngineError {
  explicit NegativeKeyError(int64_t key)
      : EngineError("directmap key must be non-negative, got " + std::to_string(key)) {}
};

struct KeyOverflowError : EngineError {
  KeyOverflowError(int64_t key, size_t max_rows)
      : EngineError("directmap key " + std::to_string(key) + " exceeds configured map limit of " +
                    std::to_string(max_rows) + " rows") {}
};

struct SingularSystemError : EngineError {
  using EngineError::EngineError;
};

struct ParseError : EngineError {
  size_t line = 0;
  ParseError(size_t line_, const std::string& detail)
      : EngineError("line " + std::to_string(line_) + ": " + detail), line(line_) {}
};

struct IoError : EngineError {
  using EngineError::EngineError;
};

}  // namespace qsplit
