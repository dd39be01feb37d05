#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsplit/catalog.hpp"

namespace qsplit {

// Parses the textual schema format (see docs/schema_format.md). Errors carry
// the offending line number.
std::vector<RelationDef> parse_schema_text(std::istream& in);
std::vector<RelationDef> parse_schema_file(const std::string& path);

void write_schema_text(std::ostream& out, const std::vector<RelationDef>& defs);

}  // namespace qsplit
