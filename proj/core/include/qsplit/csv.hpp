#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsplit/catalog.hpp"

namespace qsplit {

// RFC-4180-style CSV: comma delimiter, optional double-quoted fields with ""
// escapes, first record is the header. Header names must match the schema
// order-insensitively.
std::vector<Row> read_csv(std::istream& in, const RelationDef& def);
std::vector<Row> read_csv_file(const std::string& path, const RelationDef& def);

void write_csv(std::ostream& out, const RelationDef& def, const std::vector<Row>& rows);

}  // namespace qsplit
