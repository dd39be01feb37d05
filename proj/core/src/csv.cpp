#include "qsplit/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace qsplit {

namespace {

// One CSV record; handles quoted fields and embedded newlines. Returns false
// at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;

  std::string field;
  bool in_quotes = false;
  while (true) {
    if (c == EOF) {
      fields.push_back(std::move(field));
      return true;
    }
    char ch = static_cast<char>(c);
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\r') {
      // swallow; newline handling below
    } else if (ch == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
    c = in.get();
  }
}

int64_t parse_int64(const std::string& text, size_t row, const std::string& column) {
  int64_t out = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw TypeMismatchError(row, column, "cannot parse \"" + text + "\" as int64");
  }
  return out;
}

}  // namespace

std::vector<Row> read_csv(std::istream& in, const RelationDef& def) {
  std::vector<std::string> fields;
  if (!read_record(in, fields)) {
    throw MissingColumnError("empty file, expected a header row for relation " + def.name);
  }

  // Map header position -> schema column, order-insensitively.
  std::vector<int> column_of_field(fields.size(), -1);
  std::vector<bool> seen(def.attributes.size(), false);
  for (size_t f = 0; f < fields.size(); ++f) {
    int idx = def.attribute_index(fields[f]);
    if (idx < 0) {
      throw MissingColumnError("header column \"" + fields[f] + "\" is not part of relation " +
                               def.name);
    }
    if (seen[idx]) throw MissingColumnError("header repeats column \"" + fields[f] + "\"");
    seen[idx] = true;
    column_of_field[f] = idx;
  }
  for (size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw MissingColumnError("relation " + def.name + " column \"" + def.attributes[i].name +
                               "\" missing from header");
    }
  }

  std::vector<Row> rows;
  size_t row_number = 0;
  while (read_record(in, fields)) {
    ++row_number;
    if (fields.size() == 1 && fields[0].empty()) continue;  // trailing blank line
    if (fields.size() != def.attributes.size()) {
      throw MissingColumnError("row " + std::to_string(row_number) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(def.attributes.size()));
    }
    Row row(def.attributes.size());
    for (size_t f = 0; f < fields.size(); ++f) {
      const auto& attr = def.attributes[column_of_field[f]];
      if (attr.type == DataType::Int64) {
        row[column_of_field[f]] = parse_int64(fields[f], row_number, attr.name);
      } else {
        row[column_of_field[f]] = std::move(fields[f]);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> read_csv_file(const std::string& path, const RelationDef& def) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_csv(in, def);
}

namespace {

void write_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_csv(std::ostream& out, const RelationDef& def, const std::vector<Row>& rows) {
  for (size_t i = 0; i < def.attributes.size(); ++i) {
    if (i) out << ',';
    write_field(out, def.attributes[i].name);
  }
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* v = std::get_if<int64_t>(&row[i])) {
        out << *v;
      } else {
        write_field(out, std::get<std::string>(row[i]));
      }
    }
    out << '\n';
  }
}

size_t Catalog::load_csv(const std::string& relation, const std::string& path) {
  const auto& def = this->relation(relation).def();
  return load_rows(relation, read_csv_file(path, def));
}

}  // namespace qsplit
