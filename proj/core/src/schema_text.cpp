#include "qsplit/schema_text.hpp"

#include <fstream>
#include <sstream>

namespace qsplit {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream ss(line);
  std::string w;
  while (ss >> w) words.push_back(w);
  return words;
}

}  // namespace

std::vector<RelationDef> parse_schema_text(std::istream& in) {
  std::vector<RelationDef> defs;
  RelationDef* current = nullptr;
  std::string line;
  size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    const auto& keyword = words[0];
    if (keyword == "relation") {
      if (words.size() != 2) throw ParseError(line_no, "expected: relation <name>");
      defs.push_back(RelationDef{});
      defs.back().name = words[1];
      current = &defs.back();
    } else if (!current) {
      throw ParseError(line_no, "\"" + keyword + "\" before any relation declaration");
    } else if (keyword == "column") {
      if (words.size() != 3) throw ParseError(line_no, "expected: column <name> <int64|string>");
      DataType type;
      if (words[2] == "int64") {
        type = DataType::Int64;
      } else if (words[2] == "string") {
        type = DataType::String;
      } else {
        throw ParseError(line_no, "unknown type \"" + words[2] + "\"");
      }
      current->attributes.push_back({words[1], type, false});
    } else if (keyword == "primary_key") {
      if (words.size() != 2) throw ParseError(line_no, "expected: primary_key <column>");
      if (current->attribute_index(words[1]) < 0) {
        throw ParseError(line_no, "primary_key names unknown column \"" + words[1] + "\"");
      }
      current->primary_key = words[1];
    } else if (keyword == "foreign_key") {
      // foreign_key <column> -> <relation>.<column>
      if (words.size() != 4 || words[2] != "->") {
        throw ParseError(line_no, "expected: foreign_key <column> -> <relation>.<column>");
      }
      auto dot = words[3].find('.');
      if (dot == std::string::npos) {
        throw ParseError(line_no, "foreign key target must be <relation>.<column>");
      }
      if (current->attribute_index(words[1]) < 0) {
        throw ParseError(line_no, "foreign_key names unknown column \"" + words[1] + "\"");
      }
      current->foreign_keys.push_back(
          {words[1], words[3].substr(0, dot), words[3].substr(dot + 1)});
    } else {
      throw ParseError(line_no, "unknown keyword \"" + keyword + "\"");
    }
  }
  return defs;
}

std::vector<RelationDef> parse_schema_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_schema_text(in);
}

void write_schema_text(std::ostream& out, const std::vector<RelationDef>& defs) {
  for (const auto& def : defs) {
    out << "relation " << def.name << "\n";
    for (const auto& attr : def.attributes) {
      out << "  column " << attr.name << " " << to_string(attr.type) << "\n";
    }
    if (def.primary_key) out << "  primary_key " << *def.primary_key << "\n";
    for (const auto& fk : def.foreign_keys) {
      out << "  foreign_key " << fk.local_attribute << " -> " << fk.target_relation << "."
          << fk.target_attribute << "\n";
    }
    out << "\n";
  }
}

}  // namespace qsplit
