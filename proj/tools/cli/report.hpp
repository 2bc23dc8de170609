#pragma once

// Command output: key/value fields, tables and property checks, rendered as
// text, csv or json. Rendering depends only on the report contents.

#include <ostream>
#include <string>
#include <vector>

namespace gorwb::cli {

enum class Format { Text, Csv, Json };

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct PropertyCheck {
  std::string statement;  // descriptive name of the asserted property
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;
  std::vector<PropertyCheck> checks;
  std::vector<std::string> notes;

  void field(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  Table& table(const std::string& name, std::vector<std::string> columns) {
    tables.push_back({name, std::move(columns), {}});
    return tables.back();
  }
  void check(const std::string& statement, bool passed, const std::string& detail = "") {
    checks.push_back({statement, passed, detail});
  }
  bool allPassed() const;
};

void render(const Report& r, Format f, std::ostream& out);

}  // namespace gorwb::cli
