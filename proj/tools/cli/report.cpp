#include "report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace gorwb::cli {

bool Report::allPassed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

namespace {

std::string csvCell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csvLine(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csvCell(cells[i]);
  out << "\n";
}

void renderText(const Report& r, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
  for (const auto& [k, v] : r.fields) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  for (const auto& t : r.tables) {
    out << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t j = 0; j < t.columns.size(); ++j) w[j] = t.columns[j].size();
    for (const auto& row : t.rows)
      for (std::size_t j = 0; j < row.size() && j < w.size(); ++j) w[j] = std::max(w[j], row[j].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s = " ";
      for (std::size_t j = 0; j < cells.size(); ++j) s += " " + cells[j] + std::string(w[j] - cells[j].size() + 1, ' ');
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  if (!r.checks.empty()) out << "\n";
  for (const auto& c : r.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.statement << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

void renderCsv(const Report& r, std::ostream& out) {
  csvLine(out, {"section", "key", "value"});
  for (const auto& [k, v] : r.fields) csvLine(out, {"field", k, v});
  for (const auto& c : r.checks) csvLine(out, {"check", c.statement, c.passed ? "pass" : "fail", c.detail});
  for (const auto& n : r.notes) csvLine(out, {"note", "", n});
  for (const auto& t : r.tables) {
    std::vector<std::string> head{"table"};
    head.insert(head.end(), t.columns.begin(), t.columns.end());
    out << "\n";
    csvLine(out, head);
    for (const auto& row : t.rows) {
      std::vector<std::string> cells{t.name};
      cells.insert(cells.end(), row.begin(), row.end());
      csvLine(out, cells);
    }
  }
}

void renderJson(const Report& r, std::ostream& out) {
  using json = nlohmann::ordered_json;
  json j;
  j["command"] = r.command;
  json fields = json::object();
  for (const auto& [k, v] : r.fields) fields[k] = v;
  j["fields"] = fields;
  json tables = json::array();
  for (const auto& t : r.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json o = json::object();
      for (std::size_t c = 0; c < t.columns.size() && c < row.size(); ++c) o[t.columns[c]] = row[c];
      rows.push_back(o);
    }
    tables.push_back({{"name", t.name}, {"rows", rows}});
  }
  j["tables"] = tables;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  j["passed"] = r.allPassed();
  out << j.dump(2) << "\n";
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Text:
      renderText(r, out);
      break;
    case Format::Csv:
      renderCsv(r, out);
      break;
    case Format::Json:
      renderJson(r, out);
      break;
  }
}

}  // namespace gorwb::cli
