#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "qdot/cli.hpp"

namespace qdot::cli {

int OutputTable::error_cells() const {
  int n = 0;
  for (const auto& r : rows)
    for (const auto& c : r) n += c == "ERROR";
  return n;
}

int exit_code(const OutputTable& t) { return t.error_cells() > 0 ? 2 : 0; }

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  out += "\r\n";
}

}  // namespace

std::string to_csv(const OutputTable& t) {
  std::string out;
  csv_line(out, t.columns);
  for (const auto& r : t.rows) csv_line(out, r);
  return out;
}

OutputTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    pending = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      pending = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("CSV: unterminated quoted field");
  if (pending) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw std::invalid_argument("CSV: missing header");
  OutputTable t;
  t.columns = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != t.columns.size()) throw std::invalid_argument("CSV: ragged row");
    t.rows.push_back(std::move(records[i]));
  }
  return t;
}

std::string to_json(const OutputTable& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(1) + "\n";
}

OutputTable parse_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  OutputTable t;
  t.command = j.at("command").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  for (const auto& r : t.rows)
    if (r.size() != t.columns.size()) throw std::invalid_argument("JSON: ragged row");
  return t;
}

std::string render(const OutputTable& t, Format f) { return f == Format::csv ? to_csv(t) : to_json(t); }

}  // namespace qdot::cli
