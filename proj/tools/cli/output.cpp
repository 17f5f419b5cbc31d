#include "output.hpp"

#include <nlohmann/json.hpp>

namespace dioph::cli {

namespace {

void csv_cell(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
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

void csv_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i != 0) out << ',';
    csv_cell(out, row[i]);
  }
  out << '\n';
}

}  // namespace

void write(std::ostream& out, const Table& t, Format f) {
  if (f == Format::csv) {
    csv_row(out, t.columns);
    for (const auto& r : t.rows) csv_row(out, r);
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = i < r.size() ? r[i] : "";
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace dioph::cli
