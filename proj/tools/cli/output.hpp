#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dioph::cli {

enum class Format { csv, json };

/// Rows of already formatted cells; the column list is fixed per subcommand.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// CSV always starts with the header row. JSON is an array of objects keyed
/// by column name with string values, one object per CSV record.
void write(std::ostream& out, const Table& t, Format f);

}  // namespace dioph::cli
