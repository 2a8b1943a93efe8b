#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "granulex/space.hpp"

namespace granulex {

/// Rectangular table of string-valued cells under a header row of distinct
/// column names; at least one data row.
class InformationTable {
 public:
  InformationTable(std::vector<std::string> columns,
                   std::vector<std::vector<std::string>> rows);

  /// RFC 4180 CSV: first record is the header, fields are comma-separated,
  /// quoted fields may contain commas, doubled quotes, and newlines. Accepts
  /// LF or CRLF record separators.
  static InformationTable from_csv(std::istream& in);
  static InformationTable from_csv_file(const std::string& path);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t column_index(const std::string& name) const;
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  const std::string& cell(std::size_t row, std::size_t column) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

struct IngestOptions {
  /// Columns whose value tuples define indiscernibility. Empty list: every
  /// pair of rows agrees vacuously, giving the one-block partition.
  std::vector<std::string> attributes;
  /// Column providing universe labels; defaults to 1-based row numbers.
  std::optional<std::string> id_column;
};

/// Universe = row ids in row order; blocks = maximal groups of rows that
/// agree on every selected attribute.
ApproximationSpace ingest_table(const InformationTable& table,
                                const IngestOptions& options);

}  // namespace granulex
