#include "granulex/table.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace granulex {

InformationTable::InformationTable(std::vector<std::string> columns,
                                   std::vector<std::vector<std::string>> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  if (columns_.empty()) throw domain_error("table needs at least one column");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    for (std::size_t j = i + 1; j < columns_.size(); ++j) {
      if (columns_[i] == columns_[j]) {
        throw domain_error("duplicate column name: " + columns_[i]);
      }
    }
  }
  if (rows_.empty()) throw domain_error("table needs at least one row");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != columns_.size()) {
      throw domain_error("ragged row " + std::to_string(r + 1) + ": expected " +
                         std::to_string(columns_.size()) + " fields, got " +
                         std::to_string(rows_[r].size()));
    }
  }
}

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // current record has at least one field begun

  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = true;
  };
  const auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };

  std::size_t i = 0;
  const std::size_t size = text.size();
  while (i < size) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < size && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
        } else {
          in_quotes = false;
          ++i;
          if (i < size && text[i] != ',' && text[i] != '\n' &&
              !(text[i] == '\r' && i + 1 < size && text[i + 1] == '\n')) {
            throw domain_error("malformed CSV: data after closing quote");
          }
        }
      } else {
        field.push_back(c);
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw domain_error("malformed CSV: quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < size && text[i + 1] == '\n') {
          end_record();
          i += 2;
        } else {
          field.push_back(c);  // lone CR: keep as data
          ++i;
        }
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field.push_back(c);
        field_started = true;
        ++i;
        break;
    }
  }
  if (in_quotes) throw domain_error("malformed CSV: unterminated quoted field");
  // Final record without a trailing newline.
  if (field_started || !record.empty() || !field.empty()) end_record();
  return records;
}

}  // namespace

InformationTable InformationTable::from_csv(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::vector<std::vector<std::string>> records = parse_csv(buffer.str());
  if (records.empty()) throw domain_error("empty table: no header record");
  std::vector<std::string> columns = std::move(records.front());
  records.erase(records.begin());
  if (records.empty()) throw domain_error("empty table: no data rows");
  return InformationTable(std::move(columns), std::move(records));
}

InformationTable InformationTable::from_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open CSV file: " + path);
  return from_csv(in);
}

std::size_t InformationTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw domain_error("unknown column: " + name);
}

const std::string& InformationTable::cell(std::size_t row,
                                          std::size_t column) const {
  return rows_.at(row).at(column);
}

ApproximationSpace ingest_table(const InformationTable& table,
                                const IngestOptions& options) {
  std::vector<std::size_t> attribute_indices;
  attribute_indices.reserve(options.attributes.size());
  for (const std::string& name : options.attributes) {
    attribute_indices.push_back(table.column_index(name));
  }

  std::vector<std::string> labels;
  labels.reserve(table.row_count());
  if (options.id_column) {
    const std::size_t id_index = table.column_index(*options.id_column);
    for (std::size_t r = 0; r < table.row_count(); ++r) {
      labels.push_back(table.cell(r, id_index));
    }
  } else {
    for (std::size_t r = 0; r < table.row_count(); ++r) {
      labels.push_back(std::to_string(r + 1));
    }
  }
  Universe universe(std::move(labels));

  // Rows grouped by their tuple of selected attribute values; with no
  // attributes every row lands in the single empty-tuple group.
  std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    std::vector<std::string> key;
    key.reserve(attribute_indices.size());
    for (std::size_t a : attribute_indices) key.push_back(table.cell(r, a));
    groups[std::move(key)].push_back(r);
  }
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, rows] : groups) blocks.push_back(std::move(rows));
  Partition partition(table.row_count(), blocks);
  return ApproximationSpace(std::move(universe), std::move(partition));
}

}  // namespace granulex
