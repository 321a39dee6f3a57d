#include "pbtsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace pbtsim {

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string cell_text(const Cell& cell) {
  if (const double* num = std::get_if<double>(&cell)) return format_double(*num);
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  os << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("write_csv: row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    os << "\n";
  }
}

nlohmann::json table_to_json(const Table& table, nlohmann::json meta) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table_to_json: row width does not match header");
    nlohmann::json record;
    for (std::size_t i = 0; i < row.size(); ++i) {
      // Doubles stay native JSON numbers; the serializer round-trips
      // them exactly, so the payload matches the CSV at full precision.
      if (const double* num = std::get_if<double>(&row[i]))
        record[table.columns[i]] = *num;
      else
        record[table.columns[i]] = std::get<std::string>(row[i]);
    }
    records.push_back(std::move(record));
  }
  return nlohmann::json{{"meta", std::move(meta)}, {"records", std::move(records)}};
}

void write_table(const std::filesystem::path& path, const Table& table,
                 const nlohmann::json& meta, TableFormat format) {
  std::ofstream os(path);
  if (!os) throw io_error("cannot open output file: " + path.string());
  if (format == TableFormat::csv)
    write_csv(os, table);
  else
    os << table_to_json(table, meta).dump(2) << "\n";
  os.flush();
  if (!os) throw io_error("failed while writing: " + path.string());
}

}  // namespace pbtsim
