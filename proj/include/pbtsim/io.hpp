#pragma once

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pbtsim {

/// Filesystem-level failures, kept distinct from computational errors
/// so callers can map them to their own exit codes.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tabular output cell: numbers are written with 17 significant digits
/// (lossless double round-trip), strings pass through.
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class TableFormat { csv, json };

TableFormat parse_format(const std::string& name);

/// Shortest representation that round-trips a double (printf %.17g).
std::string format_double(double v);

/// RFC-4180 CSV: header row, comma separated, quotes doubled and fields
/// quoted when they contain a comma, quote or newline.
void write_csv(std::ostream& os, const Table& table);

/// JSON mirror of the CSV payload: {"meta": ..., "records": [...]} with
/// one object per row.
nlohmann::json table_to_json(const Table& table, nlohmann::json meta);

/// Serialize to the requested format; throws io_error when the file
/// cannot be written.
void write_table(const std::filesystem::path& path, const Table& table,
                 const nlohmann::json& meta, TableFormat format);

}  // namespace pbtsim
