#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dgfrft/io.hpp"

namespace dgfrft::cli {

using Cell = std::variant<std::string, double, std::int64_t, std::uint64_t>;
using Json = nlohmann::ordered_json;

// A result table plus a metadata block. CSV puts the metadata in leading
// "# key: value" lines followed by a header row; JSON carries
// {"metadata": {...}, "rows": [{column: value, ...}, ...]}.
struct Table {
  Json metadata = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string out = "\"";
          for (char ch : v) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return out + "\"";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

inline std::string metadata_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void write_csv(std::ostream& out, const Table& t) {
  for (const auto& [key, value] : t.metadata.items()) out << "# " << key << ": " << metadata_text(value) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

inline void write_json(std::ostream& out, const Table& t) {
  Json doc;
  doc["metadata"] = t.metadata;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json rec = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { rec[t.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

/**
 * Writes through `<path>.partial` and renames on success, so `path` either
 * holds a complete file or is left absent. "-" writes to stdout.
 */
template <typename Writer>
void write_atomically(const std::string& path, Writer&& writer) {
  if (path == "-") {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing to stdout");
    return;
  }
  const std::filesystem::path target(path);
  const std::filesystem::path partial(path + ".partial");
  std::error_code ec;
  std::filesystem::remove(target, ec);
  try {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + partial.string() + " for writing");
    writer(out);
    out.close();
    if (!out) throw std::runtime_error("failed writing " + partial.string());
    std::filesystem::rename(partial, target);
  } catch (...) {
    std::filesystem::remove(partial, ec);
    throw;
  }
}

}  // namespace dgfrft::cli
