#ifndef FRIS_HARNESS_CSV_HPP
#define FRIS_HARNESS_CSV_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace fris::harness {

using Cell = std::variant<std::string, std::int64_t, double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Reals as %.17e, NaN as "nan", infinities as "inf" / "-inf".
std::string format_real(double x);
std::string format_cell(const Cell& c);

/// Comma-separated with a header row; fields containing separators are quoted.
void write_csv(std::ostream& os, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

std::string code_version();

/// Sidecar manifest path for a CSV output: "<path>.manifest.json".
std::string manifest_path(const std::string& csv_path);
void write_manifest(const std::string& csv_path, const nlohmann::json& manifest);

}  // namespace fris::harness

#endif  // FRIS_HARNESS_CSV_HPP
