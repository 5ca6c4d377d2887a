#include "fris/harness/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fris/errors.hpp"

#ifndef FRIS_VERSION
#define FRIS_VERSION "unknown"
#endif
#ifndef FRIS_REVISION
#define FRIS_REVISION "unknown"
#endif

namespace fris::harness {
namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return quote(*s);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return format_real(std::get<double>(c));
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << quote(table.header[i]);
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw NumericError("write_csv: row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  write_csv(out, table);
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

std::string code_version() { return std::string(FRIS_VERSION) + "+" + FRIS_REVISION; }

std::string manifest_path(const std::string& csv_path) { return csv_path + ".manifest.json"; }

void write_manifest(const std::string& csv_path, const nlohmann::json& manifest) {
  const auto path = manifest_path(csv_path);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open manifest file '" + path + "'");
  out << manifest.dump(2) << '\n';
}

}  // namespace fris::harness
