#pragma once

// Serialization for the command-line front end: CSV tables, versioned JSON
// documents and SVG renderings of disk tilings.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace teich2io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "teich2/v1";

// Write failures; the message always names the path.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// 17 significant digits, '.' separator regardless of locale.
std::string format_double(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string to_csv(const CsvTable& table);

// A document with "schema" as its first key, followed by the entries of body.
Json versioned(const Json& body);

std::string to_json(const Json& doc);

struct Point {
  double x;
  double y;
};

using Polygon = std::array<Point, 8>;

// Unit disk on a 1000x1000 viewport, one <path> per polygon with geodesic
// sides drawn as circular arcs.
std::string to_svg(const std::vector<Polygon>& cells);

// "-" writes to stdout.
void write_text(const std::string& path, const std::string& text);

void emit_csv(const CsvTable& table, const std::string& path);
void emit_json(const Json& doc, const std::string& path);
void emit_svg(const std::vector<Polygon>& cells, const std::string& path);

}  // namespace teich2io
