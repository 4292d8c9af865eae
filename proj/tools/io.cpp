#include "io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>
#include <utility>

namespace teich2io {

IoError::IoError(const std::string& path, const std::string& what)
    : std::runtime_error(path + ": " + what), path_(path) {}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // snprintf honours LC_NUMERIC; fix the separator in case a caller changed it.
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  for (char* c = buf; *c; ++c) {
    if (*c == ',') *c = '.';
  }
  return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("CSV row width does not match the header");
  }
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_field(row[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_csv(const CsvTable& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

Json versioned(const Json& body) {
  Json doc;
  doc["schema"] = kSchema;
  for (const auto& [key, value] : body.items()) {
    if (key != "schema") doc[key] = value;
  }
  return doc;
}

std::string to_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

constexpr double kScale = 500.0;

Point to_view(Point p) { return {kScale + kScale * p.x, kScale - kScale * p.y}; }

std::string coord(Point p) {
  char buf[64];
  const Point v = to_view(p);
  std::snprintf(buf, sizeof buf, "%.6f %.6f", v.x, v.y);
  return buf;
}

// Segment command from p to q along the geodesic through them.
std::string geodesic_segment(Point p, Point q) {
  const double cross = p.x * q.y - p.y * q.x;
  const double scale = std::max({1e-300, std::hypot(p.x, p.y), std::hypot(q.x, q.y)});
  if (std::abs(cross) < 1e-12 * scale) return "L " + coord(q);
  // Centre c of the circle orthogonal to the unit circle: 2 <p, c> = 1 + |p|^2.
  const double rp = 0.5 * (1.0 + p.x * p.x + p.y * p.y);
  const double rq = 0.5 * (1.0 + q.x * q.x + q.y * q.y);
  const double cx = (rp * q.y - rq * p.y) / cross;
  const double cy = (p.x * rq - q.x * rp) / cross;
  const double radius = std::sqrt(std::max(0.0, cx * cx + cy * cy - 1.0)) * kScale;
  char buf[96];
  // Counterclockwise chords about the origin turn clockwise about the centre;
  // the y flip of the viewport reverses the sweep once more.
  std::snprintf(buf, sizeof buf, "A %.6f %.6f 0 0 %d ", radius, radius, cross > 0 ? 0 : 1);
  return buf + coord(q);
}

}  // namespace

std::string to_svg(const std::vector<Polygon>& cells) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "<circle cx=\"500\" cy=\"500\" r=\"500\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"1\"/>\n"
      << "<g fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"0.5\">\n";
  for (const auto& cell : cells) {
    out << "<path d=\"M " << coord(cell[0]);
    for (std::size_t k = 0; k < cell.size(); ++k) {
      out << ' ' << geodesic_segment(cell[k], cell[(k + 1) % cell.size()]);
    }
    out << " Z\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError(path, "write to stdout failed");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path, std::string("cannot open for writing: ") + std::strerror(errno));
  file << text;
  file.flush();
  if (!file) throw IoError(path, "write failed");
}

void emit_csv(const CsvTable& table, const std::string& path) {
  write_text(path, to_csv(table));
}

void emit_json(const Json& doc, const std::string& path) {
  write_text(path, to_json(versioned(doc)));
}

void emit_svg(const std::vector<Polygon>& cells, const std::string& path) {
  write_text(path, to_svg(cells));
}

}  // namespace teich2io
