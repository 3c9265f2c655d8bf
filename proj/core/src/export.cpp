#include "sgcount/export.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sgcount/errors.hpp"

namespace sgcount {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw InternalError("failed to format coordinate");
  return {buf, ptr};
}

nlohmann::ordered_json header_json(const GridSpec& spec, const BigInt& cardinality) {
  nlohmann::ordered_json doc;
  doc["d"] = spec.d;
  doc["mu"] = spec.mu;
  doc["family"] = family_name(spec.family);
  doc["growth"] = spec.growth.name();
  doc["nested"] = spec.nested_mode;
  doc["cardinality"] = to_decimal(cardinality);
  return doc;
}

void write_csv(const Grid& grid, std::ostream& out) {
  const std::size_t d = grid.spec().d;
  for (std::size_t k = 0; k < d; ++k) out << (k ? ",x" : "x") << k + 1;
  out << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto coords = grid.point_coords(i);
    for (std::size_t k = 0; k < d; ++k) out << (k ? "," : "") << format_double(coords[k]);
    out << '\n';
  }
}

void write_json(const Grid& grid, std::ostream& out) {
  auto doc = header_json(grid.spec(), grid.cardinality());
  auto points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) points.push_back(grid.point_coords(i));
  doc["points"] = std::move(points);
  out << doc.dump() << '\n';
}

void write_svg(const Grid& grid, std::ostream& out) {
  if (grid.spec().d != 2) {
    throw UnsupportedError("svg export needs a two-dimensional grid, got d = " +
                           std::to_string(grid.spec().d));
  }
  constexpr double kSize = 600.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" width=\"600\" height=\"600\">\n";
  out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto c = grid.point_coords(i);
    const double cx = (c[0] + 1.0) / 2.0 * kSize;
    const double cy = (1.0 - c[1]) / 2.0 * kSize;
    out << "<circle cx=\"" << format_double(cx) << "\" cy=\"" << format_double(cy)
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace

ExportFormat parse_export_format(std::string_view text) {
  if (text == "csv") return ExportFormat::Csv;
  if (text == "json") return ExportFormat::Json;
  if (text == "svg") return ExportFormat::Svg;
  throw ContractError("unknown grid format '" + std::string(text) + "' (csv, json, svg)");
}

void export_grid(const Grid& grid, ExportFormat format, std::ostream& out) {
  switch (format) {
    case ExportFormat::Csv: return write_csv(grid, out);
    case ExportFormat::Json: return write_json(grid, out);
    case ExportFormat::Svg: return write_svg(grid, out);
  }
}

std::string export_grid(const Grid& grid, ExportFormat format) {
  std::ostringstream out;
  export_grid(grid, format, out);
  return out.str();
}

std::string grid_summary_json(const GridSpec& spec, const BigInt& cardinality) {
  return header_json(spec, cardinality).dump();
}

}  // namespace sgcount
