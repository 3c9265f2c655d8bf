#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sgcount/bigint.hpp"
#include "sgcount/grid.hpp"

namespace sgcount {

enum class ExportFormat { Csv, Json, Svg };

/// "csv", "json" or "svg"; ContractError otherwise.
ExportFormat parse_export_format(std::string_view text);

/// Writes the grid. CSV: header x1,...,xd then one row per point with
/// 17-significant-digit coordinates. JSON: d, mu, family, growth, nested,
/// cardinality (decimal string) and points. SVG: 600x600 scatter of a
/// two-dimensional grid; UnsupportedError for any other d.
void export_grid(const Grid& grid, ExportFormat format, std::ostream& out);
[[nodiscard]] std::string export_grid(const Grid& grid, ExportFormat format);

/// The JSON grid document without the "points" member.
[[nodiscard]] std::string grid_summary_json(const GridSpec& spec, const BigInt& cardinality);

}  // namespace sgcount
