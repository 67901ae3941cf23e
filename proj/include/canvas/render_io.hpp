#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canvas/analysis.hpp"
#include "canvas/metrics.hpp"
#include "canvas/series.hpp"

namespace canvas {

/// NearestMm rounds to 0.1 cm, halves away from zero. CeilMm is the literal
/// "rounded up" reading; the published rounded table follows NearestMm.
enum class RoundingPolicy { NearestMm, CeilMm, None };

double round_dimension(double x, RoundingPolicy policy);

enum class TableFormat { Csv, Json, Markdown, Text };

std::optional<TableFormat> parse_table_format(std::string_view name);
std::optional<RoundingPolicy> parse_rounding(std::string_view name);

/// Thrown by import_table; line() is 1-based (0 when not line-oriented).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Renders a number the way exports do: one decimal under NearestMm/CeilMm,
/// 12 significant digits otherwise.
std::string format_number(double x, RoundingPolicy policy);

/// Columns No, Point, Width, F, P, M, then C_F..C_M and S_F..S_M when metrics
/// are given (one per row). Output is deterministic.
void export_table(std::ostream& out, const SizeTable& table,
                  std::span<const MetricsRow> metrics, TableFormat format,
                  RoundingPolicy policy);

std::string export_table(const SizeTable& table, std::span<const MetricsRow> metrics,
                         TableFormat format, RoundingPolicy policy);

/// CSV or JSON only. The result has provenance Imported and keeps the
/// document's declared provenance (JSON) for re-export.
SizeTable import_table(std::string_view bytes, TableFormat format);

/// Gnuplot-style blocks: "# label", then "x y" lines; blocks separated by a
/// blank line.
void emit_plot_data(std::ostream& out, std::span<const PlotSeries> series);

}  // namespace canvas
