#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "canvas/analysis.hpp"

namespace canvas {

enum class FigureKind { RatiosLegacy, HeightsVsWidths, RatiosMixed };

std::optional<FigureKind> parse_figure_kind(std::string_view name);

// Data series behind each plot; reference lines are included as two-point
// series after the data series.

/// Legacy width/height ratio per point for F, P, M, then the three targets.
std::vector<PlotSeries> ratios_legacy_plot();

/// Heights against widths for the new and legacy tables, then y = a x for
/// a in {phi/2, 1/sqrt2, 1/phi}.
std::vector<PlotSeries> heights_vs_widths_plot(const SizeTable& generated);

/// New/new and old/new ratios per shared point label, then the targets.
std::vector<PlotSeries> ratios_mixed_plot(const SizeTable& generated);

std::vector<PlotSeries> figure_data(FigureKind kind, const SizeTable& generated);

}  // namespace canvas
