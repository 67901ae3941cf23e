#include "canvas/figures.hpp"

#include <algorithm>
#include <string>

#include "canvas/standards.hpp"

namespace canvas {

namespace {

PlotSeries heights_series(const SizeTable& table, Format f, const std::string& label) {
  PlotSeries s{label, {}};
  for (const auto& r : table.rows()) s.points.push_back({r.width_cm, r.height(f)});
  return s;
}

}  // namespace

std::optional<FigureKind> parse_figure_kind(std::string_view name) {
  if (name == "ratios-legacy") return FigureKind::RatiosLegacy;
  if (name == "heights-vs-widths") return FigureKind::HeightsVsWidths;
  if (name == "ratios-mixed") return FigureKind::RatiosMixed;
  return std::nullopt;
}

std::vector<PlotSeries> ratios_legacy_plot() {
  std::vector<PlotSeries> data;
  std::vector<PlotSeries> refs;
  for (Format f : kFormats) {
    const auto report = ratio_report(french_table(), f, legacy_close_tolerance(f));
    auto series = deviation_series(report, "legacy " + std::string(format_letter(f)));
    data.push_back(std::move(series.ratios));
    refs.push_back(std::move(series.reference));
  }
  data.insert(data.end(), refs.begin(), refs.end());
  return data;
}

std::vector<PlotSeries> heights_vs_widths_plot(const SizeTable& generated) {
  std::vector<PlotSeries> out;
  double max_width = 0.0;
  for (const SizeTable* t : {&generated, &french_table()}) {
    const std::string prefix = t == &generated ? "new " : "legacy ";
    for (Format f : kFormats) {
      out.push_back(heights_series(*t, f, prefix + std::string(format_letter(f))));
    }
    for (const auto& r : t->rows()) max_width = std::max(max_width, r.width_cm);
  }
  for (Format f : kFormats) {
    const double slope = 1.0 / target_for(f);
    out.push_back({"y = a x, " + std::string(format_letter(f)),
                   {{0.0, 0.0}, {max_width, slope * max_width}}});
  }
  return out;
}

std::vector<PlotSeries> ratios_mixed_plot(const SizeTable& generated) {
  const auto& labels = new_point_labels();
  std::vector<PlotSeries> data;
  std::vector<PlotSeries> refs;
  for (Format f : kFormats) {
    const std::string letter(format_letter(f));
    const auto same = mixed_ratio_report(generated, generated, labels, f, kMixedCloseTolerance);
    auto s = deviation_series(same, "new/new " + letter);
    data.push_back(std::move(s.ratios));
    refs.push_back(std::move(s.reference));
  }
  for (Format f : kFormats) {
    const std::string letter(format_letter(f));
    const auto mixed =
        mixed_ratio_report(french_table(), generated, labels, f, kMixedCloseTolerance);
    data.push_back(deviation_series(mixed, "old/new " + letter).ratios);
  }
  data.insert(data.end(), refs.begin(), refs.end());
  return data;
}

std::vector<PlotSeries> figure_data(FigureKind kind, const SizeTable& generated) {
  switch (kind) {
    case FigureKind::RatiosLegacy:
      return ratios_legacy_plot();
    case FigureKind::HeightsVsWidths:
      return heights_vs_widths_plot(generated);
    case FigureKind::RatiosMixed:
      return ratios_mixed_plot(generated);
  }
  return {};
}

}  // namespace canvas
