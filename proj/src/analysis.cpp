#include "canvas/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace canvas {

namespace {

RatioEntry make_entry(int index, std::optional<int> point, double width, double height,
                      double target, double tolerance) {
  RatioEntry e;
  e.index = index;
  e.point = point;
  e.ratio = width / height;
  e.target = target;
  e.relative_deviation = std::abs(e.ratio - target) / target;
  e.close = e.relative_deviation <= tolerance;
  return e;
}

void require_tolerance(double tolerance) {
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("tolerance must be non-negative");
  }
}

void count_close(RatioReport& report) {
  report.close_count = static_cast<int>(
      std::count_if(report.entries.begin(), report.entries.end(),
                    [](const RatioEntry& e) { return e.close; }));
}

}  // namespace

double legacy_close_tolerance(Format f) {
  switch (f) {
    case Format::Figure:
      return kLegacyCloseToleranceFigure;
    case Format::Paysage:
      return kLegacyCloseTolerancePaysage;
    case Format::Marine:
      return kLegacyCloseToleranceMarine;
  }
  return 0.0;
}

std::vector<int> RatioReport::close_points() const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (e.close) out.push_back(e.point.value_or(e.index));
  }
  return out;
}

RatioReport ratio_report(const SizeTable& table, Format format, double tolerance) {
  require_tolerance(tolerance);
  RatioReport report;
  report.format = format;
  report.tolerance = tolerance;
  const double target = target_for(format);
  for (const auto& r : table.rows()) {
    const double h = r.height(format);
    if (!(h > 0.0)) {
      throw DataIntegrityError("row " + std::to_string(r.index) + " has non-positive " +
                               std::string(format_letter(format)) + " height");
    }
    report.entries.push_back(make_entry(r.index, r.point, r.width_cm, h, target, tolerance));
  }
  count_close(report);
  return report;
}

MixedRatioReport mixed_ratio_report(const SizeTable& legacy, const SizeTable& generated,
                                    std::span<const int> labels, Format format,
                                    double tolerance) {
  require_tolerance(tolerance);
  MixedRatioReport report;
  report.format = format;
  report.tolerance = tolerance;
  const double target = target_for(format);
  for (int point : labels) {
    auto old_row = lookup_point(legacy, point);
    auto new_row = lookup_point(generated, point);
    if (!old_row || !new_row) continue;
    const double h = new_row->height(format);
    if (!(h > 0.0)) {
      throw DataIntegrityError("row " + std::to_string(new_row->index) +
                               " has non-positive height");
    }
    report.entries.push_back(
        make_entry(new_row->index, point, old_row->width_cm, h, target, tolerance));
  }
  if (report.entries.empty()) {
    throw std::invalid_argument("no point label is shared by both tables");
  }
  count_close(report);
  return report;
}

std::string_view rule_leg_name(RuleLeg leg) {
  return leg == RuleLeg::FigurePaysage ? "F-P" : "F-M";
}

std::vector<RuleViolation> check_optimal_rule(const SizeTable& table, double tolerance_cm) {
  if (!(tolerance_cm >= 0.0)) {
    throw std::invalid_argument("tolerance_cm must be non-negative");
  }
  std::vector<RuleViolation> out;
  const std::size_t n = table.size();
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const double f = table.row(i).f_cm;
    const double p = table.row(i + 1).p_cm;
    const double m = table.row(i + 2).m_cm;
    if (std::abs(f - p) > tolerance_cm) {
      out.push_back({static_cast<int>(i), RuleLeg::FigurePaysage, f, p, std::abs(f - p)});
    }
    if (std::abs(f - m) > tolerance_cm) {
      out.push_back({static_cast<int>(i), RuleLeg::FigureMarine, f, m, std::abs(f - m)});
    }
  }
  return out;
}

DeviationSeries deviation_series(const RatioReport& report, std::string label) {
  if (report.entries.empty()) {
    throw std::invalid_argument("deviation series needs a non-empty report");
  }
  if (label.empty()) label = std::string(format_letter(report.format));

  DeviationSeries out;
  out.ratios.label = label;
  for (const auto& e : report.entries) {
    out.ratios.points.push_back({static_cast<double>(e.point.value_or(e.index)), e.ratio});
  }
  const auto [lo, hi] = std::minmax_element(
      out.ratios.points.begin(), out.ratios.points.end(),
      [](const PlotPoint& a, const PlotPoint& b) { return a.x < b.x; });
  const double target = report.entries.front().target;
  out.reference.label = label + " target";
  out.reference.points = {{lo->x, target}, {hi->x, target}};
  return out;
}

}  // namespace canvas
