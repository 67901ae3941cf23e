#pragma once

#include <array>
#include <optional>
#include <vector>

#include "canvas/series.hpp"

namespace canvas {

/// Stretcher perimeter 2(W + H) of one format.
double circumference(const SizeRow& row, Format format);
/// Canvas area W * H of one format.
double area(const SizeRow& row, Format format);

struct MetricsRow {
  int index = 0;
  std::optional<int> point;
  std::array<double, 3> circumference_cm{};  // indexed by format_index()
  std::array<double, 3> area_cm2{};

  double circumference(Format f) const { return circumference_cm[format_index(f)]; }
  double area(Format f) const { return area_cm2[format_index(f)]; }
};

std::vector<MetricsRow> metrics_table(const SizeTable& table);

/// Largest relative gap between the directly computed metrics and the
/// geometric laws C(i) = r^(i-1) C(1), S(i) = r^(2(i-1)) S(1).
struct ScaledMetricReport {
  std::array<double, 3> circumference_max_rel_error{};
  std::array<double, 3> area_max_rel_error{};

  double max_rel_error() const;
};

/// Only defined for Generated tables; throws std::invalid_argument otherwise.
ScaledMetricReport scaled_metric_check(const SizeTable& table);

/// Range of successive-size ratios C(i+1)/C(i) and S(i+1)/S(i). Constant for
/// generated tables, scattered for legacy ones.
struct RatioSpread {
  double min = 0.0;
  double max = 0.0;
  double spread() const { return max - min; }
};

struct MetricStepSpread {
  std::array<RatioSpread, 3> circumference{};
  std::array<RatioSpread, 3> area{};
};

/// Needs at least two rows.
MetricStepSpread metric_step_spread(const SizeTable& table);

}  // namespace canvas
