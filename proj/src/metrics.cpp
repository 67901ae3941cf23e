#include "canvas/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace canvas {

double circumference(const SizeRow& row, Format format) {
  return 2.0 * (row.width_cm + row.height(format));
}

double area(const SizeRow& row, Format format) { return row.width_cm * row.height(format); }

std::vector<MetricsRow> metrics_table(const SizeTable& table) {
  std::vector<MetricsRow> out;
  out.reserve(table.size());
  for (const auto& r : table.rows()) {
    MetricsRow m;
    m.index = r.index;
    m.point = r.point;
    for (Format f : kFormats) {
      m.circumference_cm[format_index(f)] = circumference(r, f);
      m.area_cm2[format_index(f)] = area(r, f);
    }
    out.push_back(m);
  }
  return out;
}

double ScaledMetricReport::max_rel_error() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    worst = std::max({worst, circumference_max_rel_error[k], area_max_rel_error[k]});
  }
  return worst;
}

ScaledMetricReport scaled_metric_check(const SizeTable& table) {
  if (table.provenance() != Provenance::Generated) {
    throw std::invalid_argument("scaled_metric_check needs a generated table, got " +
                                std::string(provenance_name(table.provenance())));
  }
  ScaledMetricReport report;
  if (table.empty()) return report;

  const SizeRow& first = table.row(1);
  for (Format f : kFormats) {
    const double c1 = circumference(first, f);
    const double s1 = area(first, f);
    double worst_c = 0.0;
    double worst_s = 0.0;
    for (const auto& r : table.rows()) {
      const double c_law = std::pow(step_ratio(), r.index - 1) * c1;
      const double s_law = std::pow(area_step_ratio(), r.index - 1) * s1;
      worst_c = std::max(worst_c, std::abs(circumference(r, f) - c_law) / c_law);
      worst_s = std::max(worst_s, std::abs(area(r, f) - s_law) / s_law);
    }
    report.circumference_max_rel_error[format_index(f)] = worst_c;
    report.area_max_rel_error[format_index(f)] = worst_s;
  }
  return report;
}

MetricStepSpread metric_step_spread(const SizeTable& table) {
  if (table.size() < 2) {
    throw std::invalid_argument("step spread needs at least two rows");
  }
  MetricStepSpread out;
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (Format f : kFormats) {
    RatioSpread c{inf, -inf};
    RatioSpread s{inf, -inf};
    for (std::size_t i = 1; i < table.size(); ++i) {
      const SizeRow& a = table.row(i);
      const SizeRow& b = table.row(i + 1);
      const double rc = circumference(b, f) / circumference(a, f);
      const double rs = area(b, f) / area(a, f);
      c = {std::min(c.min, rc), std::max(c.max, rc)};
      s = {std::min(s.min, rs), std::max(s.max, rs)};
    }
    out.circumference[format_index(f)] = c;
    out.area[format_index(f)] = s;
  }
  return out;
}

}  // namespace canvas
