#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canvas/series.hpp"
#include "canvas/standards.hpp"

namespace canvas {

/// Relative tolerances under which the legacy width-to-height ratios count as
/// "close" to their target. Calibrated by sweeping the tolerance over the
/// legacy table: the published close lists are reproduced for
///   F: [0.01350, 0.01572)   P: [0.01429, 0.02340)   M: [0.01785, 0.03012)
/// No single value lies in all three windows, so each format gets its own.
inline constexpr double kLegacyCloseToleranceFigure = 0.015;
inline constexpr double kLegacyCloseTolerancePaysage = 0.02;
inline constexpr double kLegacyCloseToleranceMarine = 0.02;

double legacy_close_tolerance(Format f);

/// Tolerance for old width over new height. The deviation there equals
/// |W_old / W_new - 1| for every format; 12 of 23 labels fall inside for any
/// tolerance in [0.02330, 0.03488).
inline constexpr double kMixedCloseTolerance = 0.03;

struct RatioEntry {
  int index = 0;
  std::optional<int> point;
  double ratio = 0.0;  // width / height
  double target = 0.0;
  double relative_deviation = 0.0;  // |ratio - target| / target
  bool close = false;
};

struct RatioReport {
  Format format = Format::Figure;
  std::vector<RatioEntry> entries;
  double tolerance = 0.0;
  int close_count = 0;

  std::vector<int> close_points() const;
};

/// Ratio of a legacy width to the new height at the same point label.
struct MixedRatioReport : RatioReport {};

/// Throws std::invalid_argument for tolerance <= 0 and DataIntegrityError for a
/// non-positive height.
RatioReport ratio_report(const SizeTable& table, Format format, double tolerance);

/// Entries for labels present in both tables, in `labels` order.
MixedRatioReport mixed_ratio_report(const SizeTable& legacy, const SizeTable& generated,
                                    std::span<const int> labels, Format format,
                                    double tolerance);

enum class RuleLeg { FigurePaysage, FigureMarine };
std::string_view rule_leg_name(RuleLeg leg);

/// F(i) must equal P(i+1) (FigurePaysage) and M(i+2) (FigureMarine).
struct RuleViolation {
  int index = 0;
  RuleLeg leg = RuleLeg::FigurePaysage;
  double expected_cm = 0.0;  // F(i)
  double found_cm = 0.0;     // P(i+1) or M(i+2)
  double difference_cm = 0.0;

  friend bool operator==(const RuleViolation&, const RuleViolation&) = default;
};

/// Checks F(i) = P(i+1) = M(i+2) for i = 1..n-2 against an absolute tolerance.
/// Tables with fewer than three rows never violate.
std::vector<RuleViolation> check_optimal_rule(const SizeTable& table, double tolerance_cm);

struct PlotPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

struct PlotSeries {
  std::string label;
  std::vector<PlotPoint> points;
};

/// Ratio per point label (or row index when unlabelled), plus a two-point
/// horizontal reference line at the target.
struct DeviationSeries {
  PlotSeries ratios;
  PlotSeries reference;
};

DeviationSeries deviation_series(const RatioReport& report, std::string label = {});

}  // namespace canvas
