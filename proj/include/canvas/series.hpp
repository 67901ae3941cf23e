#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "canvas/ratio_core.hpp"

namespace canvas {

/// One canvas size: the shared width and the height of each format, in cm.
struct SizeRow {
  int index = 0;                 // 1-based position in its table
  std::optional<int> point;      // legacy "point" label, if assigned
  double width_cm = 0.0;
  double f_cm = 0.0;
  double p_cm = 0.0;
  double m_cm = 0.0;

  double height(Format f) const;

  friend bool operator==(const SizeRow&, const SizeRow&) = default;
};

enum class Provenance { Generated, Legacy, Imported };

std::string_view provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

/// An ordered, immutable list of sizes with indices 1..n.
class SizeTable {
 public:
  SizeTable(double base_width_cm, std::vector<SizeRow> rows, Provenance provenance);

  /// Imported tables remember the provenance named by the document they came
  /// from; for other tables this equals provenance().
  SizeTable(double base_width_cm, std::vector<SizeRow> rows, Provenance provenance,
            Provenance declared);

  double base_width_cm() const { return base_width_cm_; }
  Provenance provenance() const { return provenance_; }
  Provenance declared_provenance() const { return declared_; }

  std::span<const SizeRow> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const SizeRow& row(std::size_t index) const;  // 1-based

  /// First n rows, same provenance.
  SizeTable head(std::size_t n) const;

  /// Every dimension multiplied by factor (> 0).
  SizeTable scaled(double factor) const;

  friend bool operator==(const SizeTable&, const SizeTable&) = default;

 private:
  double base_width_cm_;
  std::vector<SizeRow> rows_;
  Provenance provenance_;
  Provenance declared_;
};

inline constexpr std::size_t kMaxGeneratedRows = 1000;

double step_ratio();       // phi / sqrt2, width growth per size
double area_step_ratio();  // phi^2 / 2, area growth per size

/// W(i) = w (phi/sqrt2)^(i-1).
double width_closed_form(int i, double w);

/// [W(1) .. W(n)] by repeated multiplication with step_ratio().
std::vector<double> width_recurrence(int n, double w);

/// Height whose width-to-height ratio is exactly target_for(format).
double height_for(Format format, double width);

/// Builds a table of n sizes from base width w. Labels, when given, attach to
/// rows 1..labels.size() and must not outnumber the rows.
SizeTable generate(double w, int n, std::span<const int> labels = {});

}  // namespace canvas
