#include "canvas/standards.hpp"

#include <string>
#include <vector>

namespace canvas {

namespace {

struct LegacyCell {
  int point, width, f, p, m;
};

// Point 120 repeats the point-100 heights; the P130/M130 heights were filled
// in from the optimal-material rule.
constexpr std::array<LegacyCell, kLegacyRowCount> kFrench{{
    {0, 18, 14, 12, 10},      {1, 22, 16, 14, 12},      {2, 24, 19, 16, 14},
    {3, 27, 22, 19, 16},      {4, 33, 24, 22, 19},      {5, 35, 27, 24, 22},
    {6, 41, 33, 27, 24},      {8, 46, 38, 33, 27},      {10, 55, 46, 38, 33},
    {12, 61, 50, 46, 38},     {15, 65, 54, 50, 46},     {20, 73, 60, 54, 50},
    {25, 81, 65, 60, 54},     {30, 92, 73, 65, 60},     {40, 100, 81, 73, 65},
    {50, 116, 89, 81, 73},    {60, 130, 97, 89, 81},    {80, 146, 114, 97, 89},
    {100, 162, 130, 114, 97}, {120, 195, 130, 114, 97}, {130, 195, 162, 130, 114},
    {150, 228, 182, 162, 146}, {200, 260, 195, 182, 162}, {300, 292, 219, 197, 182},
    {500, 334, 250, 219, 197},
}};

constexpr NewPointLabels kNewLabels{0,  1,  2,  3,  4,  5,   6,   8,   10,  12,  15, 25,
                                    30, 40, 50, 60, 80, 100, 130, 150, 200, 300, 500};

SizeTable build_french() {
  std::vector<SizeRow> rows;
  rows.reserve(kFrench.size());
  int index = 1;
  for (const auto& c : kFrench) {
    rows.push_back(SizeRow{index++, c.point, static_cast<double>(c.width),
                           static_cast<double>(c.f), static_cast<double>(c.p),
                           static_cast<double>(c.m)});
  }
  const double base = rows.front().width_cm;
  return SizeTable(base, std::move(rows), Provenance::Legacy);
}

}  // namespace

const SizeTable& french_table() {
  static const SizeTable table = build_french();
  return table;
}

const NewPointLabels& new_point_labels() { return kNewLabels; }

SizeTable new_standard_table() { return generate(18.0, 25, kNewLabels); }

std::optional<SizeRow> lookup_point(const SizeTable& table, int point) {
  std::optional<SizeRow> found;
  for (const auto& r : table.rows()) {
    if (r.point != point) continue;
    if (found) {
      throw DataIntegrityError("point " + std::to_string(point) + " labels rows " +
                               std::to_string(found->index) + " and " +
                               std::to_string(r.index));
    }
    found = r;
  }
  return found;
}

}  // namespace canvas
