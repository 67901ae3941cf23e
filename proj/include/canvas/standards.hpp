#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "canvas/series.hpp"

namespace canvas {

/// Raised when a table breaks an invariant a lookup relies on.
class DataIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kLegacyRowCount = 25;

/// French standard sizes (points 0-120) with the Japanese extension
/// (points 130-500), whole centimetres, exactly as published.
const SizeTable& french_table();

/// Point labels of the new standard sizes. Rows 24 and 25 carry no label;
/// points 20 and 120 have no counterpart among the new widths.
using NewPointLabels = std::array<int, 23>;
const NewPointLabels& new_point_labels();

/// The new 25-size system from an 18 cm base width, labelled.
SizeTable new_standard_table();

/// The row labelled `point`, or nullopt when no row carries it.
std::optional<SizeRow> lookup_point(const SizeTable& table, int point);

}  // namespace canvas
