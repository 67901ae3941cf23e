#pragma once

#include <array>
#include <string_view>

namespace canvas {

/// The three canvas formats, ordered by decreasing height at a fixed width.
/// The ordering is load-bearing: the optimal-material rule pairs Figure at
/// size i with Paysage at i+1 and Marine at i+2.
enum class Format { Figure = 0, Paysage = 1, Marine = 2 };

inline constexpr std::array<Format, 3> kFormats{Format::Figure, Format::Paysage,
                                                Format::Marine};

constexpr std::size_t format_index(Format f) { return static_cast<std::size_t>(f); }

/// Short label used in tables and reports: "F", "P" or "M".
std::string_view format_letter(Format f);
std::string_view format_name(Format f);

// Constants are derived from std::sqrt(5) and std::sqrt(2) at first use.
double golden_ratio();      // (1 + sqrt5) / 2
double golden_conjugate();  // (sqrt5 - 1) / 2 == 1 / golden_ratio
double porte_harmonie();    // sqrt2
double silver_ratio();      // 1 + sqrt2

/// Width-to-height target ratios keyed by format.
struct RatioTargets {
  double figure_ratio;   // 2 / phi
  double paysage_ratio;  // sqrt2
  double marine_ratio;   // phi

  double operator[](Format f) const;
};

const RatioTargets& ratio_targets();

/// Width-to-height target for one format: 2/phi, sqrt2 or phi.
double target_for(Format format);

}  // namespace canvas
