#include "canvas/ratio_core.hpp"

#include <cmath>

namespace canvas {

namespace {

struct Constants {
  double sqrt5 = std::sqrt(5.0);
  double sqrt2 = std::sqrt(2.0);
  double phi = (1.0 + sqrt5) / 2.0;
  double conjugate = (sqrt5 - 1.0) / 2.0;
  RatioTargets targets{2.0 / phi, sqrt2, phi};
};

const Constants& constants() {
  static const Constants c;
  return c;
}

}  // namespace

std::string_view format_letter(Format f) {
  switch (f) {
    case Format::Figure:
      return "F";
    case Format::Paysage:
      return "P";
    case Format::Marine:
      return "M";
  }
  return "?";
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Figure:
      return "figure";
    case Format::Paysage:
      return "paysage";
    case Format::Marine:
      return "marine";
  }
  return "?";
}

double golden_ratio() { return constants().phi; }
double golden_conjugate() { return constants().conjugate; }
double porte_harmonie() { return constants().sqrt2; }
double silver_ratio() { return 1.0 + constants().sqrt2; }

double RatioTargets::operator[](Format f) const {
  switch (f) {
    case Format::Figure:
      return figure_ratio;
    case Format::Paysage:
      return paysage_ratio;
    case Format::Marine:
      return marine_ratio;
  }
  return 0.0;
}

const RatioTargets& ratio_targets() { return constants().targets; }

double target_for(Format format) { return ratio_targets()[format]; }

}  // namespace canvas
