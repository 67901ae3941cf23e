#include "canvas/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace canvas {

namespace {

void require_positive_width(double w, const char* name) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw std::domain_error(std::string(name) + " must be a positive length, got " +
                            std::to_string(w));
  }
}

void require_index(int i, const char* name) {
  if (i < 1) {
    throw std::domain_error(std::string(name) + " must be >= 1, got " + std::to_string(i));
  }
}

}  // namespace

double SizeRow::height(Format f) const {
  switch (f) {
    case Format::Figure:
      return f_cm;
    case Format::Paysage:
      return p_cm;
    case Format::Marine:
      return m_cm;
  }
  return 0.0;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Generated:
      return "generated";
    case Provenance::Legacy:
      return "legacy";
    case Provenance::Imported:
      return "imported";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  if (name == "generated") return Provenance::Generated;
  if (name == "legacy") return Provenance::Legacy;
  if (name == "imported") return Provenance::Imported;
  return std::nullopt;
}

SizeTable::SizeTable(double base_width_cm, std::vector<SizeRow> rows, Provenance provenance)
    : SizeTable(base_width_cm, std::move(rows), provenance, provenance) {}

SizeTable::SizeTable(double base_width_cm, std::vector<SizeRow> rows, Provenance provenance,
                     Provenance declared)
    : base_width_cm_(base_width_cm),
      rows_(std::move(rows)),
      provenance_(provenance),
      declared_(declared) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].index != static_cast<int>(k + 1)) {
      throw std::invalid_argument("size table row " + std::to_string(k + 1) +
                                  " carries index " + std::to_string(rows_[k].index));
    }
  }
}

const SizeRow& SizeTable::row(std::size_t index) const {
  if (index < 1 || index > rows_.size()) {
    throw std::out_of_range("row index " + std::to_string(index) + " outside 1.." +
                            std::to_string(rows_.size()));
  }
  return rows_[index - 1];
}

SizeTable SizeTable::head(std::size_t n) const {
  std::vector<SizeRow> rows(rows_.begin(),
                            rows_.begin() + static_cast<std::ptrdiff_t>(std::min(n, rows_.size())));
  return SizeTable(base_width_cm_, std::move(rows), provenance_, declared_);
}

SizeTable SizeTable::scaled(double factor) const {
  require_positive_width(factor, "scale factor");
  std::vector<SizeRow> rows = rows_;
  for (auto& r : rows) {
    r.width_cm *= factor;
    r.f_cm *= factor;
    r.p_cm *= factor;
    r.m_cm *= factor;
  }
  return SizeTable(base_width_cm_ * factor, std::move(rows), provenance_, declared_);
}

double step_ratio() {
  static const double r = golden_ratio() / porte_harmonie();
  return r;
}

double area_step_ratio() {
  static const double r = golden_ratio() * golden_ratio() / 2.0;
  return r;
}

double width_closed_form(int i, double w) {
  require_index(i, "i");
  require_positive_width(w, "w");
  return w * std::pow(step_ratio(), i - 1);
}

std::vector<double> width_recurrence(int n, double w) {
  require_index(n, "n");
  require_positive_width(w, "w");
  std::vector<double> widths;
  widths.reserve(static_cast<std::size_t>(n));
  double current = w;
  for (int i = 1; i <= n; ++i) {
    widths.push_back(current);
    current *= step_ratio();
  }
  return widths;
}

double height_for(Format format, double width) {
  require_positive_width(width, "width");
  switch (format) {
    case Format::Figure:
      return width * golden_ratio() / 2.0;
    case Format::Paysage:
      return width / porte_harmonie();
    case Format::Marine:
      return width / golden_ratio();
  }
  return 0.0;
}

SizeTable generate(double w, int n, std::span<const int> labels) {
  require_positive_width(w, "w");
  require_index(n, "n");
  if (static_cast<std::size_t>(n) > kMaxGeneratedRows) {
    throw std::domain_error("n must be <= " + std::to_string(kMaxGeneratedRows) + ", got " +
                            std::to_string(n));
  }
  if (labels.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("label list has " + std::to_string(labels.size()) +
                                " entries for " + std::to_string(n) + " rows");
  }

  std::vector<SizeRow> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    SizeRow r;
    r.index = i;
    if (static_cast<std::size_t>(i) <= labels.size()) r.point = labels[i - 1];
    r.width_cm = width_closed_form(i, w);
    r.f_cm = height_for(Format::Figure, r.width_cm);
    r.p_cm = height_for(Format::Paysage, r.width_cm);
    r.m_cm = height_for(Format::Marine, r.width_cm);
    rows.push_back(r);
  }
  return SizeTable(w, std::move(rows), Provenance::Generated);
}

}  // namespace canvas
