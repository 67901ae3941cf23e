#include "canvas/render_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ios>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace canvas {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kDimensionColumns[] = {"no", "point", "width_cm", "f_cm", "p_cm", "m_cm"};
constexpr const char* kMetricColumns[] = {"c_f_cm", "c_p_cm", "c_m_cm",
                                          "s_f_cm2", "s_p_cm2", "s_m_cm2"};
constexpr const char* kDimensionTitles[] = {"No", "Point", "Width (cm)", "F (cm)", "P (cm)",
                                            "M (cm)"};
constexpr const char* kMetricTitles[] = {"C_F (cm)",  "C_P (cm)",  "C_M (cm)",
                                         "S_F (cm2)", "S_P (cm2)", "S_M (cm2)"};

std::string printf_double(const char* fmt, double x) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, fmt, x);
  return std::string(buf, static_cast<std::size_t>(std::max(n, 0)));
}

// Value as it appears in serialized output, so JSON and CSV agree.
double serialized_value(double x, RoundingPolicy policy) {
  if (policy != RoundingPolicy::None) return round_dimension(x, policy);
  return std::stod(printf_double("%.12g", x));
}

std::string point_text(const std::optional<int>& point) {
  return point ? std::to_string(*point) : std::string();
}

// One table of strings: header plus rows, shared by csv/markdown/text writers.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Grid build_grid(const SizeTable& table, std::span<const MetricsRow> metrics,
                RoundingPolicy policy, bool machine_names) {
  Grid g;
  for (std::size_t k = 0; k < 6; ++k) {
    g.header.emplace_back(machine_names ? kDimensionColumns[k] : kDimensionTitles[k]);
  }
  if (!metrics.empty()) {
    for (std::size_t k = 0; k < 6; ++k) {
      g.header.emplace_back(machine_names ? kMetricColumns[k] : kMetricTitles[k]);
    }
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SizeRow& r = table.rows()[i];
    std::vector<std::string> cells{std::to_string(r.index),
                                   point_text(r.point),
                                   format_number(r.width_cm, policy),
                                   format_number(r.f_cm, policy),
                                   format_number(r.p_cm, policy),
                                   format_number(r.m_cm, policy)};
    if (!metrics.empty()) {
      const MetricsRow& m = metrics[i];
      for (Format f : kFormats) cells.push_back(format_number(m.circumference(f), policy));
      for (Format f : kFormats) cells.push_back(format_number(m.area(f), policy));
    }
    g.rows.push_back(std::move(cells));
  }
  return g;
}

void write_csv(std::ostream& out, const Grid& g) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out << ',';
      out << cells[k];
    }
    out << '\n';
  };
  line(g.header);
  for (const auto& r : g.rows) line(r);
}

void write_markdown(std::ostream& out, const Grid& g) {
  out << '|';
  for (const auto& h : g.header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t k = 0; k < g.header.size(); ++k) out << "---:|";
  out << '\n';
  for (const auto& r : g.rows) {
    out << '|';
    for (const auto& c : r) out << ' ' << c << " |";
    out << '\n';
  }
}

void write_text(std::ostream& out, const Grid& g) {
  std::vector<std::size_t> widths(g.header.size());
  for (std::size_t k = 0; k < widths.size(); ++k) {
    widths[k] = g.header[k].size();
    for (const auto& r : g.rows) widths[k] = std::max(widths[k], r[k].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out << "  ";
      out << std::string(widths[k] - cells[k].size(), ' ') << cells[k];
    }
    out << '\n';
  };
  line(g.header);
  std::size_t total = 0;
  for (auto w : widths) total += w;
  out << std::string(total + 2 * (widths.size() - 1), '-') << '\n';
  for (const auto& r : g.rows) line(r);
}

void write_json(std::ostream& out, const SizeTable& table, std::span<const MetricsRow> metrics,
                RoundingPolicy policy) {
  ordered_json doc;
  doc["base_width_cm"] = serialized_value(table.base_width_cm(), policy);
  doc["provenance"] = std::string(provenance_name(table.declared_provenance()));
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SizeRow& r = table.rows()[i];
    ordered_json j;
    j["no"] = r.index;
    j["point"] = r.point ? ordered_json(*r.point) : ordered_json(nullptr);
    j["width_cm"] = serialized_value(r.width_cm, policy);
    j["f_cm"] = serialized_value(r.f_cm, policy);
    j["p_cm"] = serialized_value(r.p_cm, policy);
    j["m_cm"] = serialized_value(r.m_cm, policy);
    if (!metrics.empty()) {
      std::size_t k = 0;
      for (Format f : kFormats) j[kMetricColumns[k++]] = serialized_value(metrics[i].circumference(f), policy);
      for (Format f : kFormats) j[kMetricColumns[k++]] = serialized_value(metrics[i].area(f), policy);
    }
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int_field(std::string_view text, std::size_t line, std::string_view column) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "column '" + std::string(column) + "': expected an integer, got '" +
                               std::string(text) + "'");
  }
  return value;
}

double parse_dimension_field(std::string_view text, std::size_t line, std::string_view column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(line, "column '" + std::string(column) + "': expected a number, got '" +
                               std::string(text) + "'");
  }
  if (!(value > 0.0)) {
    throw ParseError(line, "column '" + std::string(column) + "': dimension must be positive");
  }
  return value;
}

void check_row_order(const SizeRow& row, std::size_t expected, std::size_t line) {
  if (row.index != static_cast<int>(expected)) {
    throw ParseError(line, "row number " + std::to_string(row.index) + " out of sequence, expected " +
                               std::to_string(expected));
  }
  if (row.point && *row.point < 0) {
    throw ParseError(line, "point label must be non-negative");
  }
}

SizeTable import_csv(std::string_view bytes) {
  std::vector<std::string_view> lines = split(bytes, '\n');
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header row");

  const auto header = split(lines[0], ',');
  std::size_t col[6];
  for (std::size_t k = 0; k < 6; ++k) {
    const auto it = std::find(header.begin(), header.end(), kDimensionColumns[k]);
    if (it == header.end()) {
      throw ParseError(1, "missing column '" + std::string(kDimensionColumns[k]) + "'");
    }
    col[k] = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<SizeRow> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    const auto fields = split(lines[li], ',');
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    SizeRow r;
    r.index = parse_int_field(fields[col[0]], line_no, kDimensionColumns[0]);
    if (!fields[col[1]].empty()) {
      r.point = parse_int_field(fields[col[1]], line_no, kDimensionColumns[1]);
    }
    r.width_cm = parse_dimension_field(fields[col[2]], line_no, kDimensionColumns[2]);
    r.f_cm = parse_dimension_field(fields[col[3]], line_no, kDimensionColumns[3]);
    r.p_cm = parse_dimension_field(fields[col[4]], line_no, kDimensionColumns[4]);
    r.m_cm = parse_dimension_field(fields[col[5]], line_no, kDimensionColumns[5]);
    check_row_order(r, rows.size() + 1, line_no);
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError(2, "table has no rows");
  const double base = rows.front().width_cm;
  return SizeTable(base, std::move(rows), Provenance::Imported);
}

std::size_t line_of_offset(std::string_view bytes, std::size_t offset) {
  offset = std::min(offset, bytes.size());
  return 1 + static_cast<std::size_t>(
                 std::count(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

SizeTable import_json(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(bytes, e.byte), e.what());
  }
  auto require = [&](const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
      throw ParseError(0, where + ": missing key '" + key + "'");
    }
    return obj.at(key);
  };
  auto number = [](const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(0, where + ": expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) throw ParseError(0, where + ": dimension must be positive");
    return x;
  };

  const double base = number(require(doc, "base_width_cm", "document"), "base_width_cm");
  const auto prov_json = require(doc, "provenance", "document");
  if (!prov_json.is_string()) throw ParseError(0, "provenance: expected a string");
  const auto declared = parse_provenance(prov_json.get<std::string>());
  if (!declared) throw ParseError(0, "provenance: unknown value '" + prov_json.get<std::string>() + "'");
  const auto rows_json = require(doc, "rows", "document");
  if (!rows_json.is_array()) throw ParseError(0, "rows: expected an array");

  std::vector<SizeRow> rows;
  for (std::size_t k = 0; k < rows_json.size(); ++k) {
    const auto& j = rows_json[k];
    const std::string where = "rows[" + std::to_string(k) + "]";
    SizeRow r;
    const auto no = require(j, "no", where);
    if (!no.is_number_integer()) throw ParseError(0, where + ".no: expected an integer");
    r.index = no.get<int>();
    const auto point = require(j, "point", where);
    if (!point.is_null()) {
      if (!point.is_number_integer()) throw ParseError(0, where + ".point: expected an integer or null");
      r.point = point.get<int>();
    }
    for (std::size_t c = 2; c < 6; ++c) {
      const double v = number(require(j, kDimensionColumns[c], where), where + "." + kDimensionColumns[c]);
      switch (c) {
        case 2: r.width_cm = v; break;
        case 3: r.f_cm = v; break;
        case 4: r.p_cm = v; break;
        default: r.m_cm = v; break;
      }
    }
    if (r.index != static_cast<int>(k + 1)) {
      throw ParseError(0, where + ": row number " + std::to_string(r.index) +
                              " out of sequence, expected " + std::to_string(k + 1));
    }
    if (r.point && *r.point < 0) throw ParseError(0, where + ".point: must be non-negative");
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError(0, "rows: table has no rows");
  return SizeTable(base, std::move(rows), Provenance::Imported, *declared);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

double round_dimension(double x, RoundingPolicy policy) {
  switch (policy) {
    case RoundingPolicy::None:
      return x;
    case RoundingPolicy::NearestMm:
      return std::round(x * 10.0) / 10.0;
    case RoundingPolicy::CeilMm: {
      const double scaled = x * 10.0;
      const double nearest = std::round(scaled);
      // Already on the grid up to representation error.
      if (std::abs(scaled - nearest) <= 1e-9 * std::max(1.0, std::abs(scaled))) {
        return nearest / 10.0;
      }
      return std::ceil(scaled) / 10.0;
    }
  }
  return x;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  if (name == "markdown") return TableFormat::Markdown;
  if (name == "table") return TableFormat::Text;
  return std::nullopt;
}

std::optional<RoundingPolicy> parse_rounding(std::string_view name) {
  if (name == "nearest-mm") return RoundingPolicy::NearestMm;
  if (name == "ceil-mm") return RoundingPolicy::CeilMm;
  if (name == "none") return RoundingPolicy::None;
  return std::nullopt;
}

std::string format_number(double x, RoundingPolicy policy) {
  if (policy == RoundingPolicy::None) return printf_double("%.12g", x);
  return printf_double("%.1f", round_dimension(x, policy));
}

void export_table(std::ostream& out, const SizeTable& table, std::span<const MetricsRow> metrics,
                  TableFormat format, RoundingPolicy policy) {
  if (table.empty()) throw std::invalid_argument("cannot export an empty table");
  if (!metrics.empty() && metrics.size() != table.size()) {
    throw std::invalid_argument("metrics rows do not match table rows");
  }
  switch (format) {
    case TableFormat::Csv:
      write_csv(out, build_grid(table, metrics, policy, true));
      break;
    case TableFormat::Markdown:
      write_markdown(out, build_grid(table, metrics, policy, false));
      break;
    case TableFormat::Text:
      write_text(out, build_grid(table, metrics, policy, false));
      break;
    case TableFormat::Json:
      write_json(out, table, metrics, policy);
      break;
  }
  if (!out) throw std::ios_base::failure("failed to write table");
}

std::string export_table(const SizeTable& table, std::span<const MetricsRow> metrics,
                         TableFormat format, RoundingPolicy policy) {
  std::ostringstream os;
  export_table(os, table, metrics, format, policy);
  return os.str();
}

SizeTable import_table(std::string_view bytes, TableFormat format) {
  switch (format) {
    case TableFormat::Csv:
      return import_csv(bytes);
    case TableFormat::Json:
      return import_json(bytes);
    default:
      throw std::invalid_argument("import supports csv and json only");
  }
}

void emit_plot_data(std::ostream& out, std::span<const PlotSeries> series) {
  if (series.empty()) throw std::invalid_argument("no series to emit");
  bool first = true;
  for (const auto& s : series) {
    if (!first) out << '\n';
    first = false;
    out << "# " << s.label << '\n';
    for (const auto& p : s.points) {
      out << printf_double("%.12g", p.x) << ' ' << printf_double("%.12g", p.y) << '\n';
    }
  }
  if (!out) throw std::ios_base::failure("failed to write plot data");
}

}  // namespace canvas
