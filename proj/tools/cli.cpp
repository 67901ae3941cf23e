#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "canvas/analysis.hpp"
#include "canvas/figures.hpp"
#include "canvas/metrics.hpp"
#include "canvas/render_io.hpp"
#include "canvas/series.hpp"
#include "canvas/standards.hpp"

namespace canvas::cli {

namespace {

enum class Command { Generate, Legacy, Metrics, Analyze, Compare, Plot };

struct CliConfig {
  Command command = Command::Generate;
  double base_width_cm = 18.0;
  int count = 25;
  TableFormat output_format = TableFormat::Text;
  std::optional<RoundingPolicy> rounding;  // unset: per-format default
  std::optional<double> tolerance;         // unset: calibrated constants
  std::string output_path;
  FigureKind figure = FigureKind::RatiosLegacy;

  RoundingPolicy effective_rounding() const {
    if (rounding) return *rounding;
    const bool display =
        output_format == TableFormat::Text || output_format == TableFormat::Markdown;
    return display ? RoundingPolicy::NearestMm : RoundingPolicy::None;
  }
};

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sig12(double x) { return format_number(x, RoundingPolicy::None); }

std::string point_label(const RatioEntry& e, Format f) {
  return std::string(format_letter(f)) + (e.point ? std::to_string(*e.point) : "#" + std::to_string(e.index));
}

SizeTable generated_table(const CliConfig& cfg) {
  const auto& labels = new_point_labels();
  const std::size_t n = std::min<std::size_t>(labels.size(), static_cast<std::size_t>(cfg.count));
  return generate(cfg.base_width_cm, cfg.count, std::span<const int>(labels.data(), n));
}

// Reports (and rule violations for analyze) in the requested format.
void write_reports(std::ostream& out, const std::string& title,
                   const std::vector<RatioReport>& reports,
                   const std::optional<std::vector<RuleViolation>>& violations,
                   const SizeTable& rule_table, TableFormat format) {
  auto rule_point = [&](int index) -> std::string {
    const auto& p = rule_table.row(static_cast<std::size_t>(index)).point;
    return p ? std::to_string(*p) : std::string();
  };

  switch (format) {
    case TableFormat::Json: {
      nlohmann::ordered_json doc;
      nlohmann::ordered_json reps = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["format"] = std::string(format_letter(r.format));
        j["target"] = r.entries.front().target;
        j["tolerance"] = r.tolerance;
        j["close_count"] = r.close_count;
        j["entry_count"] = r.entries.size();
        j["close_points"] = r.close_points();
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : r.entries) {
          entries.push_back({{"no", e.index},
                             {"point", e.point ? nlohmann::ordered_json(*e.point) : nullptr},
                             {"ratio", e.ratio},
                             {"relative_deviation", e.relative_deviation},
                             {"close", e.close}});
        }
        j["entries"] = std::move(entries);
        reps.push_back(std::move(j));
      }
      doc["reports"] = std::move(reps);
      if (violations) {
        nlohmann::ordered_json vs = nlohmann::ordered_json::array();
        for (const auto& v : *violations) {
          const auto pt = rule_point(v.index);
          vs.push_back({{"index", v.index},
                        {"point", pt.empty() ? nlohmann::ordered_json(nullptr)
                                             : nlohmann::ordered_json(std::stoi(pt))},
                        {"leg", std::string(rule_leg_name(v.leg))},
                        {"expected_cm", v.expected_cm},
                        {"found_cm", v.found_cm},
                        {"difference_cm", v.difference_cm}});
        }
        doc["rule_violations"] = std::move(vs);
      }
      out << doc.dump(2) << '\n';
      return;
    }
    case TableFormat::Csv: {
      out << "format,no,point,ratio,target,relative_deviation,close\n";
      for (const auto& r : reports) {
        for (const auto& e : r.entries) {
          out << format_letter(r.format) << ',' << e.index << ','
              << (e.point ? std::to_string(*e.point) : std::string()) << ',' << sig12(e.ratio)
              << ',' << sig12(e.target) << ',' << sig12(e.relative_deviation) << ','
              << (e.close ? 1 : 0) << '\n';
        }
      }
      if (violations) {
        out << "\nindex,point,leg,expected_cm,found_cm,difference_cm\n";
        for (const auto& v : *violations) {
          out << v.index << ',' << rule_point(v.index) << ',' << rule_leg_name(v.leg) << ','
              << sig12(v.expected_cm) << ',' << sig12(v.found_cm) << ','
              << sig12(v.difference_cm) << '\n';
        }
      }
      return;
    }
    case TableFormat::Markdown:
    case TableFormat::Text: {
      const bool md = format == TableFormat::Markdown;
      out << (md ? "## " : "") << title << "\n\n";
      for (const auto& r : reports) {
        out << (md ? "### " : "") << "Format " << format_letter(r.format) << ": target "
            << fixed(r.entries.front().target, 10) << ", tolerance " << sig12(r.tolerance)
            << ", close " << r.close_count << "/" << r.entries.size() << "\n";
        if (md) out << '\n';
        if (md) {
          out << "| No | Point | Ratio | Deviation | Close |\n|---:|---:|---:|---:|:---:|\n";
        } else {
          out << "   No  Point      Ratio  Deviation  Close\n";
        }
        for (const auto& e : r.entries) {
          const std::string pt = e.point ? std::to_string(*e.point) : "";
          char line[128];
          if (md) {
            std::snprintf(line, sizeof line, "| %d | %s | %.6f | %.4f | %s |\n", e.index,
                          pt.c_str(), e.ratio, e.relative_deviation, e.close ? "yes" : "");
          } else {
            std::snprintf(line, sizeof line, "%5d  %5s  %9.6f  %9.4f  %5s\n", e.index,
                          pt.c_str(), e.ratio, e.relative_deviation, e.close ? "yes" : "");
          }
          out << line;
        }
        std::string close_list;
        for (const auto& e : r.entries) {
          if (!e.close) continue;
          if (!close_list.empty()) close_list += ' ';
          close_list += point_label(e, r.format);
        }
        out << (md ? "\n" : "") << "Close: " << (close_list.empty() ? "(none)" : close_list)
            << "\n\n";
      }
      out << "Close counts:";
      for (const auto& r : reports) {
        out << ' ' << format_letter(r.format) << ' ' << r.close_count << '/' << r.entries.size();
      }
      out << '\n';
      if (violations) {
        out << '\n' << (md ? "## " : "") << "Optimal-material rule F(i) = P(i+1) = M(i+2): "
            << violations->size() << " violation(s)\n";
        if (!violations->empty()) {
          if (md) {
            out << "\n| i | Point | Leg | Expected (cm) | Found (cm) | Difference (cm) |\n"
                   "|---:|---:|:---:|---:|---:|---:|\n";
          } else {
            out << "    i  Point  Leg   Expected      Found  Difference\n";
          }
          for (const auto& v : *violations) {
            char line[160];
            const std::string pt = rule_point(v.index);
            if (md) {
              std::snprintf(line, sizeof line, "| %d | %s | %s | %.1f | %.1f | %.1f |\n",
                            v.index, pt.c_str(), std::string(rule_leg_name(v.leg)).c_str(),
                            v.expected_cm, v.found_cm, v.difference_cm);
            } else {
              std::snprintf(line, sizeof line, "%5d  %5s  %3s  %9.1f  %9.1f  %10.1f\n",
                            v.index, pt.c_str(), std::string(rule_leg_name(v.leg)).c_str(),
                            v.expected_cm, v.found_cm, v.difference_cm);
            }
            out << line;
          }
        }
      }
      return;
    }
  }
}

void execute(const CliConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Generate:
      export_table(out, generated_table(cfg), {}, cfg.output_format, cfg.effective_rounding());
      return;
    case Command::Legacy:
      export_table(out, french_table(), {}, cfg.output_format, cfg.effective_rounding());
      return;
    case Command::Metrics: {
      const auto table = generated_table(cfg);
      const auto metrics = metrics_table(table);
      export_table(out, table, metrics, cfg.output_format, cfg.effective_rounding());
      return;
    }
    case Command::Analyze: {
      std::vector<RatioReport> reports;
      for (Format f : kFormats) {
        reports.push_back(
            ratio_report(french_table(), f, cfg.tolerance.value_or(legacy_close_tolerance(f))));
      }
      const auto violations = check_optimal_rule(french_table(), 0.0);
      write_reports(out, "Legacy width-to-height ratios", reports, violations, french_table(),
                    cfg.output_format);
      return;
    }
    case Command::Compare: {
      const auto generated = generated_table(cfg);
      std::vector<RatioReport> reports;
      for (Format f : kFormats) {
        reports.push_back(mixed_ratio_report(french_table(), generated, new_point_labels(), f,
                                             cfg.tolerance.value_or(kMixedCloseTolerance)));
      }
      write_reports(out, "Legacy widths over new heights", reports, std::nullopt, generated,
                    cfg.output_format);
      return;
    }
    case Command::Plot: {
      const auto series = figure_data(cfg.figure, generated_table(cfg));
      emit_plot_data(out, series);
      return;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canvas and stretcher size systems built on the golden ratio and sqrt2", "canvasgen"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format_name = "table";
  std::string rounding_name;
  std::string figure_name;

  app.add_option("--base-width", cfg.base_width_cm, "Width of the smallest size in cm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--count", cfg.count, "Number of sizes to generate")
      ->check(CLI::Range(1, static_cast<int>(kMaxGeneratedRows)))
      ->capture_default_str();
  app.add_option("--output-format", format_name, "csv, json, markdown or table")
      ->check(CLI::IsMember({"csv", "json", "markdown", "table"}))
      ->capture_default_str();
  app.add_option("--rounding", rounding_name,
                 "nearest-mm, ceil-mm or none (default: nearest-mm for table/markdown, none "
                 "for csv/json)")
      ->check(CLI::IsMember({"nearest-mm", "ceil-mm", "none"}));
  app.add_option("--tolerance", cfg.tolerance,
                 "Relative closeness tolerance (default: analyze F " +
                     sig12(kLegacyCloseToleranceFigure) + ", P " +
                     sig12(kLegacyCloseTolerancePaysage) + ", M " +
                     sig12(kLegacyCloseToleranceMarine) + "; compare " +
                     sig12(kMixedCloseTolerance) + ")")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--output-path", cfg.output_path, "Write to this file instead of stdout");

  auto* generate_cmd = app.add_subcommand("generate", "New standard size table");
  auto* legacy_cmd = app.add_subcommand("legacy", "French standard sizes with Japanese extension");
  auto* metrics_cmd = app.add_subcommand("metrics", "Circumferences and areas of the new sizes");
  auto* analyze_cmd = app.add_subcommand("analyze", "Legacy ratio deviations and rule check");
  auto* compare_cmd = app.add_subcommand("compare", "Legacy widths over new heights");
  auto* plot_cmd = app.add_subcommand("plot", "Plot data for one figure");
  plot_cmd->add_option("figure", figure_name, "ratios-legacy, heights-vs-widths or ratios-mixed")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n"
        << app.get_formatter()->make_help(&app, "canvasgen", CLI::AppFormatMode::Normal);
    return kExitUsage;
  }

  if (*generate_cmd) cfg.command = Command::Generate;
  if (*legacy_cmd) cfg.command = Command::Legacy;
  if (*metrics_cmd) cfg.command = Command::Metrics;
  if (*analyze_cmd) cfg.command = Command::Analyze;
  if (*compare_cmd) cfg.command = Command::Compare;
  if (*plot_cmd) {
    cfg.command = Command::Plot;
    const auto kind = parse_figure_kind(figure_name);
    if (!kind) {
      err << "error: unknown figure '" << figure_name
          << "' (expected ratios-legacy, heights-vs-widths or ratios-mixed)\n";
      return kExitUsage;
    }
    cfg.figure = *kind;
  }
  cfg.output_format = *parse_table_format(format_name);
  if (!rounding_name.empty()) cfg.rounding = parse_rounding(rounding_name);

  std::ostringstream buffer;
  try {
    execute(cfg, buffer);
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output_path.empty()) {
    out << buffer.str();
    out.flush();
    if (!out) {
      err << "error: failed to write standard output\n";
      return kExitIo;
    }
    return kExitOk;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  file << buffer.str();
  file.close();
  if (!file) {
    err << "error: cannot write '" << cfg.output_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace canvas::cli
