#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "canvas/metrics.hpp"
#include "canvas/standards.hpp"
#include "oracles.hpp"
#include "paper_tables.hpp"

using namespace canvas;

TEST(Metrics, RowOneCircumferences) {
  const auto row = generate(18.0, 1).row(1);
  EXPECT_NEAR(circumference(row, Format::Figure), 65.1, 0.05);
  EXPECT_NEAR(circumference(row, Format::Paysage), 61.5, 0.05);
  const double cm_oracle = static_cast<double>(2.0L * 18.0L * oracle::phi());
  EXPECT_NEAR(circumference(row, Format::Marine), cm_oracle, 1e-6 * cm_oracle);
  EXPECT_NEAR(circumference(row, Format::Marine), 58.25, 0.05);
}

TEST(Metrics, AreasAgainstPublishedValues) {
  const auto t = generate(18.0, 9);
  EXPECT_NEAR(area(t.row(1), Format::Figure), 262.1, 0.05);
  EXPECT_NEAR(area(t.row(1), Format::Marine), 200.2, 0.05);
  EXPECT_NEAR(area(t.row(9), Format::Figure), 2259.8, 0.1);
}

TEST(Metrics, SingleRowMatchesClosedForms) {
  const auto m = metrics_table(generate(18.0, 1));
  ASSERT_EQ(m.size(), 1u);
  const long double w = 18.0L;
  const long double phi = oracle::phi();
  const long double s2 = oracle::sqrt2();
  const double c_oracle[] = {static_cast<double>(2 * w * (1 + phi / 2)),
                             static_cast<double>(2 * w * (1 + 1 / s2)),
                             static_cast<double>(2 * w * phi)};
  const double s_oracle[] = {static_cast<double>(w * w * phi / 2), static_cast<double>(w * w / s2),
                             static_cast<double>(w * w / phi)};
  for (Format f : kFormats) {
    const auto k = format_index(f);
    EXPECT_NEAR(m[0].circumference(f), c_oracle[k], 1e-12 * c_oracle[k]);
    EXPECT_NEAR(m[0].area(f), s_oracle[k], 1e-12 * s_oracle[k]);
  }
}

TEST(Metrics, PublishedCircumferenceAndAreaTables) {
  const auto m = metrics_table(new_standard_table());
  ASSERT_EQ(m.size(), 25u);
  for (std::size_t i = 0; i < 25; ++i) {
    for (Format f : kFormats) {
      const auto k = format_index(f);
      EXPECT_NEAR(m[i].circumference(f), golden::kCircumference[i].cells[k], 0.1)
          << "row " << i + 1 << " " << format_letter(f);
    }
  }
  // Areas through row 24; row 25 is covered (and reported) by the acceptance suite.
  for (std::size_t i = 0; i < 24; ++i) {
    for (Format f : kFormats) {
      const auto k = format_index(f);
      EXPECT_NEAR(m[i].area(f), golden::kArea[i].cells[k], 0.2)
          << "row " << i + 1 << " " << format_letter(f);
    }
  }
  EXPECT_EQ(m[22].point, 500);
  EXPECT_FALSE(m[24].point);
}

TEST(Metrics, OrderingAcrossFormats) {
  for (const auto& row : metrics_table(generate(18.0, 25))) {
    EXPECT_GT(row.circumference(Format::Figure), row.circumference(Format::Paysage));
    EXPECT_GT(row.circumference(Format::Paysage), row.circumference(Format::Marine));
    EXPECT_GT(row.area(Format::Figure), row.area(Format::Paysage));
    EXPECT_GT(row.area(Format::Paysage), row.area(Format::Marine));
    EXPECT_GT(row.area(Format::Marine), 0.0);
  }
}

TEST(ScaledMetricCheck, GeneratedTablesObeyLaws) {
  EXPECT_LE(scaled_metric_check(generate(18.0, 25)).max_rel_error(), 1e-12);

  const auto two = generate(18.0, 2);
  EXPECT_NEAR(circumference(two.row(2), Format::Figure) / circumference(two.row(1), Format::Figure),
              1.144, 0.0005);
  for (Format f : kFormats) {
    EXPECT_NEAR(area(two.row(2), f) / area(two.row(1), f), 1.31, 0.005);
  }
}

TEST(ScaledMetricCheck, RejectsNonGenerated) {
  EXPECT_THROW(scaled_metric_check(french_table()), std::invalid_argument);
}

TEST(StepSpread, ConstantForGeneratedScatteredForLegacy) {
  const auto gen = metric_step_spread(generate(18.0, 25));
  for (Format f : kFormats) {
    const auto k = format_index(f);
    EXPECT_LE(gen.circumference[k].spread(), 1e-12);
    EXPECT_LE(gen.area[k].spread(), 1e-12);
    EXPECT_NEAR(gen.circumference[k].min, step_ratio(), 1e-12);
    EXPECT_NEAR(gen.area[k].min, area_step_ratio(), 1e-12);
  }
  const auto old = metric_step_spread(french_table());
  for (Format f : kFormats) {
    EXPECT_GT(old.circumference[format_index(f)].spread(), 0.1);
    EXPECT_GT(old.area[format_index(f)].spread(), 0.1);
  }
  EXPECT_THROW(metric_step_spread(generate(18.0, 1)), std::invalid_argument);
}
