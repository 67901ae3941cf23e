#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "canvas/series.hpp"
#include "oracles.hpp"
#include "paper_tables.hpp"

using namespace canvas;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(WidthClosedForm, BaseCase) { EXPECT_EQ(width_closed_form(1, 18.0), 18.0); }

TEST(WidthClosedForm, PublishedRows) {
  EXPECT_LT(rel(width_closed_form(9, 18.0), 52.851064510), 1e-5);
  EXPECT_LT(rel(width_closed_form(25, 18.0), 455.634087108), 1e-5);
}

TEST(WidthClosedForm, RejectsBadArguments) {
  EXPECT_THROW(width_closed_form(0, 18.0), std::domain_error);
  EXPECT_THROW(width_closed_form(1, 0.0), std::domain_error);
  EXPECT_THROW(width_closed_form(1, -3.0), std::domain_error);
  try {
    width_closed_form(3, -1.0);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find('w'), std::string::npos);
  }
}

TEST(WidthRecurrence, Basics) {
  EXPECT_EQ(width_recurrence(1, 18.0), std::vector<double>{18.0});
  const auto w = width_recurrence(3, 18.0);
  ASSERT_EQ(w.size(), 3u);
  const double oracle = static_cast<double>(18.0L * oracle::phi() * oracle::phi() / 2.0L);
  EXPECT_LT(rel(w[2], oracle), 1e-9);
  EXPECT_NEAR(w[2], 23.5623059, 1e-6);
  EXPECT_THROW(width_recurrence(0, 18.0), std::domain_error);
}

TEST(WidthRecurrence, MatchesClosedForm) {
  const auto w = width_recurrence(25, 18.0);
  for (int i = 1; i <= 25; ++i) {
    EXPECT_LT(rel(w[i - 1], width_closed_form(i, 18.0)), 1e-12) << "i=" << i;
  }
}

TEST(HeightFor, PublishedRowOne) {
  EXPECT_LT(rel(height_for(Format::Figure, 18.0), 14.562306046), 1e-5);
  EXPECT_LT(rel(height_for(Format::Paysage, 18.0), 12.727922279), 1e-5);
  EXPECT_LT(rel(height_for(Format::Marine, 18.0), 11.124611685), 1e-5);
  EXPECT_THROW(height_for(Format::Figure, 0.0), std::domain_error);
}

TEST(StepRatios, MatchPublishedApproximations) {
  EXPECT_NEAR(step_ratio(), 1.144, 0.0005);
  EXPECT_NEAR(area_step_ratio(), 1.31, 0.005);
  EXPECT_LE(std::abs(step_ratio() * step_ratio() - area_step_ratio()),
            4 * std::numeric_limits<double>::epsilon() * area_step_ratio());
}

TEST(Generate, SingleRow) {
  const auto t = generate(18.0, 1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.provenance(), Provenance::Generated);
  EXPECT_EQ(t.row(1).width_cm, 18.0);
  EXPECT_NEAR(t.row(1).f_cm, 14.562, 1e-3);
  EXPECT_NEAR(t.row(1).p_cm, 12.728, 1e-3);
  EXPECT_NEAR(t.row(1).m_cm, 11.125, 1e-3);
  EXPECT_FALSE(t.row(1).point.has_value());
}

TEST(Generate, ThreeRowsFromTen) {
  const auto t = generate(10.0, 3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_LT(rel(t.row(k + 1).width_cm, static_cast<double>(oracle::width(10.0L, k))), 1e-14);
  }
  EXPECT_NEAR(t.row(2).width_cm, 11.441228, 1e-6);
  EXPECT_NEAR(t.row(3).width_cm, 13.090170, 1e-6);
  const double phi = static_cast<double>(oracle::phi());
  EXPECT_LT(rel(t.row(3).width_cm, 10.0 * phi * phi / 2.0), 1e-14);
}

TEST(Generate, PublishedTableWithLabels) {
  const auto t = generate(18.0, 25, oracle::kNewLabels);
  ASSERT_EQ(t.size(), 25u);
  for (const auto& g : golden::kFullPrecision) {
    const auto& r = t.row(static_cast<std::size_t>(g.no));
    EXPECT_LT(rel(r.width_cm, g.cells[0]), 1e-5) << "row " << g.no;
    EXPECT_LT(rel(r.f_cm, g.cells[1]), 1e-5) << "row " << g.no;
    EXPECT_LT(rel(r.p_cm, g.cells[2]), 1e-5) << "row " << g.no;
    EXPECT_LT(rel(r.m_cm, g.cells[3]), 1e-5) << "row " << g.no;
    if (g.point >= 0) {
      EXPECT_EQ(r.point, g.point);
    } else {
      EXPECT_FALSE(r.point.has_value());
    }
  }
}

TEST(Generate, RowInvariants) {
  const auto t = generate(18.0, 60);
  for (const auto& r : t.rows()) {
    EXPECT_GT(r.width_cm, r.f_cm);
    EXPECT_GT(r.f_cm, r.p_cm);
    EXPECT_GT(r.p_cm, r.m_cm);
    EXPECT_GT(r.m_cm, 0.0);
    EXPECT_LT(rel(r.width_cm / r.f_cm, target_for(Format::Figure)), 1e-12);
    EXPECT_LT(rel(r.width_cm / r.p_cm, target_for(Format::Paysage)), 1e-12);
    EXPECT_LT(rel(r.width_cm / r.m_cm, target_for(Format::Marine)), 1e-12);
  }
}

TEST(Generate, PreconditionErrors) {
  EXPECT_THROW(generate(0.0, 5), std::domain_error);
  EXPECT_THROW(generate(18.0, 0), std::domain_error);
  EXPECT_THROW(generate(18.0, 1001), std::domain_error);
  EXPECT_NO_THROW(generate(18.0, 1000));
  const std::vector<int> labels{0, 1, 2};
  EXPECT_THROW(generate(18.0, 2, labels), std::invalid_argument);
  EXPECT_NO_THROW(generate(18.0, 3, labels));
}

TEST(Generate, LargestTableStaysFinite) {
  const auto t = generate(18.0, 1000);
  EXPECT_TRUE(std::isfinite(t.row(1000).width_cm));
  EXPECT_LT(rel(t.row(1000).width_cm, width_closed_form(1000, 18.0)), 1e-15);
}

TEST(SizeTable, RejectsGappedIndices) {
  std::vector<SizeRow> rows{{1, std::nullopt, 2, 1.5, 1.4, 1.2}, {3, std::nullopt, 3, 2, 1.8, 1.6}};
  EXPECT_THROW(SizeTable(2.0, rows, Provenance::Imported), std::invalid_argument);
}

TEST(SizeTable, HeadKeepsPrefix) {
  const auto t = generate(18.0, 25);
  const auto h = t.head(5);
  EXPECT_EQ(h.size(), 5u);
  EXPECT_EQ(h.row(5), t.row(5));
  EXPECT_EQ(t.head(100).size(), 25u);
  EXPECT_THROW(t.row(26), std::out_of_range);
}
