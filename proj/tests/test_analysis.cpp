#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "numsg/analysis.hpp"
#include "numsg/plotdata.hpp"
#include "numsg/scan.hpp"
#include "numsg/table1.hpp"

using namespace numsg;

namespace {

std::vector<std::string> keys(const json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header) {
  std::istringstream in(text);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::string csv(int figure, double step) {
  std::ostringstream out;
  plot::write(out, figure, step);
  return out.str();
}

}  // namespace

TEST(Report, V1Json) {
  const auto j = to_json(analyze(Semigroup::make({7, 9, 11, 12, 13, 15})));
  EXPECT_EQ(keys(j), (std::vector<std::string>{"raw_generators", "generators", "multiplicity", "edim", "sigma1", "pi",
                                                "frobenius", "genus", "symmetric", "complete_intersection",
                                                "presentation_beta1", "beta1", "beta2", "two_b6", "g", "x", "y",
                                                "cancelled_terms", "identities", "bounds", "windows", "decomposition",
                                                "alternative_gluings"}));
  EXPECT_EQ(j["frobenius"], 17);
  EXPECT_EQ(j["beta1"], 13);
  EXPECT_EQ(j["beta2"], 31);
  EXPECT_EQ(j["g"], 84);
  EXPECT_EQ(j["pi"], "1621620");
  EXPECT_TRUE(j["identities"]["all_zero"].get<bool>());
  EXPECT_TRUE(j["bounds"]["g6w"].is_null());
  EXPECT_TRUE(j["decomposition"].is_null());
  EXPECT_NEAR(j["bounds"]["g6"].get<double>(), 55.0, 0.15);
}

TEST(Report, NonSymmetricHasNullBounds) {
  const auto r = analyze(Semigroup::make({6, 7, 8, 9, 10, 11}));
  EXPECT_FALSE(r.symmetric);
  EXPECT_FALSE(r.bounds);
  const auto j = to_json(r);
  EXPECT_TRUE(j["bounds"].is_null());
  EXPECT_TRUE(j["windows"].is_null());
  EXPECT_TRUE(j["beta1"].is_null());
  EXPECT_TRUE(j["identities"].is_null());
}

TEST(Report, LowerEdimHasNoSyzygyData) {
  const auto r = analyze(Semigroup::make({3, 5, 7}));
  EXPECT_FALSE(r.syzygy);
  EXPECT_FALSE(r.decomposition);
  EXPECT_EQ(r.frobenius, 4);
}

TEST(Report, GluedReportCarriesDecomposition) {
  const auto j = to_json(analyze(Semigroup::make({30, 33, 36, 37, 42, 48})));
  EXPECT_EQ(j["decomposition"]["kind"], "W2");
  EXPECT_EQ(j["decomposition"]["inner4"], (std::vector<std::int64_t>{5, 6, 7, 8}));
  EXPECT_NEAR(j["bounds"]["g6w2"].get<double>(), 385.6, 0.15);
  EXPECT_FALSE(j["alternative_gluings"].empty());
}

TEST(Report, Deterministic) {
  const auto s = Semigroup::make({12, 20, 28, 30, 38, 41});
  EXPECT_EQ(to_json(analyze(s)).dump(), to_json(analyze(s)).dump());
}

class Table1Row : public ::testing::TestWithParam<int> {};

TEST_P(Table1Row, ReproducesPublishedCells) {
  const auto& row = table1::gold()[static_cast<std::size_t>(GetParam())];
  const auto result = table1::evaluate(row, {});
  for (const auto& c : result.cells) {
    EXPECT_TRUE(c.pass) << row.name << " " << c.column << ": computed " << c.computed << ", published " << c.published;
  }
}

INSTANTIATE_TEST_SUITE_P(V, Table1Row, ::testing::Range(0, 12),
                         [](const auto& info) { return std::string(table1::gold()[info.param].name); });

TEST(Table1, StrictToleranceFailsRealCellsOnly) {
  const auto rows = table1::evaluate_all(table1::Tolerance{1e-6});
  int real_failures = 0;
  for (const auto& r : rows) {
    for (const auto& c : r.cells) {
      if (c.column == "g6" || c.column == "gtilde6") real_failures += !c.pass;
    }
  }
  EXPECT_GT(real_failures, 12);
  const auto& v1 = rows.front();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(v1.cells[i].pass);
}

TEST(PlotData, Figure1) {
  std::string header;
  const auto text = csv(1, 0.001);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const auto rows = parse_csv(text, header);
  EXPECT_EQ(header, "z,R1,AstarR2,delta");
  ASSERT_EQ(rows.size(), 1001u);
  EXPECT_DOUBLE_EQ(rows.back()[0], 1.0);
  std::size_t arg = 100;
  for (std::size_t i = 100; i < rows.size(); ++i) {
    if (rows[i][3] < rows[arg][3]) arg = i;
  }
  EXPECT_NEAR(rows[arg][0], 0.833, 0.005);
}

TEST(PlotData, Figure2PeaksAtCaptionValues) {
  std::string header;
  const auto rows = parse_csv(csv(2, 0.001), header);
  EXPECT_EQ(header, "b,u,G");
  EXPECT_EQ(rows.size(), 4u * 1001u);
  const std::map<double, double> caption{{1.75, 0.125}, {0.85, 0.117}, {0.5, 0.112}, {0.35, 0.107}};
  std::map<double, std::pair<double, double>> best;
  for (const auto& r : rows) {
    auto& [u, g] = best[r[0]];
    if (r[2] > g) {
      u = r[1];
      g = r[2];
    }
  }
  for (const auto& [b, u] : caption) EXPECT_NEAR(best.at(b).first, u, 0.003) << b;
}

TEST(PlotData, Figure3Monotone) {
  std::string header;
  const auto rows = parse_csv(csv(3, 0.01), header);
  EXPECT_EQ(header, "b,um,Gm");
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_NEAR(rows.front()[0], 0.01, 1e-12);
  EXPECT_NEAR(rows.back()[0], 100.0, 1e-9);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i][2], rows[i - 1][2]);
}

TEST(PlotData, RejectsBadArguments) {
  std::ostringstream out;
  EXPECT_THROW(plot::write(out, 4, 0.1), error);
  EXPECT_THROW(plot::write(out, 1, 0.0), error);
  EXPECT_THROW(plot::write(out, 1, -1.0), error);
}

TEST(Scan, ReferenceListHasNoViolations) {
  std::vector<std::vector<std::int64_t>> lists;
  for (const auto& row : table1::gold()) lists.emplace_back(row.generators.begin(), row.generators.end());
  const auto res = scan::scan_lists(lists);
  EXPECT_EQ(res.summary.analyzed, 12u);
  EXPECT_EQ(res.summary.theorem_violations, 0u);
  EXPECT_EQ(res.summary.window_violations, 0u);
}

TEST(Scan, GluedIsDeterministicAcrossThreadCounts) {
  scan::Options one{50, 1, 60, 1};
  scan::Options four{50, 1, 60, 4};
  const auto a = scan::scan_glued(one);
  const auto b = scan::scan_glued(four);
  EXPECT_EQ(scan::to_json(a).dump(), scan::to_json(b).dump());
  EXPECT_EQ(a.summary.analyzed, 50u);
  EXPECT_EQ(a.summary.theorem_violations, 0u);
  for (const auto& r : a.records) {
    EXPECT_GT(static_cast<double>(r.g), r.g6);
    EXPECT_GE(r.beta2, r.beta1 + 1);
  }
  scan::Options other{50, 2, 60, 4};
  EXPECT_NE(scan::to_json(scan::scan_glued(other)).dump(), scan::to_json(a).dump());
}

TEST(Scan, FileErrors) {
  const std::string empty = ::testing::TempDir() + "numsg_empty.txt";
  std::ofstream(empty) << "# nothing here\n\n";
  try {
    scan::scan_file(empty);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::no_candidates_found);
  }
  try {
    scan::scan_file(::testing::TempDir() + "numsg_missing_file.txt");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::file_not_found);
  }
  std::remove(empty.c_str());
}

TEST(Scan, FileSkipsNonCandidates) {
  const auto res = scan::scan_lists({{6, 7, 8, 9, 10, 11}, {3, 5}, {7, 9, 11, 12, 13, 15}});
  EXPECT_EQ(res.summary.analyzed, 1u);
  EXPECT_EQ(res.summary.skipped, 2u);
  EXPECT_EQ(*res.records[0].skipped, "not symmetric");
}
