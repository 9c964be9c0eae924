#pragma once

// The twelve reference semigroups V1..V12 with their published invariants
// and bounds, and a cell-by-cell recomputation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "numsg/analysis.hpp"

namespace numsg::table1 {

struct GoldRow {
  const char* name;
  std::array<std::int64_t, 6> generators;
  std::int64_t beta1;
  std::int64_t beta2;
  double b6;
  std::int64_t g;
  std::optional<double> g6w2;
  std::optional<double> g6w;
  double g6;
  double gtilde6;
};

// clang-format off
inline const std::array<GoldRow, 12>& gold() {
  static const std::array<GoldRow, 12> rows{{
      {"V1",  {7, 9, 11, 12, 13, 15},   13, 31, 9.5, 84,  std::nullopt, std::nullopt, 55.0,  45.5},
      {"V2",  {7, 9, 10, 11, 12, 13},   14, 35, 11,  77,  std::nullopt, std::nullopt, 49.6,  42.0},
      {"V3",  {12, 13, 14, 15, 17, 19}, 10, 19, 5,   125, std::nullopt, std::nullopt, 88.0,  66.2},
      {"V4",  {12, 13, 14, 15, 18, 19}, 10, 22, 6.5, 126, std::nullopt, std::nullopt, 86.5,  66.9},
      {"V5",  {12, 20, 28, 30, 38, 41}, 8,  19, 6,   256, std::nullopt, 240.4,        173.3, 130.4},
      {"V6",  {12, 20, 28, 38, 46, 47}, 9,  18, 5,   292, std::nullopt, 271.2,        196.0, 146.0},
      {"V7",  {14, 24, 26, 36, 46, 49}, 10, 23, 7,   302, std::nullopt, 286.0,        196.6, 153.4},
      {"V8",  {38, 46, 58, 62, 74, 79}, 14, 37, 12,  638, std::nullopt, 609.2,        395.4, 338.0},
      {"V9",  {30, 33, 36, 37, 42, 48}, 7,  16, 5,   387, 385.6,        359.8,        274.4, 199.9},
      {"V10", {42, 45, 48, 54, 59, 78}, 7,  16, 5,   603, 595.3,        554.8,        420.8, 306.5},
      {"V11", {40, 42, 48, 54, 71, 78}, 7,  16, 5,   598, 590.3,        548.0,        426.6, 310.7},
      {"V12", {46, 48, 75, 78, 90, 102}, 7, 16, 5,   816, 811.2,        746.9,        586.6, 427.2},
  }};
  return rows;
}
// clang-format on

/// Real-valued cell comparison: the default allows the published one-decimal
/// rounding, max(0.15, 0.5% of the value); an explicit tolerance is absolute.
struct Tolerance {
  std::optional<double> absolute;

  bool accepts(double computed, double published) const {
    const double diff = std::abs(computed - published);
    if (absolute) return diff <= *absolute;
    return diff <= std::max(0.15, 0.005 * std::abs(published));
  }
};

struct Cell {
  std::string column;
  std::string published;
  std::string computed;
  bool pass = false;
};

struct RowResult {
  std::string name;
  std::vector<std::int64_t> generators;
  std::vector<Cell> cells;

  bool pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.pass; });
  }
};

namespace detail {

inline std::string fixed1(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

inline std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline Cell int_cell(const char* column, std::int64_t published, std::optional<std::int64_t> computed) {
  return {column, std::to_string(published), computed ? std::to_string(*computed) : "null",
          computed && *computed == published};
}

inline Cell real_cell(const char* column, std::optional<double> published, std::optional<double> computed,
                      const Tolerance& tol) {
  if (!published) return {column, "-", computed ? fixed3(*computed) : "-", true};
  return {column, fixed1(*published), computed ? fixed3(*computed) : "null",
          computed && tol.accepts(*computed, *published)};
}

}  // namespace detail

inline RowResult evaluate(const GoldRow& row, const Tolerance& tol) {
  const Semigroup s = Semigroup::make(std::span<const std::int64_t>(row.generators));
  const AnalysisReport rep = analyze(s);
  RowResult out{row.name, s.generators(), {}};

  std::optional<std::int64_t> beta1, beta2, two_b6, g;
  if (rep.syzygy) {
    beta1 = rep.syzygy->beta1;
    beta2 = rep.syzygy->beta2;
    two_b6 = rep.syzygy->two_b6;
    g = rep.syzygy->g;
  }
  std::optional<double> g6w2, g6w, g6, gtilde6;
  if (rep.bounds) {
    g6w2 = rep.bounds->g6w2;
    g6w = rep.bounds->g6w;
    g6 = rep.bounds->theorem.g6;
    gtilde6 = rep.bounds->gtilde6;
  }
  const auto gold_two_b6 = static_cast<std::int64_t>(std::lround(2.0 * row.b6));
  out.cells.push_back(detail::int_cell("beta1", row.beta1, beta1));
  out.cells.push_back(detail::int_cell("beta2", row.beta2, beta2));
  out.cells.push_back(detail::int_cell("two_b6", gold_two_b6, two_b6));
  out.cells.push_back(detail::int_cell("g", row.g, g));
  out.cells.push_back(detail::real_cell("g6w2", row.g6w2, g6w2, tol));
  out.cells.push_back(detail::real_cell("g6w", row.g6w, g6w, tol));
  out.cells.push_back(detail::real_cell("g6", row.g6, g6, tol));
  out.cells.push_back(detail::real_cell("gtilde6", row.gtilde6, gtilde6, tol));
  return out;
}

inline std::vector<RowResult> evaluate_all(const Tolerance& tol = {}) {
  std::vector<RowResult> rows;
  for (const GoldRow& row : gold()) rows.push_back(evaluate(row, tol));
  return rows;
}

inline json to_json(const std::vector<RowResult>& rows) {
  json out = json::array();
  for (const RowResult& r : rows) {
    json cells = json::array();
    for (const Cell& c : r.cells) {
      cells.push_back(json{{"column", c.column}, {"published", c.published}, {"computed", c.computed}, {"pass", c.pass}});
    }
    out.push_back(json{{"name", r.name}, {"generators", r.generators}, {"pass", r.pass()}, {"cells", cells}});
  }
  return out;
}

}  // namespace numsg::table1
