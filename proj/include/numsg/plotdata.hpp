#pragma once

// CSV series behind the three figures: R1 against A* R2 on [0, 1], the gain
// G(b, u) for the caption values of b, and u_m(b), G(b, u_m(b)) on a log grid.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "numsg/bounds.hpp"
#include "numsg/error.hpp"

namespace numsg::plot {

inline constexpr double kFigure2B[] = {1.75, 0.85, 0.5, 0.35};

inline double default_step(int figure) { return figure == 3 ? 0.01 : 0.001; }

namespace detail {

inline std::int64_t intervals(double span, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw error(errc::domain_error, "step must be positive");
  const double n = span / step;
  if (n > 1e7) throw error(errc::domain_error, "step too small");
  return std::max<std::int64_t>(1, std::llround(n));
}

}  // namespace detail

/// z,R1,AstarR2,delta with z = i * step on [0, 1].
inline void figure1(std::ostream& out, double step) {
  const std::int64_t n = detail::intervals(1.0, step);
  out << "z,R1,AstarR2,delta\n";
  for (std::int64_t i = 0; i <= n; ++i) {
    const double z = std::min(1.0, static_cast<double>(i) * step);
    const auto r = bounds::r_funcs(z);
    out << fmt::format("{},{},{},{}\n", z, r.r1, r.a_r2, r.delta);
  }
}

/// b,u,G over u in [0, 1] for each caption value of b.
inline void figure2(std::ostream& out, double step) {
  const std::int64_t n = detail::intervals(1.0, step);
  out << "b,u,G\n";
  for (double b : kFigure2B) {
    for (std::int64_t i = 0; i <= n; ++i) {
      const double u = std::min(1.0, static_cast<double>(i) * step);
      out << fmt::format("{},{},{}\n", b, u, bounds::big_g(b, u));
    }
  }
}

/// b,um,Gm for log10 b from -2 to 2 in increments of `step`.
inline void figure3(std::ostream& out, double step) {
  const std::int64_t n = detail::intervals(4.0, step);
  out << "b,um,Gm\n";
  for (std::int64_t i = 0; i <= n; ++i) {
    const double e = std::min(2.0, -2.0 + static_cast<double>(i) * step);
    const double b = std::pow(10.0, e);
    const double u = bounds::u_m(b);
    out << fmt::format("{},{},{}\n", b, u, bounds::big_g(b, u));
  }
}

inline void write(std::ostream& out, int figure, double step) {
  switch (figure) {
    case 1: figure1(out, step); break;
    case 2: figure2(out, step); break;
    case 3: figure3(out, step); break;
    default: throw error(errc::domain_error, "figure must be 1, 2 or 3");
  }
}

}  // namespace numsg::plot
