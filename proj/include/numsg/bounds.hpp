#pragma once

// Analytic lower bounds for the largest syzygy degree g of symmetric (not
// complete intersection) semigroups, and the Betti-number windows.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "numsg/error.hpp"

namespace numsg::bounds {

struct Constants {
  double a_star = 0.9682;
  double alpha = 1.0 - a_star * a_star;
  double z_star = 0.8333;
  double v1 = (9.0 - std::sqrt(41.0)) / 20.0;
  double v2 = (7.0 * std::sqrt(41.0) - 3.0) / (500.0 * std::sqrt(41.0));
  double w = (411.0 + 41.0 * std::sqrt(41.0)) / 12500.0;
};

inline const Constants& constants() {
  static const Constants c{};
  return c;
}

struct RValues {
  double r1 = 0;
  double a_r2 = 0;  // A* R2(z)
  double delta = 0;  // R1 - A* R2
};

/// R1(z) = z^2 sqrt(10 - 15z + 6z^2), R2(z) = z^2 (3 - 2z) on [0, 1].
inline RValues r_funcs(double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw error(errc::domain_error, "z must lie in [0, 1]");
  const double z2 = z * z;
  RValues v;
  v.r1 = z2 * std::sqrt(10.0 - 15.0 * z + 6.0 * z2);
  v.a_r2 = constants().a_star * z2 * (3.0 - 2.0 * z);
  v.delta = v.r1 - v.a_r2;
  return v;
}

/// G(b, u) = u/(u+b) (1-u)^2 (1-2u)^2.
inline double big_g(double b, double u) {
  if (!(b > 0.0)) throw error(errc::domain_error, "b must be positive");
  if (!(u >= 0.0 && u <= 1.0)) throw error(errc::domain_error, "u must lie in [0, 1]");
  const double a = 1.0 - u;
  const double c = 1.0 - 2.0 * u;
  return u / (u + b) * a * a * c * c;
}

/// p(u) = 8u^3 + 2(5b-3)u^2 - 9bu + b; its root in (0, 1/2) maximizes G(b, .).
inline double maximizer_cubic(double b, double u) {
  return ((8.0 * u + 2.0 * (5.0 * b - 3.0)) * u - 9.0 * b) * u + b;
}

/// p(0) = b > 0 and p(1/2) = -(2b+1)/2 < 0 bracket the unique root in
/// (0, 1/2); bisection to 1e-12, then Newton steps kept inside the bracket.
inline double u_m(double b) {
  if (!(b > 0.0)) throw error(errc::domain_error, "b must be positive");
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (maximizer_cubic(b, mid) > 0.0 ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double slope = (24.0 * u + 4.0 * (5.0 * b - 3.0)) * u - 9.0 * b;
    if (slope == 0.0) break;
    const double next = u - maximizer_cubic(b, u) / slope;
    if (!(next > lo - 1e-12 && next < hi + 1e-12)) break;
    if (std::abs(maximizer_cubic(b, next)) > std::abs(maximizer_cubic(b, u))) break;
    u = next;
  }
  return u;
}

/// K(b, A*) = alpha + A*^2 G(b, u_m(b)).
inline double k_of_b(double b) {
  const auto& c = constants();
  return c.alpha + c.a_star * c.a_star * big_g(b, u_m(b));
}

struct TheoremBound {
  double b6 = 0;
  double b = 0;
  double u_m = 0;
  double g_max = 0;  // G(b, u_m)
  double k = 0;
  double lambda6 = 0;
  double g6 = 0;
};

/// g6 = lambda6 * pi6^{1/5}, lambda6 = (360 / (B6 K(b, A*)))^{1/5}, b = B6 / beta1.
inline TheoremBound bound_g6(double pi6, std::int64_t beta1, std::int64_t beta2) {
  if (beta1 < 1) throw error(errc::domain_error, "beta1 must be positive");
  if (beta2 < beta1 + 1) {
    throw error(errc::lemma1_violation,
                "beta2 = " + std::to_string(beta2) + " < beta1 + 1 = " + std::to_string(beta1 + 1));
  }
  if (!(pi6 > 0.0)) throw error(errc::domain_error, "pi6 must be positive");
  TheoremBound t;
  t.b6 = static_cast<double>(beta2 - beta1 + 1) / 2.0;
  t.b = t.b6 / static_cast<double>(beta1);
  t.u_m = u_m(t.b);
  t.g_max = big_g(t.b, t.u_m);
  t.k = constants().alpha + constants().a_star * constants().a_star * t.g_max;
  t.lambda6 = std::pow(360.0 / (t.b6 * t.k), 0.2);
  t.g6 = t.lambda6 * std::pow(pi6, 0.2);
  return t;
}

/// q6 = (360 / (alpha B6))^{1/5} pi6^{1/5}.
inline double bound_q6(double pi6, std::int64_t two_b6) {
  if (two_b6 < 3) throw error(errc::domain_error, "2 B6 must be >= 3");
  if (!(pi6 > 0.0)) throw error(errc::domain_error, "pi6 must be positive");
  const double b6 = static_cast<double>(two_b6) / 2.0;
  return std::pow(360.0 / (constants().alpha * b6), 0.2) * std::pow(pi6, 0.2);
}

struct ReferenceBounds {
  double gtilde = 0;  // ((m-1)!)^{1/(m-1)} pi^{1/(m-1)}
  double gbar = 0;    // (m-1) pi^{1/(m-1)}
  std::optional<double> lambda;           // lambda4 or lambda5
  std::optional<double> lambda_bound;     // lambda * pi^{1/(m-1)}
};

inline double lambda4() { return std::cbrt(25.0); }

inline double lambda5(std::int64_t beta) {
  if (beta < 2) throw error(errc::domain_error, "lambda5 needs beta >= 2");
  const double bt = static_cast<double>(beta);
  return std::pow(192.0 * (bt - 1.0) / bt, 0.25);
}

inline ReferenceBounds reference_bounds(int m, double pi, std::optional<std::int64_t> beta = std::nullopt) {
  if (m < 4 || m > 6) throw error(errc::bad_edim, "reference bounds exist for m in {4,5,6}");
  if (!(pi > 0.0)) throw error(errc::domain_error, "pi must be positive");
  const double root = std::pow(pi, 1.0 / (m - 1));
  double factorial = 1.0;
  for (int k = 2; k <= m - 1; ++k) factorial *= k;
  ReferenceBounds r;
  r.gtilde = std::pow(factorial, 1.0 / (m - 1)) * root;
  r.gbar = (m - 1) * root;
  if (m == 4) {
    r.lambda = lambda4();
  } else if (m == 5) {
    if (!beta) throw error(errc::domain_error, "m = 5 requires beta");
    r.lambda = lambda5(*beta);
  }
  if (r.lambda) r.lambda_bound = *r.lambda * root;
  return r;
}

struct Verdict {
  bool lower = false;
  bool upper = false;
  bool pass() const { return lower && upper; }
};

struct BettiWindows {
  double k = 0;
  double b6 = 0;
  Verdict b6_window;    // 72/(625 K) < B6 < 3/K
  Verdict gap_window;    // 1 < beta2 - beta1 < 6/K - 1
  Verdict beta1_window;  // 5 < beta1 < 2(4 d1 - 1)
  double gap_upper = 0;
};

inline BettiWindows betti_window(std::int64_t beta1, std::int64_t beta2, std::int64_t d1) {
  if (beta1 < 1) throw error(errc::domain_error, "beta1 must be positive");
  BettiWindows w;
  w.b6 = static_cast<double>(beta2 - beta1 + 1) / 2.0;
  // B6 <= 0 has no b in the domain of K; the windows then fail on the left.
  w.k = w.b6 > 0 ? k_of_b(w.b6 / static_cast<double>(beta1)) : 1.0;
  w.b6_window = {72.0 / (625.0 * w.k) < w.b6, w.b6 < 3.0 / w.k};
  w.gap_upper = 6.0 / w.k - 1.0;
  const auto diff = static_cast<double>(beta2 - beta1);
  w.gap_window = {1.0 < diff, diff < w.gap_upper};
  w.beta1_window = {beta1 > 5, beta1 < 2 * (4 * d1 - 1)};
  return w;
}

}  // namespace numsg::bounds
