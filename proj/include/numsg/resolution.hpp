#pragma once

// Hilbert-series numerator, syzygy degrees and the power-sum identities for
// symmetric semigroups of embedding dimension six.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "numsg/arith.hpp"
#include "numsg/error.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

inline constexpr std::int64_t kMaxNumeratorDegree = 1'000'000;

/// Q(t) = H(S;t) * prod(1 - t^{d_i}), stored densely as c_0..c_g.
struct NumeratorPoly {
  std::int64_t g = 0;
  std::vector<std::int64_t> coeffs;

  std::int64_t operator[](std::int64_t d) const {
    return (d < 0 || d > g) ? 0 : coeffs[static_cast<std::size_t>(d)];
  }
  friend bool operator==(const NumeratorPoly&, const NumeratorPoly&) = default;
};

/// Syzygy degrees as they appear in Q6(t):
///   Q6 = 1 - sum t^x + sum t^y - sum t^{g-y} + sum t^{g-x} - t^g.
/// `x` and `y` are the numerator-visible degrees: presentation degrees that
/// coincide with a term of opposite sign have been cancelled, which is the
/// reading the Betti counts beta1/beta2 refer to.
struct SyzygyProfile {
  std::int64_t g = 0;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  std::int64_t beta1 = 0;
  std::int64_t beta2 = 0;
  std::int64_t two_b6 = 0;  // beta2 - beta1 + 1
  // Size of the minimal presentation before cancellation.
  std::int64_t presentation_beta1 = 0;
  std::int64_t cancelled = 0;

  double b6() const { return static_cast<double>(two_b6) / 2.0; }
};

/// Exact residuals of the power-sum identities; every entry must be zero.
struct IdentityReport {
  // raw[r-1]: sum x^r - sum y^r + sum (g-y)^r - sum (g-x)^r + g^r minus its
  // target (0 for r<=4, 120*pi6 for r=5).
  std::array<i128, 5> raw{};
  i128 raw_r5_sum = 0;
  // Reduced identities, multiplied by 2 to keep B6 integral.
  i128 linear = 0;
  i128 cubic = 0;
  i128 quintic = 0;

  bool all_zero() const {
    return std::all_of(raw.begin(), raw.end(), [](i128 v) { return v == 0; }) && linear == 0 && cubic == 0 && quintic == 0;
  }
};

inline NumeratorPoly hilbert_numerator(const Semigroup& s) {
  const std::int64_t g = frobenius(s) + s.sigma1();
  if (g > kMaxNumeratorDegree) {
    throw error(errc::degree_overflow, "numerator degree " + std::to_string(g) + " exceeds 10^6");
  }
  NumeratorPoly q{g, std::vector<std::int64_t>(static_cast<std::size_t>(g + 1))};
  for (std::int64_t k = 0; k <= g; ++k) q.coeffs[static_cast<std::size_t>(k)] = s.contains(k) ? 1 : 0;
  for (std::int64_t d : s.generators()) {
    for (std::int64_t k = g; k >= d; --k) {
      q.coeffs[static_cast<std::size_t>(k)] -= q.coeffs[static_cast<std::size_t>(k - d)];
    }
  }
  return q;
}

/// True iff c_d = (-1)^(m-1) c_{g-d} for all d, the Gorenstein duality of
/// the numerator (antisymmetry for even m).
inline bool has_dual_symmetry(const NumeratorPoly& q, std::size_t edim) {
  const std::int64_t sign = (edim % 2 == 0) ? -1 : 1;
  for (std::int64_t d = 0; d <= q.g; ++d) {
    if (q[d] != sign * q[q.g - d]) return false;
  }
  return true;
}

namespace detail {

struct DisjointSets {
  std::array<int, kMaxEdim> parent{};
  explicit DisjointSets(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::vector<std::int64_t> degree_counts(std::span<const std::int64_t> degrees, std::int64_t g) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g + 1));
  for (std::int64_t d : degrees) {
    if (d < 0 || d > g) throw error(errc::cancellation_ambiguity, "degree " + std::to_string(d) + " outside [0, g]");
    ++counts[static_cast<std::size_t>(d)];
  }
  return counts;
}

inline std::vector<std::int64_t> expand(const std::vector<std::int64_t>& counts) {
  std::vector<std::int64_t> out;
  for (std::size_t d = 0; d < counts.size(); ++d) out.insert(out.end(), static_cast<std::size_t>(counts[d]), std::int64_t(d));
  return out;
}

inline std::int64_t count_with_multiplicity(const std::vector<std::int64_t>& counts) {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

}  // namespace detail

/// Degrees of a minimal presentation (first syzygies), ascending with
/// multiplicity. Candidates are w + d_i for w in Ap(S, d1); a candidate n
/// contributes (components - 1) copies, where the graph joins generators
/// d_i, d_j (both with n - d_i in S) whenever n - d_i - d_j is in S.
inline std::vector<std::int64_t> first_syzygy_degrees(const Semigroup& s) {
  const auto& gens = s.generators();
  const int m = static_cast<int>(gens.size());
  std::vector<std::int64_t> candidates;
  candidates.reserve(s.apery().values.size() * gens.size());
  for (std::int64_t w : s.apery().values) {
    for (std::int64_t d : gens) candidates.push_back(w + d);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::int64_t> degrees;
  for (std::int64_t n : candidates) {
    std::array<bool, kMaxEdim> vertex{};
    int vertices = 0;
    for (int i = 0; i < m; ++i) {
      vertex[i] = s.contains(n - gens[i]);
      vertices += vertex[i];
    }
    if (vertices < 2) continue;
    detail::DisjointSets sets(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (vertex[i] && vertex[j] && s.contains(n - gens[i] - gens[j])) sets.unite(i, j);
      }
    }
    int components = 0;
    for (int i = 0; i < m; ++i) components += vertex[i] && sets.find(i) == i;
    degrees.insert(degrees.end(), static_cast<std::size_t>(components - 1), n);
  }
  return degrees;
}

inline bool is_complete_intersection(const Semigroup& s) {
  return first_syzygy_degrees(s).size() + 1 == s.edim();
}

/// Recovers second-syzygy degrees of an edim-6 symmetric numerator from the
/// first-syzygy degrees. With s_d := c_d + #x(d) - #x(g-d) - [d=0] + [d=g]
/// the y multiplicity at d is max(s_d, 0). The decomposition is rebuilt and
/// must reproduce q exactly.
inline std::vector<std::int64_t> recover_second_syzygies(const NumeratorPoly& q, std::span<const std::int64_t> x,
                                                         std::int64_t multiplicity) {
  const std::int64_t g = q.g;
  const auto cx = detail::degree_counts(x, g);
  auto at = [&](const std::vector<std::int64_t>& c, std::int64_t d) { return (d < 0 || d > g) ? 0 : c[static_cast<std::size_t>(d)]; };

  std::vector<std::int64_t> cy(static_cast<std::size_t>(g + 1));
  for (std::int64_t d = 0; d <= g; ++d) {
    const std::int64_t sd = q[d] + at(cx, d) - at(cx, g - d) - (d == 0) + (d == g);
    cy[static_cast<std::size_t>(d)] = std::max<std::int64_t>(sd, 0);
  }
  for (std::int64_t d = 0; d <= g; ++d) {
    const std::int64_t rebuilt =
        (d == 0) - at(cx, d) + at(cy, d) - at(cy, g - d) + at(cx, g - d) - (d == g);
    if (rebuilt != q[d]) {
      throw error(errc::cancellation_ambiguity, "numerator rebuilt from (x, y, g) differs at degree " + std::to_string(d));
    }
    if (at(cy, d) > 0 && (d < 2 * multiplicity || d >= g)) {
      throw error(errc::cancellation_ambiguity, "recovered second-syzygy degree " + std::to_string(d) + " outside [2 d1, g)");
    }
  }
  return detail::expand(cy);
}

inline std::vector<std::int64_t> second_syzygy_degrees(const Semigroup& s, const NumeratorPoly& q,
                                                       std::span<const std::int64_t> x) {
  if (s.edim() != 6) throw error(errc::wrong_edim, "second-syzygy recovery needs edim 6");
  if (!is_symmetric(s)) throw error(errc::not_symmetric, to_string(s) + " is not symmetric");
  return recover_second_syzygies(q, x, s.multiplicity());
}

/// Numerator-visible syzygy profile of a symmetric edim-6 semigroup.
inline SyzygyProfile syzygy_profile(const Semigroup& s) {
  const NumeratorPoly q = hilbert_numerator(s);
  const std::vector<std::int64_t> x_raw = first_syzygy_degrees(s);
  const std::vector<std::int64_t> y_raw = second_syzygy_degrees(s, q, x_raw);
  const std::int64_t g = q.g;

  auto cx = detail::degree_counts(x_raw, g);
  auto cy = detail::degree_counts(y_raw, g);
  std::int64_t cancelled = 0;
  // -t^x against +t^y at the same degree (and their duals g-x, g-y).
  for (std::int64_t d = 0; d <= g; ++d) {
    auto& a = cx[static_cast<std::size_t>(d)];
    auto& b = cy[static_cast<std::size_t>(d)];
    const std::int64_t k = std::min(a, b);
    a -= k;
    b -= k;
    cancelled += k;
  }
  // -t^x against +t^{g-x'} when x + x' = g.
  for (std::int64_t d = 0; 2 * d <= g; ++d) {
    auto& a = cx[static_cast<std::size_t>(d)];
    if (2 * d == g) {
      cancelled += a;
      a = 0;
      continue;
    }
    auto& b = cx[static_cast<std::size_t>(g - d)];
    const std::int64_t k = std::min(a, b);
    a -= k;
    b -= k;
    cancelled += 2 * k;
  }

  SyzygyProfile p;
  p.g = g;
  p.x = detail::expand(cx);
  p.y = detail::expand(cy);
  p.beta1 = static_cast<std::int64_t>(p.x.size());
  p.beta2 = static_cast<std::int64_t>(p.y.size());
  p.two_b6 = p.beta2 - p.beta1 + 1;
  p.presentation_beta1 = static_cast<std::int64_t>(x_raw.size());
  p.cancelled = cancelled;
  return p;
}

/// First Betti number as read off the numerator (presentation degrees that
/// cancel against a term of opposite sign are not counted). Used for the
/// lower-dimensional components of gluings.
inline std::int64_t visible_beta1(const Semigroup& s) {
  if (s.edim() == 6 && is_symmetric(s)) return syzygy_profile(s).beta1;
  const std::vector<std::int64_t> x = first_syzygy_degrees(s);
  if (s.edim() == 5 && is_symmetric(s)) {
    // Q5 = 1 - sum t^x + sum t^y - sum t^{g-x} + t^g with a self-dual y set.
    const NumeratorPoly q = hilbert_numerator(s);
    const std::int64_t g = q.g;
    const auto cx = detail::degree_counts(x, g);
    std::int64_t hidden = 0;
    for (std::int64_t d = 0; d <= g; ++d) {
      const std::int64_t cy = q[d] + cx[static_cast<std::size_t>(d)] + cx[static_cast<std::size_t>(g - d)] - (d == 0) - (d == g);
      if (cy < 0) throw error(errc::cancellation_ambiguity, "negative second-syzygy count at degree " + std::to_string(d));
      hidden += std::min(cy, cx[static_cast<std::size_t>(d)]);
    }
    return static_cast<std::int64_t>(x.size()) - hidden;
  }
  if (s.edim() == 4 && is_symmetric(s)) {
    // Q4 = 1 - sum t^x + sum t^{g-x} - t^g.
    const std::int64_t g = frobenius(s) + s.sigma1();
    auto cx = detail::degree_counts(x, g);
    std::int64_t hidden = 0;
    for (std::int64_t d = 0; 2 * d <= g; ++d) {
      if (2 * d == g) {
        hidden += cx[static_cast<std::size_t>(d)];
        continue;
      }
      hidden += 2 * std::min(cx[static_cast<std::size_t>(d)], cx[static_cast<std::size_t>(g - d)]);
    }
    return static_cast<std::int64_t>(x.size()) - hidden;
  }
  return static_cast<std::int64_t>(x.size());
}

/// Rebuilds Q6(t) from a profile.
inline NumeratorPoly rebuild_numerator(const SyzygyProfile& p) {
  NumeratorPoly q{p.g, std::vector<std::int64_t>(static_cast<std::size_t>(p.g + 1))};
  auto add = [&](std::int64_t d, std::int64_t v) { q.coeffs[static_cast<std::size_t>(d)] += v; };
  add(0, 1);
  add(p.g, -1);
  for (std::int64_t x : p.x) {
    add(x, -1);
    add(p.g - x, 1);
  }
  for (std::int64_t y : p.y) {
    add(y, 1);
    add(p.g - y, -1);
  }
  return q;
}

inline IdentityReport verify_power_identities(const SyzygyProfile& p, u128 pi6) {
  if (p.g > kMaxNumeratorDegree || p.beta1 > 1000 || p.beta2 > 1000) {
    throw error(errc::overflow, "identity check limited to g <= 10^6 and beta <= 10^3");
  }
  if (pi6 > static_cast<u128>(std::numeric_limits<i128>::max())) throw error(errc::overflow, "pi6 exceeds 128 bits");
  const i128 g = p.g;
  const i128 pi = static_cast<i128>(pi6);
  IdentityReport rep;

  for (int r = 1; r <= 5; ++r) {
    i128 sum = checked_pow(g, r);
    for (std::int64_t x : p.x) sum = checked_sub(checked_add(sum, checked_pow(x, r)), checked_pow(g - x, r));
    for (std::int64_t y : p.y) sum = checked_add(checked_sub(sum, checked_pow(y, r)), checked_pow(g - y, r));
    if (r == 5) {
      rep.raw_r5_sum = sum;
      sum = checked_sub(sum, checked_mul(120, pi));
    }
    rep.raw[static_cast<std::size_t>(r - 1)] = sum;
  }

  auto cubic_weight = [&](i128 v) { return checked_mul(checked_pow(v, 2), 3 * g - 2 * v); };
  auto quintic_weight = [&](i128 v) {
    const i128 inner = checked_add(checked_sub(checked_mul(10, g * g), checked_mul(15 * g, v)), checked_mul(6, v * v));
    return checked_mul(checked_pow(v, 3), inner);
  };

  const i128 tb = p.two_b6;
  i128 linear = checked_mul(tb, g);
  i128 cubic = checked_mul(tb, checked_pow(g, 3));
  i128 quintic = checked_sub(checked_mul(tb, checked_pow(g, 5)), checked_mul(720, pi));
  for (std::int64_t x : p.x) {
    linear = checked_add(linear, 2 * i128(x));
    cubic = checked_add(cubic, checked_mul(2, cubic_weight(x)));
    quintic = checked_add(quintic, checked_mul(2, quintic_weight(x)));
  }
  for (std::int64_t y : p.y) {
    linear = checked_sub(linear, 2 * i128(y));
    cubic = checked_sub(cubic, checked_mul(2, cubic_weight(y)));
    quintic = checked_sub(quintic, checked_mul(2, quintic_weight(y)));
  }
  rep.linear = linear;
  rep.cubic = cubic;
  rep.quintic = quintic;
  return rep;
}

}  // namespace numsg
