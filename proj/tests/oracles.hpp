#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "numsg/semigroup.hpp"

namespace oracle {

/// Membership table for [0, limit] by unbounded knapsack.
inline std::vector<bool> members(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
  in[0] = true;
  for (std::int64_t x = 1; x <= limit; ++x) {
    for (std::int64_t d : gens) {
      if (d <= x && in[static_cast<std::size_t>(x - d)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

/// Every gap lies below (d1 - 1)(dm - 1).
inline std::int64_t gap_limit(const std::vector<std::int64_t>& gens) {
  std::int64_t lo = gens.front(), hi = gens.front();
  for (std::int64_t d : gens) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return (lo - 1) * (hi - 1) + 1;
}

struct GapScan {
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
};

inline GapScan gaps(const std::vector<std::int64_t>& gens) {
  const std::int64_t limit = gap_limit(gens);
  const auto in = members(gens, limit);
  GapScan out;
  for (std::int64_t x = 0; x <= limit; ++x) {
    if (!in[static_cast<std::size_t>(x)]) {
      out.frobenius = x;
      ++out.genus;
    }
  }
  return out;
}

inline bool symmetric(const std::vector<std::int64_t>& gens) {
  const GapScan g = gaps(gens);
  const auto in = members(gens, std::max<std::int64_t>(g.frobenius, 0));
  for (std::int64_t x = 0; x <= g.frobenius; ++x) {
    if (in[static_cast<std::size_t>(x)] == in[static_cast<std::size_t>(g.frobenius - x)]) return false;
  }
  return true;
}

namespace detail {

constexpr std::int64_t kPrime = 1'000'000'007;

inline std::int64_t power_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

inline int rank_mod_p(std::vector<std::vector<std::int64_t>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const std::int64_t inv = power_mod(a[rank][c], kPrime - 2);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % kPrime;
      for (int k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Graded Betti numbers from the squarefree divisor complex
/// D_s = { F subset of gens : s - sum(F) in S }:  beta_i(s) = dim H~_{i-1}(D_s),
/// computed with boundary-matrix ranks mod a large prime. Returns, for i = 1, 2,
/// a map degree -> multiplicity.
struct KoszulBetti {
  std::map<std::int64_t, std::int64_t> first;
  std::map<std::int64_t, std::int64_t> second;
};

inline KoszulBetti koszul_betti(const numsg::Semigroup& s, std::int64_t max_degree) {
  const auto& gens = s.generators();
  const int m = static_cast<int>(gens.size());
  KoszulBetti out;
  for (std::int64_t deg = 0; deg <= max_degree; ++deg) {
    if (!s.contains(deg)) continue;
    std::vector<std::vector<unsigned>> faces(static_cast<std::size_t>(m + 1));
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::int64_t sum = 0;
      int size = 0;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) {
          sum += gens[i];
          ++size;
        }
      }
      if (s.contains(deg - sum)) faces[static_cast<std::size_t>(size)].push_back(mask);
    }
    // Reduced chain complex: C_{-1} has the empty face.
    auto boundary_rank = [&](int k) {  // rank of d_k : C_k -> C_{k-1}, faces of size k+1 -> size k
      const auto& hi = faces[static_cast<std::size_t>(k + 1)];
      const auto& lo = faces[static_cast<std::size_t>(k)];
      if (hi.empty() || lo.empty()) return 0;
      std::vector<std::vector<std::int64_t>> mat(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
      for (std::size_t c = 0; c < hi.size(); ++c) {
        int sign = 0;
        for (int i = 0; i < m; ++i) {
          if (!(hi[c] & (1u << i))) continue;
          const unsigned face = hi[c] & ~(1u << i);
          for (std::size_t r = 0; r < lo.size(); ++r) {
            if (lo[r] == face) mat[r][c] = (sign % 2 == 0) ? 1 : detail::kPrime - 1;
          }
          ++sign;
        }
      }
      return detail::rank_mod_p(mat);
    };
    auto homology = [&](int k) {  // dim H~_k, k >= -1
      const auto dim = static_cast<int>(faces[static_cast<std::size_t>(k + 1)].size());
      const int out_rank = k + 1 >= 1 ? boundary_rank(k) : 0;
      const int in_rank = k + 2 <= m ? boundary_rank(k + 1) : 0;
      return dim - out_rank - in_rank;
    };
    if (const int h0 = homology(0); h0 > 0) out.first[deg] += h0;
    if (m >= 2) {
      if (const int h1 = homology(1); h1 > 0) out.second[deg] += h1;
    }
  }
  return out;
}

/// Argmax of G(b, .) over a uniform grid on [0, 1/2].
template <class G>
double grid_argmax(G&& g, double b, int points) {
  double best_u = 0, best = -1;
  for (int i = 0; i <= points; ++i) {
    const double u = 0.5 * i / points;
    const double v = g(b, u);
    if (v > best) {
      best = v;
      best_u = u;
    }
  }
  return best_u;
}

/// Seeded random generator lists: edim in [min_m, max_m], values in [2, max_value], gcd 1.
inline std::vector<std::int64_t> random_generators(std::mt19937_64& rng, int min_m, int max_m, std::int64_t max_value) {
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (;;) {
    const auto m = draw(min_m, max_m);
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < m; ++i) v.push_back(draw(2, max_value));
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x);
    if (g == 1) return v;
  }
}

}  // namespace oracle
