#pragma once

// Numerical semigroups of embedding dimension 2..6: construction with
// minimalization, Apery sets, membership, Frobenius number, genus, symmetry.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/arith.hpp"
#include "numsg/error.hpp"

namespace numsg {

inline constexpr std::int64_t kMaxGenerator = 10'000'000;
inline constexpr std::size_t kMaxEdim = 6;

/// Least element of S in each residue class modulo `modulus`.
struct AperyTable {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> values;

  std::int64_t max() const { return *std::max_element(values.begin(), values.end()); }
};

namespace detail {

// Dijkstra over Z_n; arcs r -> (r+d) mod n of weight d. Ties in distance
// pop the smaller residue first, so the run is fully deterministic.
inline std::vector<std::int64_t> residue_distances(std::span<const std::int64_t> gens, std::int64_t n) {
  constexpr std::int64_t unreached = -1;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), unreached);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::int64_t g : gens) {
      const std::int64_t next = (r + g) % n;
      const std::int64_t nd = d + g;
      auto& slot = dist[static_cast<std::size_t>(next)];
      if (slot == unreached || nd < slot) {
        slot = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

inline bool in_table(const std::vector<std::int64_t>& table, std::int64_t x) {
  if (x < 0) return false;
  const auto n = static_cast<std::int64_t>(table.size());
  const std::int64_t w = table[static_cast<std::size_t>(x % n)];
  return w >= 0 && x >= w;
}

}  // namespace detail

/// A numerical semigroup given by its minimal generating set d1 < ... < dm.
/// Immutable after construction; the Apery table modulo d1 is computed once.
class Semigroup {
 public:
  /// Validates and minimalizes `raw`. Redundant generators are dropped
  /// silently; `raw_generators()` keeps the sorted input.
  static Semigroup make(std::span<const std::int64_t> raw) {
    if (raw.empty()) throw error(errc::empty_input, "no generators given");
    std::vector<std::int64_t> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::int64_t v : sorted) {
      if (v < 2) throw error(errc::domain_error, "generators must be >= 2, got " + std::to_string(v));
      if (v > kMaxGenerator) {
        throw error(errc::value_too_large, "generator " + std::to_string(v) + " exceeds 10^7");
      }
    }
    std::int64_t common = 0;
    for (std::int64_t v : sorted) common = std::gcd(common, v);
    if (common != 1) throw error(errc::gcd_not_one, "gcd of generators is " + std::to_string(common));

    std::vector<std::int64_t> unique = sorted;
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    // An element can only be generated by strictly smaller generators, so a
    // single ascending pass decides minimality.
    std::vector<std::int64_t> kept{unique.front()};
    std::vector<std::int64_t> table = detail::residue_distances(kept, kept.front());
    for (std::size_t i = 1; i < unique.size(); ++i) {
      if (detail::in_table(table, unique[i])) continue;
      kept.push_back(unique[i]);
      if (kept.size() > kMaxEdim) {
        throw error(errc::edim_too_large, "embedding dimension exceeds 6");
      }
      table = detail::residue_distances(kept, kept.front());
    }

    Semigroup s;
    s.raw_ = std::move(sorted);
    s.gens_ = std::move(kept);
    s.apery_ = AperyTable{s.gens_.front(), std::move(table)};
    std::optional<u128> pi = u128{1};
    for (std::int64_t g : s.gens_) {
      u128 next;
      if (__builtin_mul_overflow(*pi, static_cast<u128>(g), &next)) {
        pi.reset();
        break;
      }
      pi = next;
    }
    s.pi_ = pi;
    return s;
  }

  static Semigroup make(std::initializer_list<std::int64_t> raw) {
    return make(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  const std::vector<std::int64_t>& raw_generators() const noexcept { return raw_; }
  std::int64_t multiplicity() const noexcept { return gens_.front(); }
  std::size_t edim() const noexcept { return gens_.size(); }

  std::int64_t sigma1() const noexcept { return std::accumulate(gens_.begin(), gens_.end(), std::int64_t{0}); }

  /// Product of the generators; throws Overflow if it does not fit in 128 bits.
  u128 pi() const {
    if (!pi_) throw error(errc::overflow, "product of generators exceeds 128 bits");
    return *pi_;
  }
  const std::optional<u128>& pi_exact() const noexcept { return pi_; }
  double pi_real() const {
    double p = 1.0;
    for (std::int64_t g : gens_) p *= static_cast<double>(g);
    return p;
  }

  /// Apery table modulo the multiplicity.
  const AperyTable& apery() const noexcept { return apery_; }

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    return x >= apery_.values[static_cast<std::size_t>(x % apery_.modulus)];
  }

  bool is_generator(std::int64_t x) const { return std::binary_search(gens_.begin(), gens_.end(), x); }

  friend bool operator==(const Semigroup& a, const Semigroup& b) { return a.gens_ == b.gens_; }

 private:
  Semigroup() = default;

  std::vector<std::int64_t> raw_;
  std::vector<std::int64_t> gens_;
  AperyTable apery_;
  std::optional<u128> pi_;
};

inline Semigroup new_semigroup(std::span<const std::int64_t> raw) { return Semigroup::make(raw); }

/// Apery set of S with respect to an arbitrary element n of S.
inline AperyTable apery_set(const Semigroup& s, std::int64_t n) {
  if (n <= 0 || n > kMaxGenerator || !s.contains(n)) {
    throw error(errc::modulus_not_in_semigroup, std::to_string(n) + " is not a usable nonzero element of S");
  }
  if (n == s.multiplicity()) return s.apery();
  return AperyTable{n, detail::residue_distances(s.generators(), n)};
}

inline bool contains(const Semigroup& s, std::int64_t x) { return s.contains(x); }

inline std::int64_t frobenius(const Semigroup& s) { return s.apery().max() - s.multiplicity(); }

/// Number of gaps: each residue class r contributes (w_r - r) / d1 gaps.
inline std::int64_t genus(const Semigroup& s) {
  const auto& ap = s.apery();
  i128 total = 0;
  for (std::size_t r = 0; r < ap.values.size(); ++r) {
    total += (ap.values[r] - static_cast<std::int64_t>(r)) / ap.modulus;
  }
  return static_cast<std::int64_t>(total);
}

/// Symmetric iff the Apery table is closed under w -> max - w.
inline bool is_symmetric(const Semigroup& s) {
  std::vector<std::int64_t> values = s.apery().values;
  std::sort(values.begin(), values.end());
  const std::int64_t top = values.back();
  return std::all_of(values.begin(), values.end(),
                     [&](std::int64_t w) { return std::binary_search(values.begin(), values.end(), top - w); });
}

inline std::string to_string(const Semigroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.generators()[i]);
  }
  return out + ">";
}

}  // namespace numsg
