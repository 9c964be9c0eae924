#pragma once

// Gluings <a S', d> and detection of the W / W^2 structure of
// six-generated semigroups, with the sharpened bounds g6w and g6w^2.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "numsg/bounds.hpp"
#include "numsg/error.hpp"
#include "numsg/resolution.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

/// One gluing step: S = <a * base, d>.
struct Gluing {
  std::int64_t a = 0;
  Semigroup base;
  std::int64_t d = 0;
};

struct GluingDecomposition {
  enum class Kind { none, w, w2 };

  Kind kind = Kind::none;
  std::int64_t a1 = 0;
  std::int64_t d6 = 0;
  std::optional<Semigroup> inner5;
  std::optional<std::int64_t> a2;
  std::optional<std::int64_t> q5;
  std::optional<Semigroup> inner4;
  // Every component is symmetric and not CI, so the W / W^2 labels apply.
  bool components_symmetric_not_ci = false;
};

inline const char* to_string(GluingDecomposition::Kind k) {
  switch (k) {
    case GluingDecomposition::Kind::none: return "None";
    case GluingDecomposition::Kind::w: return "W";
    case GluingDecomposition::Kind::w2: return "W2";
  }
  return "None";
}

inline Semigroup glue(std::int64_t a, const Semigroup& base, std::int64_t d) {
  if (a <= 1) throw error(errc::domain_error, "gluing factor must exceed 1");
  if (!base.contains(d)) throw error(errc::not_in_base, std::to_string(d) + " is not in " + to_string(base));
  if (base.is_generator(d)) throw error(errc::is_generator, std::to_string(d) + " is a generator of " + to_string(base));
  if (std::gcd(a, d) != 1) throw error(errc::gcd_violation, "gcd(a, d) must be 1");
  std::vector<std::int64_t> gens;
  for (std::int64_t g : base.generators()) {
    if (g > kMaxGenerator / a) throw error(errc::value_too_large, "scaled generator exceeds 10^7");
    gens.push_back(a * g);
  }
  gens.push_back(d);
  Semigroup glued = Semigroup::make(gens);
  if (glued.edim() != base.edim() + 1) throw error(errc::edim_collapse, "glued semigroup lost a generator");
  return glued;
}

/// F(<a S, d>) = a F(S) + (a - 1) d.
constexpr std::int64_t frobenius_of_gluing(std::int64_t a, std::int64_t f_base, std::int64_t d) {
  return a * f_base + (a - 1) * d;
}

/// All gluing decompositions of S, by ascending distinguished generator.
inline std::vector<Gluing> gluing_decompositions(const Semigroup& s) {
  std::vector<Gluing> found;
  const auto& gens = s.generators();
  if (gens.size() < 3) return found;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::int64_t a = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) a = std::gcd(a, gens[j]);
    }
    const std::int64_t d = gens[i];
    if (a <= 1 || std::gcd(a, d) != 1) continue;
    std::vector<std::int64_t> scaled;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) scaled.push_back(gens[j] / a);
    }
    Semigroup base = Semigroup::make(scaled);
    if (base.edim() + 1 != gens.size()) continue;
    if (!base.contains(d) || base.is_generator(d)) continue;
    found.push_back(Gluing{a, std::move(base), d});
  }
  return found;
}

namespace detail {

inline bool symmetric_not_ci(const Semigroup& s) { return is_symmetric(s) && !is_complete_intersection(s); }

}  // namespace detail

inline std::optional<GluingDecomposition> detect_w(const Semigroup& s) {
  if (s.edim() != 6) throw error(errc::wrong_edim, "W detection needs edim 6");
  auto all = gluing_decompositions(s);
  if (all.empty()) return std::nullopt;
  GluingDecomposition dec;
  dec.kind = GluingDecomposition::Kind::w;
  dec.a1 = all.front().a;
  dec.d6 = all.front().d;
  dec.inner5 = all.front().base;
  dec.components_symmetric_not_ci = detail::symmetric_not_ci(s) && detail::symmetric_not_ci(*dec.inner5);
  return dec;
}

/// W^2 if some W decomposition has a 5-generated base that is itself a
/// gluing; otherwise the first W decomposition.
inline std::optional<GluingDecomposition> detect_w2(const Semigroup& s) {
  auto first = detect_w(s);
  if (!first) return first;
  for (const Gluing& outer : gluing_decompositions(s)) {
    auto inner = gluing_decompositions(outer.base);
    if (inner.empty()) continue;
    GluingDecomposition dec;
    dec.kind = GluingDecomposition::Kind::w2;
    dec.a1 = outer.a;
    dec.d6 = outer.d;
    dec.inner5 = outer.base;
    dec.a2 = inner.front().a;
    dec.q5 = inner.front().d;
    dec.inner4 = inner.front().base;
    dec.components_symmetric_not_ci = detail::symmetric_not_ci(s) && detail::symmetric_not_ci(*dec.inner5) &&
                                      detail::symmetric_not_ci(*dec.inner4);
    return dec;
  }
  return first;
}

/// g6w = a1 (lambda5(beta) pi5^{1/4} + d6), pi5 over the base generators.
inline double bound_g6w(const GluingDecomposition& dec, std::int64_t beta_inner) {
  if (dec.kind == GluingDecomposition::Kind::none || !dec.inner5) {
    throw error(errc::wrong_kind, "g6w needs a W decomposition");
  }
  if (is_complete_intersection(*dec.inner5)) throw error(errc::inner_is_ci, to_string(*dec.inner5) + " is CI");
  const double pi5 = dec.inner5->pi_real();
  return static_cast<double>(dec.a1) * (bounds::lambda5(beta_inner) * std::pow(pi5, 0.25) + static_cast<double>(dec.d6));
}

/// g6w^2 = a1 [a2 (lambda4 pi4^{1/3} + q5) + d6].
inline double bound_g6w2(const GluingDecomposition& dec) {
  if (dec.kind != GluingDecomposition::Kind::w2 || !dec.inner4) {
    throw error(errc::wrong_kind, "g6w^2 needs a W^2 decomposition");
  }
  if (is_complete_intersection(*dec.inner4)) throw error(errc::inner_is_ci, to_string(*dec.inner4) + " is CI");
  const double pi4 = dec.inner4->pi_real();
  const double inner = static_cast<double>(*dec.a2) * (bounds::lambda4() * std::cbrt(pi4) + static_cast<double>(*dec.q5));
  return static_cast<double>(dec.a1) * (inner + static_cast<double>(dec.d6));
}

}  // namespace numsg
